#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "cattri/combinatorics.hpp"
#include "cattri/oeis.hpp"

namespace {

using namespace cattri;

TEST(BFileParser, CommentsAndBlankLines) {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "0 1\n"
        "1 1\n"
        "  # indented comment\n"
        "2 2\n");
    auto snap = parse_bfile(in, "A000108");
    EXPECT_EQ(snap.id, "A000108");
    ASSERT_EQ(snap.entries.size(), 3u);
    EXPECT_EQ(snap.entries[2].first, 2);
    EXPECT_EQ(snap.entries[2].second, 2);
}

TEST(BFileParser, RejectsMalformedLines) {
    std::istringstream missing("0 1\n1\n");
    EXPECT_THROW(parse_bfile(missing, "X"), std::runtime_error);
    std::istringstream extra("0 1 9\n");
    EXPECT_THROW(parse_bfile(extra, "X"), std::runtime_error);
    std::istringstream nonint("0 banana\n");
    EXPECT_THROW(parse_bfile(nonint, "X"), std::invalid_argument);
    std::istringstream unsorted("2 3\n1 1\n");
    EXPECT_THROW(parse_bfile(unsorted, "X"), std::runtime_error);
    std::istringstream repeated("1 1\n1 2\n");
    EXPECT_THROW(parse_bfile(repeated, "X"), std::runtime_error);
}

TEST(BFileParser, MissingFileIsAnError) {
    EXPECT_THROW(load_bfile("/nonexistent/dir/A000000.bfile", "A000000"),
                 std::runtime_error);
}

TEST(SnapshotCheck, BundledSequencesAgree) {
    const std::string dir = std::string(CATTRI_REPO_DIR) + "/data";
    for (const auto& [id, gen] : oeis_generators()) {
        auto snap = load_bfile(dir + "/" + id + ".bfile", id);
        auto result = check_sequence(snap, gen, 100);
        EXPECT_TRUE(result.pass()) << id;
        EXPECT_EQ(result.compared, 101) << id;
        EXPECT_FALSE(result.truncated) << id;
    }
}

TEST(SnapshotCheck, FullSnapshotDepth) {
    const std::string dir = std::string(CATTRI_REPO_DIR) + "/data";
    auto snap = load_bfile(dir + "/A000984.bfile", "A000984");
    auto result =
        check_sequence(snap, [](long n) { return central_binomial(n); }, 120);
    EXPECT_TRUE(result.pass());
    EXPECT_EQ(result.compared, 121);
}

TEST(SnapshotCheck, TruncationIsReportedNotFatal) {
    std::istringstream in("0 1\n1 1\n2 2\n3 5\n4 14\n");
    auto snap = parse_bfile(in, "A000108");
    auto result = check_sequence(snap, [](long n) { return catalan(n); }, 10);
    EXPECT_TRUE(result.pass());
    EXPECT_TRUE(result.truncated);
    EXPECT_EQ(result.compared, 5);
}

TEST(SnapshotCheck, MismatchesCarryBothValues) {
    std::istringstream in("0 1\n1 1\n2 99\n");
    auto snap = parse_bfile(in, "A000108");
    auto result = check_sequence(snap, [](long n) { return catalan(n); }, 2);
    EXPECT_FALSE(result.pass());
    ASSERT_EQ(result.mismatches.size(), 1u);
    EXPECT_EQ(result.mismatches[0].index, 2);
    EXPECT_EQ(result.mismatches[0].snapshot_value, "99");
    EXPECT_EQ(result.mismatches[0].computed_value, "2");
}

TEST(SnapshotCheck, RangeLimitIsRespected) {
    std::istringstream in("0 1\n1 1\n2 2\n3 5\n");
    auto snap = parse_bfile(in, "A000108");
    auto result = check_sequence(snap, [](long n) { return catalan(n); }, 1);
    EXPECT_EQ(result.compared, 2);
    EXPECT_FALSE(result.truncated);
}

}  // namespace
