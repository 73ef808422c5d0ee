#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cattri/records.hpp"

namespace {

using namespace cattri;

struct cli_result {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

cli_result run_cli(const std::string& args,
                   const std::vector<std::pair<std::string, std::string>>& env = {}) {
    std::string cmd;
    for (const auto& [name, value] : env) cmd += name + "=" + value + " ";
    cmd += std::string(CATTRI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr) << cmd;
    cli_result result;
    if (!pipe) return result;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

const std::string kDataDir = std::string(CATTRI_REPO_DIR) + "/data";

TEST(ComputeCommand, TriangleCsvGolden) {
    auto r = run_cli("compute triangle --rows 6 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output,
              "c0,c1,c2,c3,c4,c5,c6\n"
              "1\n"
              "1,1\n"
              "1,2,2\n"
              "1,3,5,5\n"
              "1,4,9,14,14\n"
              "1,5,14,28,42,42\n"
              "1,6,20,48,90,132,132\n");
    auto lines = lines_of(r.output);
    ASSERT_EQ(lines.size(), 8u);  // header plus rows 0..6
    EXPECT_EQ(lines.back(), "1,6,20,48,90,132,132");
}

TEST(ComputeCommand, SsumValue) {
    auto r = run_cli("compute ssum --n 2 --m 1");
    EXPECT_EQ(r.exit_code, 0);
    auto lines = lines_of(r.output);
    ASSERT_EQ(lines.size(), 1u);
    auto record = table_from_json(lines[0]);
    ASSERT_EQ(record.rows.size(), 1u);
    EXPECT_EQ(record.rows[0][0], "66");
}

TEST(ComputeCommand, SchroederBaseRowValue) {
    auto r = run_cli("compute schr --n 1 --m 5 --j 1 --l 2");
    EXPECT_EQ(r.exit_code, 0);
    auto record = table_from_json(lines_of(r.output).at(0));
    EXPECT_EQ(record.rows.at(0).at(0), "4");
}

TEST(ComputeCommand, SequencePrefixCsv) {
    auto r = run_cli("compute catalan --n-max 4 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output, "index,value\n0,1\n1,1\n2,2\n3,5\n4,14\n");
}

TEST(ComputeCommand, SingleSequenceValue) {
    auto r = run_cli("compute fuss3 --n 4");
    EXPECT_EQ(r.exit_code, 0);
    auto record = table_from_json(lines_of(r.output).at(0));
    EXPECT_EQ(record.rows.at(0).at(0), "55");
}

TEST(ComputeCommand, PathListing) {
    auto r = run_cli("compute paths --x 1 --y 2 --l 2 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output, "path\nND\nNNE\n");
}

TEST(ComputeCommand, UnknownObjectIsUsageError) {
    auto r = run_cli("compute pentagon --n 3");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("unknown compute object"), std::string::npos);
}

TEST(ComputeCommand, MissingParameterIsUsageError) {
    auto r = run_cli("compute tnum --n 4");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("--j"), std::string::npos);
}

TEST(ComputeCommand, ConflictingSequenceFlags) {
    auto r = run_cli("compute catalan --n 3 --n-max 5");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(VerifyCommand, SingleClaimPasses) {
    auto r = run_cli("verify THM1 --n-max 10");
    EXPECT_EQ(r.exit_code, 0);
    auto lines = lines_of(r.output);
    ASSERT_EQ(lines.size(), 1u);
    auto report = report_from_json(lines[0]);
    EXPECT_EQ(report.claim, "THM1");
    EXPECT_TRUE(report.pass());
    EXPECT_EQ(report.instances, 11);
}

TEST(VerifyCommand, AllEmitsTwentyReports) {
    auto r = run_cli("verify all --n-max 2 --m-max 1 --t-max 2 --a-max 1");
    EXPECT_EQ(r.exit_code, 0);
    auto lines = lines_of(r.output);
    ASSERT_EQ(lines.size(), 20u);
    for (const auto& line : lines) EXPECT_TRUE(report_from_json(line).pass());
}

TEST(VerifyCommand, CsvFormat) {
    auto r = run_cli("verify LEMMA1 --n-max 3 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    auto lines = lines_of(r.output);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0], "claim,verdict,instances,counterexamples,elapsed_ms");
    EXPECT_EQ(lines[1].rfind("LEMMA1,pass,", 0), 0u);
}

TEST(VerifyCommand, UnknownClaimIsUsageError) {
    auto r = run_cli("verify THM99");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("unknown claim id"), std::string::npos);
}

TEST(OeisCommand, BundledSnapshotsPass) {
    for (const std::string id : {"A000108", "A001764", "A000984"}) {
        auto r = run_cli("oeis-check " + id + " --n-max 10 --data-dir " + kDataDir);
        EXPECT_EQ(r.exit_code, 0) << id;
        auto report = report_from_json(lines_of(r.output).at(0));
        EXPECT_EQ(report.claim, id);
        EXPECT_EQ(report.instances, 11);
    }
}

TEST(OeisCommand, EnvironmentVariableSetsDataDir) {
    auto r = run_cli("oeis-check A000108 --n-max 4",
                     {{"CATTRI_DATA_DIR", kDataDir}});
    EXPECT_EQ(r.exit_code, 0);
}

TEST(OeisCommand, TruncationIsNotedAndPasses) {
    auto r = run_cli("oeis-check A000108 --n-max 500 --data-dir " + kDataDir);
    EXPECT_EQ(r.exit_code, 0);
    auto report = report_from_json(lines_of(r.output).at(0));
    EXPECT_EQ(report.instances, 121);
    EXPECT_NE(report.note.find("snapshot shorter"), std::string::npos);
}

TEST(OeisCommand, MissingSnapshotIsUsageError) {
    auto r = run_cli("oeis-check A000108 --data-dir /nonexistent");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("cannot open snapshot file"), std::string::npos);
}

TEST(OeisCommand, MismatchExitsOne) {
    auto dir = std::filesystem::temp_directory_path() / "cattri_cli_test_data";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "A000108.bfile") << "0 1\n1 1\n2 99\n";
    auto r = run_cli("oeis-check A000108 --n-max 2 --data-dir " + dir.string());
    std::filesystem::remove_all(dir);
    EXPECT_EQ(r.exit_code, 1);
    auto report = report_from_json(lines_of(r.output).at(0));
    EXPECT_FALSE(report.pass());
    ASSERT_EQ(report.counterexamples.size(), 1u);
    EXPECT_EQ(report.counterexamples[0].expected, "99");
    EXPECT_EQ(report.counterexamples[0].actual, "2");
}

TEST(OeisCommand, UnknownSequenceIsUsageError) {
    auto r = run_cli("oeis-check A999999 --data-dir " + kDataDir);
    EXPECT_EQ(r.exit_code, 2);
}

TEST(TopLevel, SeedManifestListsEveryClaim) {
    auto r = run_cli("--seed-manifest");
    EXPECT_EQ(r.exit_code, 0);
    auto lines = lines_of(r.output);
    ASSERT_EQ(lines.size(), 20u);
    for (const auto& line : lines) {
        auto parsed = ordered_json::parse(line);
        EXPECT_EQ(parsed.at("kind"), "claim");
        EXPECT_TRUE(is_claim_id(parsed.at("id").get<std::string>()));
    }
}

TEST(TopLevel, NoSubcommandPrintsHelpAndFails) {
    auto r = run_cli("");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("compute"), std::string::npos);
}

TEST(TopLevel, HelpExitsZero) {
    auto r = run_cli("--help");
    EXPECT_EQ(r.exit_code, 0);
}

}  // namespace
