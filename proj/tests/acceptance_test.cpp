// Acceptance suite: one test per shipping criterion, each printing a
// single [ACCEPT] pass/fail line. All comparisons are exact; the
// runtime bounds are asserted, not just observed.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cattri/combinatorics.hpp"
#include "cattri/lattice.hpp"
#include "cattri/msum.hpp"
#include "cattri/oeis.hpp"
#include "cattri/records.hpp"
#include "cattri/verify.hpp"

namespace {

using namespace cattri;

class Acceptance : public ::testing::Test {
  protected:
    void begin(int criterion, std::string label) {
        criterion_ = criterion;
        label_ = std::move(label);
        start_ = std::chrono::steady_clock::now();
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

    void expect_pass(const verification_report& r) {
        EXPECT_TRUE(r.pass()) << to_json_line(r);
    }

    void TearDown() override {
        std::printf("[ACCEPT] criterion %2d (%s): %s\n", criterion_,
                    label_.c_str(), HasFailure() ? "FAIL" : "PASS");
        std::fflush(stdout);
    }

  private:
    int criterion_ = 0;
    std::string label_;
    std::chrono::steady_clock::time_point start_;
};

TEST_F(Acceptance, Criterion01WeightOneClosedForm) {
    begin(1, "weight-1 alternating sum equals its closed form, n <= 30");
    auto r = verify_theorem1(30);
    expect_pass(r);
    EXPECT_EQ(r.instances, 31);
    EXPECT_LT(seconds(), 5.0);
}

TEST_F(Acceptance, Criterion02DivisibilityOfWeightedSums) {
    begin(2, "Fuss-Catalan and central binomial divide S(2n, m), n <= 20, m <= 5");
    auto reports = verify_divisibility_thms(20, 5);
    ASSERT_EQ(reports.size(), 2u);
    for (const auto& r : reports) {
        expect_pass(r);
        EXPECT_EQ(r.instances, 21 * 5);
    }
    EXPECT_LT(seconds(), 30.0);
}

TEST_F(Acceptance, Criterion03WeightZeroMsumClosedForm) {
    begin(3, "weight-0 M-sum closed form, n <= 12, j <= n");
    auto r = verify_lemma1(12);
    expect_pass(r);
    EXPECT_EQ(r.instances, 91);
    EXPECT_LT(seconds(), 5.0);
}

TEST_F(Acceptance, Criterion04StructuralIdentities) {
    begin(4, "M-sum structural identities EQ7/EQ8/EQ9/EQ16/EQ20");
    expect_pass(verify_eq7(12, 4));
    expect_pass(verify_eq8(10));
    expect_pass(verify_eq9(10));
    expect_pass(verify_eq16(10));
    expect_pass(verify_eq20(8, 3));
    EXPECT_LT(seconds(), 20.0);
}

TEST_F(Acceptance, Criterion05LiftedKernelClosedForms) {
    begin(5, "Q-kernel M-sum closed forms at weights 0 and 1, n <= 10");
    for (long n = 0; n <= 10; ++n) {
        std::vector<long> a_values = {0, 1, 2, 3};
        if (std::find(a_values.begin(), a_values.end(), 2 * n) == a_values.end())
            a_values.push_back(2 * n);
        for (long a : a_values)
            for (long j = 0; j <= n; ++j) {
                EXPECT_EQ(msum({kernel_q(a), 2 * n, j, 0}), closed_form_mq0(n, j, a))
                    << "weight 0, n=" << n << " j=" << j << " a=" << a;
                EXPECT_EQ(msum({kernel_q(a), 2 * n, j, 1}), closed_form_mq1(n, j, a))
                    << "weight 1, n=" << n << " j=" << j << " a=" << a;
            }
    }
    EXPECT_LT(seconds(), 20.0);
}

TEST_F(Acceptance, Criterion06PathCountsMatchClosedForms) {
    begin(6, "Schroeder DP vs closed form, T-number identity, totals");
    auto reports = verify_schroeder(6, 6, {1, 2, 3});
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].claim, "THM5");
    EXPECT_EQ(reports[1].claim, "THM4");
    EXPECT_EQ(reports[2].claim, "EQ80");
    for (const auto& r : reports) expect_pass(r);
    EXPECT_LT(seconds(), 10.0);
}

TEST_F(Acceptance, Criterion07DivisibilitySweeps) {
    begin(7, "divisibility and integrality sweeps, n and t up to 200");
    expect_pass(verify_prop1(40));
    expect_pass(verify_prop2(200));
    expect_pass(verify_prop3(200, 200));
    expect_pass(verify_prop4(200, 200));
    expect_pass(verify_prop5(200, 200));
    expect_pass(verify_remark1(200, 200));
    EXPECT_LT(seconds(), 10.0);
}

TEST_F(Acceptance, Criterion08SummandDecomposition) {
    begin(8, "weight-1 summand integrality, split, and reconstruction, n <= 10");
    expect_pass(verify_n_decomposition(10));
    EXPECT_LT(seconds(), 10.0);
}

TEST_F(Acceptance, Criterion09OracleCrossChecks) {
    begin(9, "path DP reproduces the triangle rows and sequence prefixes");
    const std::vector<std::vector<long>> rows = {
        {1},
        {1, 1},
        {1, 2, 2},
        {1, 3, 5, 5},
        {1, 4, 9, 14, 14},
        {1, 5, 14, 28, 42, 42},
        {1, 6, 20, 48, 90, 132, 132},
    };
    for (size_t n = 0; n < rows.size(); ++n)
        for (size_t k = 0; k < rows[n].size(); ++k)
            EXPECT_EQ(count_catalan_paths(long(n), long(k)), rows[n][k])
                << "n=" << n << " k=" << k;

    const long catalan_prefix[] = {1, 1, 2, 5, 14};
    const long fuss3_prefix[] = {1, 1, 3, 12, 55};
    const long central_prefix[] = {1, 2, 6, 20, 70};
    for (long n = 0; n <= 4; ++n) {
        EXPECT_EQ(catalan(n), catalan_prefix[n]);
        EXPECT_EQ(fuss_catalan3(n), fuss3_prefix[n]);
        EXPECT_EQ(central_binomial(n), central_prefix[n]);
    }
}

TEST_F(Acceptance, Criterion10HarnessCanFail) {
    begin(10, "a corrupted closed form is caught with a stable counterexample");
    auto mutated = [](long n) -> Int {
        Int factor = Int(2) * n * n + n + 2;  // off by one in the last term
        return Int(parity_sign(n)) * fuss_catalan3(n) * catalan(n) * factor;
    };
    auto first = verify_theorem1_against(5, mutated);
    auto second = verify_theorem1_against(5, mutated);
    EXPECT_FALSE(first.pass());
    ASSERT_GE(first.counterexamples.size(), 1u);
    const named_values want_params = {{"n", "0"}};
    EXPECT_EQ(first.counterexamples[0].params, want_params);
    EXPECT_EQ(first.counterexamples[0].expected, "2");
    EXPECT_EQ(first.counterexamples[0].actual, "1");
    ASSERT_EQ(second.counterexamples.size(), first.counterexamples.size());
    EXPECT_EQ(second.counterexamples[0].params, first.counterexamples[0].params);
    EXPECT_EQ(second.counterexamples[0].expected, first.counterexamples[0].expected);
    EXPECT_EQ(second.counterexamples[0].actual, first.counterexamples[0].actual);
}

TEST_F(Acceptance, Criterion11SequenceSnapshots) {
    begin(11, "bundled snapshots match generated sequences to index 100");
    const std::string dir = std::string(CATTRI_REPO_DIR) + "/data";
    for (const auto& [id, gen] : oeis_generators()) {
        auto snapshot = load_bfile(dir + "/" + id + ".bfile", id);
        auto result = check_sequence(snapshot, gen, 100);
        EXPECT_TRUE(result.pass()) << id;
        EXPECT_EQ(result.compared, 101) << id;
    }
}

}  // namespace
