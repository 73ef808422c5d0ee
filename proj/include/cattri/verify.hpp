#pragma once

// Sweep harness: every identity and divisibility statement in the
// catalog is a claim with a checker that walks a parameter grid and
// collects counterexamples. Failures are report data, never exceptions;
// a sweep always runs to completion so all counterexamples surface.
//
// Checkers verify divisibility with explicit remainder tests instead of
// the abort-on-violation division helpers, for the same reason.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cattri/combinatorics.hpp"
#include "cattri/integer.hpp"
#include "cattri/lattice.hpp"
#include "cattri/msum.hpp"

namespace cattri {

using named_values = std::vector<std::pair<std::string, std::string>>;

struct counterexample {
    named_values params;
    std::string expected;
    std::string actual;
};

struct verification_report {
    std::string claim;
    std::string description;
    named_values ranges;
    long long instances = 0;
    std::vector<counterexample> counterexamples;
    long long elapsed_ms = 0;
    std::string note;

    bool pass() const { return counterexamples.empty(); }
};

// Range overrides supplied by callers (the CLI maps its flags here).
// Unset fields fall back to each claim's documented defaults. For the
// path claims m_max bounds the extra rows above the m = l*n floor, and
// l / j pin the swept slope set or statistic to a single value.
struct sweep_options {
    std::optional<long> n_max;
    std::optional<long> m_max;
    std::optional<long> t_max;
    std::optional<long> a_max;
    std::optional<long> l;
    std::optional<long> j;
};

namespace detail {

class stopwatch {
  public:
    long long ms() const {
        using namespace std::chrono;
        return duration_cast<milliseconds>(steady_clock::now() - t0_).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline std::pair<std::string, std::string> named(const char* name, long v) {
    return {name, std::to_string(v)};
}

inline std::pair<std::string, std::string> span(const char* name, long lo, long hi) {
    return {name, std::to_string(lo) + ".." + std::to_string(hi)};
}

// j sweep 0..hi, or a single pinned value (skipped when out of range).
struct j_range {
    long lo, hi;
    j_range(std::optional<long> pin, long max) {
        if (pin) {
            lo = *pin;
            hi = (*pin >= 0 && *pin <= max) ? *pin : *pin - 1;  // empty if out of range
        } else {
            lo = 0;
            hi = max;
        }
    }
};

inline std::string l_set_string(const std::vector<long>& ls) {
    std::string s;
    for (size_t i = 0; i < ls.size(); ++i)
        s += (i ? "," : "") + std::to_string(ls[i]);
    return s;
}

}  // namespace detail

// Compares direct_sum_s(n, 1) against an arbitrary closed form. The
// production sweep passes closed_form_s1; the harness self-test passes
// a deliberately corrupted form to prove the machinery can fail.
inline verification_report verify_theorem1_against(
    long n_max, const std::function<Int(long)>& closed_form) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "THM1";
    r.description =
        "weight-1 alternating triangle convolution equals its product closed form";
    r.ranges = {detail::span("n", 0, n_max)};
    for (long n = 0; n <= n_max; ++n) {
        Int lhs = direct_sum_s(n, 1);
        Int rhs = closed_form(n);
        ++r.instances;
        if (lhs != rhs)
            r.counterexamples.push_back(
                {{detail::named("n", n)}, to_decimal(rhs), to_decimal(lhs)});
    }
    r.elapsed_ms = timer.ms();
    return r;
}

inline verification_report verify_theorem1(long n_max) {
    return verify_theorem1_against(n_max, [](long n) { return closed_form_s1(n); });
}

// One report per divisor family: fuss_catalan3(n) | S(2n, m) and
// central_binomial(n) | S(2n, m).
inline std::vector<verification_report> verify_divisibility_thms(long n_max,
                                                                 long m_max) {
    detail::stopwatch timer;
    verification_report fuss, central;
    fuss.claim = "THM2";
    fuss.description = "order-three Fuss-Catalan number divides the weighted S sum";
    central.claim = "THM3";
    central.description = "central binomial coefficient divides the weighted S sum";
    fuss.ranges = central.ranges = {detail::span("n", 0, n_max),
                                    detail::span("m", 1, m_max)};
    for (long n = 0; n <= n_max; ++n) {
        Int d_fuss = fuss_catalan3(n);
        Int d_central = central_binomial(n);
        for (long m = 1; m <= m_max; ++m) {
            Int s = direct_sum_s(n, m);
            named_values params = {detail::named("n", n), detail::named("m", m)};
            ++fuss.instances;
            if (!divides(d_fuss, s))
                fuss.counterexamples.push_back(
                    {params, "multiple of " + to_decimal(d_fuss), to_decimal(s)});
            ++central.instances;
            if (!divides(d_central, s))
                central.counterexamples.push_back(
                    {params, "multiple of " + to_decimal(d_central), to_decimal(s)});
        }
    }
    fuss.elapsed_ms = central.elapsed_ms = timer.ms();
    return {fuss, central};
}

inline verification_report verify_lemma1(long n_max,
                                         std::optional<long> j_pin = {}) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "LEMMA1";
    r.description = "weight-0 M-sum of the S kernel equals its closed form";
    r.ranges = {detail::span("n", 0, n_max), detail::span("j", 0, n_max)};
    for (long n = 0; n <= n_max; ++n) {
        detail::j_range jr(j_pin, n);
        for (long j = jr.lo; j <= jr.hi; ++j) {
            Int lhs = msum({kernel_s(), 2 * n, j, 0});
            Int rhs = closed_form_ms0(n, j);
            ++r.instances;
            if (lhs != rhs)
                r.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("j", j)},
                     to_decimal(rhs), to_decimal(lhs)});
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

// Integrality of T(n, j) along both product forms, their agreement, and
// the cross-multiplied identity tying the two together.
inline verification_report verify_prop1(long n_max, std::optional<long> j_pin = {}) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "PROP1";
    r.description = "t_number integrality via both forms plus their cross identity";
    r.ranges = {detail::span("n", 0, n_max), detail::span("j", 0, n_max)};

    auto mismatch = [&](long n, long j, const char* check, const std::string& want,
                        const std::string& got) {
        r.counterexamples.push_back({{detail::named("n", n), detail::named("j", j),
                                      {"check", check}},
                                     want, got});
    };

    // n = 0 exists only through the first form.
    if (n_max >= 0 && (!j_pin || *j_pin == 0)) {
        ++r.instances;
        Int num = binomial(1, 0) * binomial(1, 1);
        if (!divides(1, num) || num != 1)
            mismatch(0, 0, "first-form", "1", to_decimal(num));
    }

    for (long n = 1; n <= n_max; ++n) {
        detail::j_range jr(j_pin, n);
        for (long j = jr.lo; j <= jr.hi; ++j) {
            ++r.instances;
            Int num1 = binomial(2 * n + j, j) * binomial(2 * n + 1, n + j + 1);
            Int num2 = binomial(n, j) * binomial(2 * n + j, n - 1);
            if (!divides(2 * n + 1, num1)) {
                mismatch(n, j, "first-form-integrality",
                         "multiple of " + std::to_string(2 * n + 1), to_decimal(num1));
                continue;
            }
            if (!divides(n, num2)) {
                mismatch(n, j, "second-form-integrality",
                         "multiple of " + std::to_string(n), to_decimal(num2));
                continue;
            }
            Int t1 = num1 / Int(2 * n + 1);
            Int t2 = num2 / Int(n);
            if (t1 != t2) mismatch(n, j, "forms-agree", to_decimal(t1), to_decimal(t2));
            // cross-multiplied: n * num1 == (2n+1) * num2
            Int lhs = Int(n) * num1;
            Int rhs = Int(2 * n + 1) * num2;
            if (lhs != rhs) mismatch(n, j, "cross-identity", to_decimal(rhs), to_decimal(lhs));
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

inline verification_report verify_prop2(long n_max) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "PROP2";
    r.description = "(n+1)(2n+1) divides twice the order-three ballot numerator";
    r.ranges = {detail::span("n", 0, n_max)};
    for (long n = 0; n <= n_max; ++n) {
        ++r.instances;
        Int num = Int(2) * binomial(3 * n, n);
        Int den = Int(n + 1) * Int(2 * n + 1);
        if (!divides(den, num))
            r.counterexamples.push_back({{detail::named("n", n)},
                                         "multiple of " + to_decimal(den),
                                         to_decimal(num)});
    }
    r.elapsed_ms = timer.ms();
    return r;
}

namespace detail {

inline verification_report divisibility_grid(
    const char* claim, const char* description, long n_max, long t_max,
    const std::function<Int(long, long)>& product) {
    stopwatch timer;
    verification_report r;
    r.claim = claim;
    r.description = description;
    r.ranges = {span("n", 0, n_max), span("t", 0, t_max)};
    for (long n = 0; n <= n_max; ++n)
        for (long t = 0; t <= t_max; ++t) {
            ++r.instances;
            Int num = product(n, t);
            if (!divides(2 * n + 1, num))
                r.counterexamples.push_back(
                    {{named("n", n), named("t", t)},
                     "multiple of " + std::to_string(2 * n + 1), to_decimal(num)});
        }
    r.elapsed_ms = timer.ms();
    return r;
}

}  // namespace detail

inline verification_report verify_prop3(long n_max, long t_max) {
    return detail::divisibility_grid(
        "PROP3", "2n+1 divides t*binom(2n+t, t)", n_max, t_max,
        [](long n, long t) -> Int { return Int(t) * binomial(2 * n + t, t); });
}

inline verification_report verify_prop4(long n_max, long t_max) {
    return detail::divisibility_grid(
        "PROP4", "2n+1 divides binom(3n, n+t)*binom(2n+t, 2n)", n_max, t_max,
        [](long n, long t) -> Int {
            return binomial(3 * n, n + t) * binomial(2 * n + t, 2 * n);
        });
}

inline verification_report verify_prop5(long n_max, long t_max) {
    return detail::divisibility_grid(
        "PROP5", "2n+1 divides binom(3n+1, n+t+1)*binom(2n+t, 2n)", n_max, t_max,
        [](long n, long t) -> Int {
            return binomial(3 * n + 1, n + t + 1) * binomial(2 * n + t, 2 * n);
        });
}

inline verification_report verify_remark1(long n_max, long t_max) {
    return detail::divisibility_grid(
        "REMARK1", "2n+1 divides binom(3n, n+t+1)*binom(2n+t, 2n)", n_max, t_max,
        [](long n, long t) -> Int {
            return binomial(3 * n, n + t + 1) * binomial(2 * n + t, 2 * n);
        });
}

// lcm(binom(a+n, a), binom(2n, n)) divides Q(2n, m, a); the grid also
// visits a = 2n for each n when the a range does not already reach it.
inline verification_report verify_q_lcm(long n_max, long m_max, long a_max) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "Q_LCM";
    r.description = "lcm of the two binomial divisors divides the weighted Q sum";
    r.ranges = {detail::span("n", 0, n_max), detail::span("m", 1, m_max),
                detail::span("a", 0, a_max)};
    r.note = "each n additionally checks a = 2n";
    for (long n = 0; n <= n_max; ++n) {
        std::vector<long> a_values;
        for (long a = 0; a <= a_max; ++a) a_values.push_back(a);
        if (2 * n > a_max) a_values.push_back(2 * n);
        for (long a : a_values) {
            Int divisor = lcm_int(binomial(a + n, a), central_binomial(n));
            for (long m = 1; m <= m_max; ++m) {
                ++r.instances;
                Int q = direct_sum_q(n, m, a);
                if (!divides(divisor, q))
                    r.counterexamples.push_back(
                        {{detail::named("n", n), detail::named("m", m),
                          detail::named("a", a)},
                         "multiple of " + to_decimal(divisor), to_decimal(q)});
            }
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

inline verification_report verify_eq7(long n_max, long m_max) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "EQ7";
    r.description = "the weighted S sum is the j=0 M-sum one weight level down";
    r.ranges = {detail::span("n", 0, n_max), detail::span("m", 1, m_max)};
    for (long n = 0; n <= n_max; ++n)
        for (long m = 1; m <= m_max; ++m) {
            ++r.instances;
            Int lhs = direct_sum_s(n, m);
            Int rhs = msum({kernel_s(), 2 * n, 0, m - 1});
            if (lhs != rhs)
                r.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("m", m)},
                     to_decimal(rhs), to_decimal(lhs)});
        }
    r.elapsed_ms = timer.ms();
    return r;
}

// The t-recurrence, exercised for the S kernel and the Q kernel at
// a in {0, 1, 2, 2n}, weight levels t in {1, 2}.
inline verification_report verify_eq8(long n_max, std::optional<long> j_pin = {}) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "EQ8";
    r.description = "M-sum weight recurrence over the S and Q kernel families";
    r.ranges = {detail::span("n", 0, n_max), detail::span("j", 0, n_max),
                detail::span("t", 1, 2), {"kernel", "S,Q(0),Q(1),Q(2),Q(2n)"}};
    for (long n = 0; n <= n_max; ++n) {
        struct entry {
            const char* label;
            kernel k;
        };
        const entry kernels[] = {
            {"S", kernel_s()},       {"Q(0)", kernel_q(0)}, {"Q(1)", kernel_q(1)},
            {"Q(2)", kernel_q(2)},   {"Q(2n)", kernel_q(2 * n)},
        };
        detail::j_range jr(j_pin, n);
        for (const auto& [label, k] : kernels)
            for (long j = jr.lo; j <= jr.hi; ++j)
                for (long t = 1; t <= 2; ++t) {
                    ++r.instances;
                    Int lhs = msum({k, 2 * n, j, t});
                    Int rhs = recurrence_rhs({k, 2 * n, j, t});
                    if (lhs != rhs)
                        r.counterexamples.push_back(
                            {{{"kernel", label}, detail::named("n", n),
                              detail::named("j", j), detail::named("t", t)},
                             to_decimal(rhs), to_decimal(lhs)});
                }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

// Lifting identity in its concrete S1-from-S2 instance (weight pair
// parameter a = 1).
inline verification_report verify_eq9(long n_max, std::optional<long> j_pin = {}) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "EQ9";
    r.description = "kernel lifting identity: S1 M-sum from S2 M-sums at a = 1";
    r.ranges = {detail::span("n", 0, n_max), detail::span("j", 0, n_max)};
    for (long n = 0; n <= n_max; ++n) {
        detail::j_range jr(j_pin, n);
        for (long j = jr.lo; j <= jr.hi; ++j) {
            ++r.instances;
            Int lhs = msum({kernel_s1(), 2 * n, j, 0});
            Int rhs = lift_identity_rhs(kernel_s2(), 2 * n, j, 1);
            if (lhs != rhs)
                r.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("j", j)},
                     to_decimal(rhs), to_decimal(lhs)});
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

inline verification_report verify_eq16(long n_max, std::optional<long> j_pin = {}) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "EQ16";
    r.description = "S1 M-sum is (2n+1)^2 times the S M-sum at weight 0";
    r.ranges = {detail::span("n", 0, n_max), detail::span("j", 0, n_max)};
    for (long n = 0; n <= n_max; ++n) {
        detail::j_range jr(j_pin, n);
        for (long j = jr.lo; j <= jr.hi; ++j) {
            ++r.instances;
            Int lhs = Int(2 * n + 1) * Int(2 * n + 1) * msum({kernel_s(), 2 * n, j, 0});
            Int rhs = msum({kernel_s1(), 2 * n, j, 0});
            if (lhs != rhs)
                r.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("j", j)},
                     to_decimal(rhs), to_decimal(lhs)});
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

// Two code paths to the same sum: the S2 kernel under the binomial
// weight versus the Q sum with its weight parameter at 2n.
inline verification_report verify_eq20(long n_max, long m_max) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "EQ20";
    r.description = "weighted S2 sum coincides with the Q sum at weight parameter 2n";
    r.ranges = {detail::span("n", 0, n_max), detail::span("m", 1, m_max)};
    for (long n = 0; n <= n_max; ++n)
        for (long m = 1; m <= m_max; ++m) {
            ++r.instances;
            Int lhs = weighted_sum(kernel_s2(), 2 * n, m);
            Int rhs = direct_sum_q(n, m, 2 * n);
            if (lhs != rhs)
                r.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("m", m)},
                     to_decimal(rhs), to_decimal(lhs)});
        }
    r.elapsed_ms = timer.ms();
    return r;
}

// Rational summand family behind the weight-1 S M-sum: integrality,
// two-part decomposition, and the reconstruction of the M-sum itself.
inline verification_report verify_n_decomposition(long n_max) {
    detail::stopwatch timer;
    verification_report r;
    r.claim = "N_INTEGRALITY";
    r.description =
        "weight-1 M-sum summand family: integer values, two-part split, "
        "and M-sum reconstruction";
    r.ranges = {detail::span("n", 0, n_max)};

    for (long n = 0; n <= n_max; ++n)
        for (long t = 0; t <= n; ++t)
            for (long j = 0; j <= t; ++j) {
                ++r.instances;
                named_values params = {detail::named("n", n), detail::named("j", j),
                                       detail::named("t", t)};
                Rat value = ms1_summand(n, j, t);
                if (value.get_den() != 1) {
                    params.push_back({"check", "integrality"});
                    r.counterexamples.push_back(
                        {params, "an integer", value.get_str()});
                    continue;
                }
                Int part1_num = binomial(3 * n, n + t) * binomial(2 * n + t, 2 * n);
                Int part2_num =
                    binomial(3 * n, n + t + 1) * binomial(2 * n + t, 2 * n);
                if (!divides(2 * n + 1, part1_num) || !divides(2 * n + 1, part2_num)) {
                    params.push_back({"check", "part-divisibility"});
                    r.counterexamples.push_back(
                        {params, "multiples of " + std::to_string(2 * n + 1),
                         to_decimal(part1_num) + " and " + to_decimal(part2_num)});
                    continue;
                }
                Int whole = ms1_summand_part1(n, j, t) + ms1_summand_part2(n, j, t);
                if (Rat(whole) != value) {
                    params.push_back({"check", "decomposition"});
                    r.counterexamples.push_back(
                        {params, value.get_str(), to_decimal(whole)});
                }
            }

    // Reconstruction: M_S(2n, j, 1) == binom(2n, n) * sum_u R(n, j, j+u).
    for (long n = 0; n <= n_max; ++n)
        for (long j = 0; j <= n; ++j) {
            ++r.instances;
            Rat acc = 0;
            for (long u = 0; u <= n - j; ++u) acc += ms1_summand(n, j, j + u);
            named_values params = {detail::named("n", n), detail::named("j", j),
                                   {"check", "reconstruction"}};
            if (acc.get_den() != 1) {
                r.counterexamples.push_back({params, "an integer", acc.get_str()});
                continue;
            }
            Int rhs = central_binomial(n) * acc.get_num();
            Int lhs = msum({kernel_s(), 2 * n, j, 1});
            if (lhs != rhs)
                r.counterexamples.push_back({params, to_decimal(rhs), to_decimal(lhs)});
        }

    r.elapsed_ms = timer.ms();
    return r;
}

// The three path-family reports: closed form vs DP (with the recurrence,
// base row, and zero region riders), the T(n, j) identity, and the
// totals. Returned in the order {THM5, THM4, EQ80}.
inline std::vector<verification_report> verify_schroeder(
    long n_max, long m_extra, const std::vector<long>& l_set,
    std::optional<long> j_pin = {}) {
    for (long l : l_set)
        if (l < 1) throw std::domain_error("verify_schroeder: slopes must be >= 1");

    detail::stopwatch timer;
    verification_report closed, identity, totals;
    closed.claim = "THM5";
    closed.description =
        "Schroeder DP count equals the closed form on m >= l*n, satisfies the "
        "three-term step recurrence, the n=1 base row, and the zero region";
    identity.claim = "THM4";
    identity.description = "Schroeder count at m = 2n, slope 2, equals t_number";
    totals.claim = "EQ80";
    totals.description =
        "path totals: closed-form total, summed closed forms, summed DP counts, "
        "and the statistic-free DP agree";
    named_values common = {{"l", detail::l_set_string(l_set)},
                           detail::span("n", 1, n_max),
                           {"m", "l*n..l*n+" + std::to_string(m_extra)}};
    closed.ranges = common;
    identity.ranges = {detail::span("n", 1, n_max)};
    totals.ranges = common;

    for (long l : l_set)
        for (long n = 1; n <= n_max; ++n)
            for (long m = l * n; m <= l * n + m_extra; ++m) {
                detail::j_range jr(j_pin, n);
                for (long j = jr.lo; j <= jr.hi; ++j) {
                    ++closed.instances;
                    Int dp = count_schroeder(n, m, j, l);
                    Int cf = schr_closed_form(n, m, j, l);
                    if (dp != cf)
                        closed.counterexamples.push_back(
                            {{detail::named("l", l), detail::named("n", n),
                              detail::named("m", m), detail::named("j", j)},
                             to_decimal(cf), to_decimal(dp)});
                }

                ++totals.instances;
                Int total_cf = schr_total(n, m, l);
                Int total_dp = count_schroeder_total(n, m, l);
                Int sum_dp = 0, sum_cf = 0;
                for (long j = 0; j <= n; ++j) {
                    sum_dp += count_schroeder(n, m, j, l);
                    sum_cf += schr_closed_form(n, m, j, l);
                }
                named_values params = {detail::named("l", l), detail::named("n", n),
                                       detail::named("m", m)};
                if (total_dp != total_cf)
                    totals.counterexamples.push_back(
                        {params, to_decimal(total_cf), to_decimal(total_dp)});
                if (sum_dp != total_dp) {
                    auto p = params;
                    p.push_back({"check", "per-j-sum"});
                    totals.counterexamples.push_back(
                        {p, to_decimal(total_dp), to_decimal(sum_dp)});
                }
                if (sum_cf != total_cf) {
                    auto p = params;
                    p.push_back({"check", "per-j-closed-sum"});
                    totals.counterexamples.push_back(
                        {p, to_decimal(total_cf), to_decimal(sum_cf)});
                }
            }

    // Slope-2 riders on the closed-form claim.
    for (long n = 1; n <= n_max; ++n)
        for (long m = 2 * n; m <= 2 * n + m_extra; ++m)
            for (long j = 0; j <= n; ++j) {
                ++closed.instances;
                Int whole = count_schroeder(n, m, j, 2);
                Int parts = count_schroeder(n - 1, m, j - 1, 2) +
                            count_schroeder(n - 1, m - 1, j, 2) +
                            count_schroeder(n, m - 1, j, 2);
                if (whole != parts)
                    closed.counterexamples.push_back(
                        {{detail::named("n", n), detail::named("m", m),
                          detail::named("j", j), {"check", "recurrence"}},
                         to_decimal(parts), to_decimal(whole)});
            }
    if (n_max >= 1)
        for (long m = 2; m <= 8; ++m)
            for (long j = 0; j <= 1; ++j) {
                ++closed.instances;
                Int dp = count_schroeder(1, m, j, 2);
                if (dp != m - 1)
                    closed.counterexamples.push_back(
                        {{detail::named("m", m), detail::named("j", j),
                          {"check", "base-row"}},
                         std::to_string(m - 1), to_decimal(dp)});
            }
    for (long n = 1; n <= n_max; ++n)
        for (long j = 0; j <= n; ++j) {
            ++closed.instances;
            Int dp = count_schroeder(n, 2 * n - 1, j, 2);
            if (dp != 0)
                closed.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("j", j),
                      {"check", "zero-region"}},
                     "0", to_decimal(dp)});
        }

    for (long n = 1; n <= n_max; ++n) {
        detail::j_range jr(j_pin, n);
        for (long j = jr.lo; j <= jr.hi; ++j) {
            ++identity.instances;
            Int dp = count_schroeder(n, 2 * n, j, 2);
            Int tn = t_number(n, j);
            if (dp != tn)
                identity.counterexamples.push_back(
                    {{detail::named("n", n), detail::named("j", j)},
                     to_decimal(tn), to_decimal(dp)});
        }
    }

    closed.elapsed_ms = identity.elapsed_ms = totals.elapsed_ms = timer.ms();
    return {closed, identity, totals};
}

// ---- claim registry ----

struct claim_info {
    std::string id;
    std::string statement;
    named_values defaults;
};

inline const std::vector<claim_info>& claim_catalog() {
    static const std::vector<claim_info> catalog = {
        {"THM1",
         "direct_sum_s(n, 1) equals (-1)^n * fuss_catalan3(n) * catalan(n) * "
         "(2n^2+n+1)",
         {{"n_max", "30"}}},
        {"THM2", "fuss_catalan3(n) divides direct_sum_s(n, m)",
         {{"n_max", "20"}, {"m_max", "5"}}},
        {"THM3", "central_binomial(n) divides direct_sum_s(n, m)",
         {{"n_max", "20"}, {"m_max", "5"}}},
        {"THM4", "count_schroeder(n, 2n, j, 2) equals t_number(n, j)",
         {{"n_max", "6"}}},
        {"THM5",
         "count_schroeder(n, m, j, l) equals schr_closed_form on m >= l*n, with "
         "the step recurrence, base row, and zero region at slope 2",
         {{"n_max", "6"}, {"m_extra", "6"}, {"l_set", "1,2,3"}}},
        {"PROP1",
         "t_number is an integer by both product forms, the forms agree, and "
         "the cross-multiplied identity holds",
         {{"n_max", "40"}}},
        {"PROP2", "(n+1)(2n+1) divides 2*binomial(3n, n)", {{"n_max", "200"}}},
        {"PROP3", "2n+1 divides t*binomial(2n+t, t)",
         {{"n_max", "200"}, {"t_max", "200"}}},
        {"PROP4", "2n+1 divides binomial(3n, n+t)*binomial(2n+t, 2n)",
         {{"n_max", "200"}, {"t_max", "200"}}},
        {"PROP5", "2n+1 divides binomial(3n+1, n+t+1)*binomial(2n+t, 2n)",
         {{"n_max", "200"}, {"t_max", "200"}}},
        {"REMARK1", "2n+1 divides binomial(3n, n+t+1)*binomial(2n+t, 2n)",
         {{"n_max", "200"}, {"t_max", "200"}}},
        {"Q_LCM",
         "lcm(binomial(a+n, a), central_binomial(n)) divides "
         "direct_sum_q(n, m, a), including a = 2n",
         {{"n_max", "10"}, {"m_max", "4"}, {"a_max", "6"}}},
        {"LEMMA1", "msum(S, 2n, j, 0) equals closed_form_ms0(n, j)",
         {{"n_max", "12"}}},
        {"EQ7", "direct_sum_s(n, m) equals msum(S, 2n, 0, m-1)",
         {{"n_max", "12"}, {"m_max", "4"}}},
        {"EQ8",
         "msum at weight t equals recurrence_rhs, kernels S and Q(0,1,2,2n), "
         "t in {1, 2}",
         {{"n_max", "10"}}},
        {"EQ9", "msum(S1, 2n, j, 0) equals lift_identity_rhs(S2, 2n, j, 1)",
         {{"n_max", "10"}}},
        {"EQ16", "(2n+1)^2 * msum(S, 2n, j, 0) equals msum(S1, 2n, j, 0)",
         {{"n_max", "10"}}},
        {"EQ20", "weighted_sum(S2, 2n, m) equals direct_sum_q(n, m, 2n)",
         {{"n_max", "8"}, {"m_max", "3"}}},
        {"EQ80",
         "schr_total equals the summed closed forms, the summed DP counts, and "
         "the statistic-free DP count",
         {{"n_max", "6"}, {"m_extra", "6"}, {"l_set", "1,2,3"}}},
        {"N_INTEGRALITY",
         "ms1_summand is integer-valued, equals part1 + part2, and reconstructs "
         "msum(S, 2n, j, 1)",
         {{"n_max", "10"}}},
    };
    return catalog;
}

inline std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : claim_catalog()) ids.push_back(c.id);
    return ids;
}

inline bool is_claim_id(const std::string& id) {
    for (const auto& c : claim_catalog())
        if (c.id == id) return true;
    return false;
}

inline verification_report run_claim(const std::string& id,
                                     const sweep_options& opt) {
    auto schroeder_l_set = [&]() -> std::vector<long> {
        if (opt.l) return {*opt.l};
        return {1, 2, 3};
    };
    if (id == "THM1") return verify_theorem1(opt.n_max.value_or(30));
    if (id == "THM2")
        return verify_divisibility_thms(opt.n_max.value_or(20),
                                        opt.m_max.value_or(5))[0];
    if (id == "THM3")
        return verify_divisibility_thms(opt.n_max.value_or(20),
                                        opt.m_max.value_or(5))[1];
    if (id == "THM4")
        return verify_schroeder(opt.n_max.value_or(6), opt.m_max.value_or(6),
                                schroeder_l_set(), opt.j)[1];
    if (id == "THM5")
        return verify_schroeder(opt.n_max.value_or(6), opt.m_max.value_or(6),
                                schroeder_l_set(), opt.j)[0];
    if (id == "PROP1") return verify_prop1(opt.n_max.value_or(40), opt.j);
    if (id == "PROP2") return verify_prop2(opt.n_max.value_or(200));
    if (id == "PROP3")
        return verify_prop3(opt.n_max.value_or(200), opt.t_max.value_or(200));
    if (id == "PROP4")
        return verify_prop4(opt.n_max.value_or(200), opt.t_max.value_or(200));
    if (id == "PROP5")
        return verify_prop5(opt.n_max.value_or(200), opt.t_max.value_or(200));
    if (id == "REMARK1")
        return verify_remark1(opt.n_max.value_or(200), opt.t_max.value_or(200));
    if (id == "Q_LCM")
        return verify_q_lcm(opt.n_max.value_or(10), opt.m_max.value_or(4),
                            opt.a_max.value_or(6));
    if (id == "LEMMA1") return verify_lemma1(opt.n_max.value_or(12), opt.j);
    if (id == "EQ7")
        return verify_eq7(opt.n_max.value_or(12), opt.m_max.value_or(4));
    if (id == "EQ8") return verify_eq8(opt.n_max.value_or(10), opt.j);
    if (id == "EQ9") return verify_eq9(opt.n_max.value_or(10), opt.j);
    if (id == "EQ16") return verify_eq16(opt.n_max.value_or(10), opt.j);
    if (id == "EQ20")
        return verify_eq20(opt.n_max.value_or(8), opt.m_max.value_or(3));
    if (id == "EQ80")
        return verify_schroeder(opt.n_max.value_or(6), opt.m_max.value_or(6),
                                schroeder_l_set(), opt.j)[2];
    if (id == "N_INTEGRALITY")
        return verify_n_decomposition(opt.n_max.value_or(10));
    throw std::invalid_argument("unknown claim id: " + id);
}

inline std::vector<verification_report> run_claims(
    const std::vector<std::string>& ids, const sweep_options& opt) {
    std::vector<verification_report> reports;
    reports.reserve(ids.size());
    for (const auto& id : ids) reports.push_back(run_claim(id, opt));
    return reports;
}

inline std::vector<verification_report> run_all(const sweep_options& opt) {
    return run_claims(claim_ids(), opt);
}

}  // namespace cattri
