#pragma once

// Weighted alternating binomial sums and their M-sum transforms.
//
// A kernel F(n, k) is an integer-valued summand family. The direct sums
// attach a binom(n, k)^m weight to a kernel; the M-sum attaches the
// two-parameter transform
//
//   M_F(n, j, t) = binom(n-j, j) * sum_{v=0}^{n-2j} binom(n-2j, v)
//                                   * binom(n, j+v)^t * F(n, j+v)
//
// which recovers the direct sum at j = 0, t = m - 1 and satisfies a
// recurrence in t (recurrence_rhs) and a lifting identity in the kernel
// weight (lift_identity_rhs). Closed forms for specific kernels live at
// the bottom of the file.

#include <functional>
#include <stdexcept>

#include "cattri/binomial.hpp"
#include "cattri/combinatorics.hpp"
#include "cattri/integer.hpp"

namespace cattri {

// The four built-in kernels. This is a closed enumeration on purpose:
// every identity in the catalog is about one of these.
enum class kernel_family { s, q, s1, s2 };

// S-family kernels are only defined at even index (their defining
// products pair position k with position n - k of an even-length row).
// The Q kernel takes the weight parameter a; S, S1, S2 ignore it.
struct kernel {
    kernel_family family = kernel_family::s;
    long a = 0;

    Int operator()(long n, long k) const {
        if (n < 0) throw std::domain_error("kernel: negative index");
        if (family != kernel_family::q && (n & 1L))
            throw std::domain_error("kernel: S-family kernels need an even index");
        if (k < 0 || k > n) return 0;
        switch (family) {
            case kernel_family::s:
                return Int(parity_sign(k)) * catalan_triangle_entry(n, k) *
                       catalan_triangle_entry(n, n - k);
            case kernel_family::q:
                return Int(parity_sign(k)) * binomial(a + k, a) *
                       binomial(a + n - k, a);
            case kernel_family::s1:
                return Int(parity_sign(k)) * Int(n - k + 1) * Int(k + 1) *
                       binomial(n + k, n) * binomial(2 * n - k, n);
            case kernel_family::s2:
                return Int(parity_sign(k)) * binomial(n + k, n) *
                       binomial(2 * n - k, n);
        }
        throw std::logic_error("kernel: unreachable");
    }
};

inline kernel kernel_s() { return {kernel_family::s, 0}; }
inline kernel kernel_q(long a) { return {kernel_family::q, a}; }
inline kernel kernel_s1() { return {kernel_family::s1, 0}; }
inline kernel kernel_s2() { return {kernel_family::s2, 0}; }

struct msum_query {
    kernel f;
    long n = 0;  // the sum's upper index itself (an even value for S-family kernels)
    long j = 0;
    long t = 0;
};

// M-sum over an arbitrary callable kernel. j may exceed floor(n/2); the
// leading binom(n-j, j) then vanishes and the result is 0, which the
// lifting identity relies on.
template <class F>
Int msum_of(F&& f, long n, long j, long t) {
    if (n < 0 || j < 0 || t < 0)
        throw std::domain_error("msum: negative parameter");
    if (n - 2 * j < 0) return 0;
    Int sum = 0;
    for (long v = 0; v <= n - 2 * j; ++v)
        sum += binomial(n - 2 * j, v) *
               pow_int(binomial(n, j + v), static_cast<unsigned long>(t)) *
               f(n, j + v);
    return binomial(n - j, j) * sum;
}

inline Int msum(const msum_query& q) { return msum_of(q.f, q.n, q.j, q.t); }

// sum_k binom(n, k)^m F(n, k), the weighted direct sum of a kernel.
template <class F>
Int weighted_sum_of(F&& f, long n, long m) {
    if (n < 0 || m < 0) throw std::domain_error("weighted_sum: negative parameter");
    Int sum = 0;
    for (long k = 0; k <= n; ++k)
        sum += pow_int(binomial(n, k), static_cast<unsigned long>(m)) * f(n, k);
    return sum;
}

inline Int weighted_sum(const kernel& f, long n, long m) {
    return weighted_sum_of(f, n, m);
}

// S(2n, m): the alternating convolution of Catalan triangle row 2n with
// weight binom(2n, k)^m, summed literally.
inline Int direct_sum_s(long n, long m) {
    if (n < 0) throw std::domain_error("direct_sum_s: negative index");
    if (m < 1) throw std::domain_error("direct_sum_s: weight must be >= 1");
    Int sum = 0;
    for (long k = 0; k <= 2 * n; ++k) {
        Int term = pow_int(binomial(2 * n, k), static_cast<unsigned long>(m)) *
                   catalan_triangle_entry(2 * n, k) *
                   catalan_triangle_entry(2 * n, 2 * n - k);
        sum += (k & 1L) ? -term : term;
    }
    return sum;
}

// Q(2n, m, a): like S but with weights binom(a+k, a) binom(a+2n-k, a)
// in place of the triangle entries.
inline Int direct_sum_q(long n, long m, long a) {
    if (n < 0 || a < 0) throw std::domain_error("direct_sum_q: negative parameter");
    if (m < 1) throw std::domain_error("direct_sum_q: weight must be >= 1");
    Int sum = 0;
    for (long k = 0; k <= 2 * n; ++k) {
        Int term = pow_int(binomial(2 * n, k), static_cast<unsigned long>(m)) *
                   binomial(a + k, a) * binomial(a + 2 * n - k, a);
        sum += (k & 1L) ? -term : term;
    }
    return sum;
}

// Closed form for S(2n, 1):  (-1)^n C3(n) Cat(n) (2n^2 + n + 1).
inline Int closed_form_s1(long n) {
    if (n < 0) throw std::domain_error("closed_form_s1: negative index");
    return Int(parity_sign(n)) * fuss_catalan3(n) * catalan(n) *
           Int(2 * n * n + n + 1);
}

// Closed form for M_S(2n, j, 0):
//   (-1)^n C3(n) T(n, j) (2n^2 + n + 1 - j(n - 1)).
// At j = 0 this collapses to closed_form_s1.
inline Int closed_form_ms0(long n, long j) {
    if (n < 0 || j < 0 || j > n)
        throw std::domain_error("closed_form_ms0: need 0 <= j <= n");
    return Int(parity_sign(n)) * fuss_catalan3(n) * t_number(n, j) *
           Int(2 * n * n + n + 1 - j * (n - 1));
}

// Closed form for M_Q(2n, j, 0; a):  (-1)^n binom(a+n, a) binom(a+j, j) binom(a, n-j).
inline Int closed_form_mq0(long n, long j, long a) {
    if (n < 0 || j < 0 || j > n || a < 0)
        throw std::domain_error("closed_form_mq0: need 0 <= j <= n, a >= 0");
    return Int(parity_sign(n)) * binomial(a + n, a) * binomial(a + j, j) *
           binomial(a, n - j);
}

// Closed form for M_Q(2n, j, 1; a):
//   (-1)^n binom(2n, n) sum_u binom(n, j+u) binom(j+u, u)
//                             binom(a+j+u, j+u) binom(a+n, 2n-j-u).
inline Int closed_form_mq1(long n, long j, long a) {
    if (n < 0 || j < 0 || j > n || a < 0)
        throw std::domain_error("closed_form_mq1: need 0 <= j <= n, a >= 0");
    Int sum = 0;
    for (long u = 0; u <= n - j; ++u)
        sum += binomial(n, j + u) * binomial(j + u, u) *
               binomial(a + j + u, j + u) * binomial(a + n, 2 * n - j - u);
    return Int(parity_sign(n)) * central_binomial(n) * sum;
}

// Right side of the t-recurrence,
//   binom(n, j) sum_{u=0}^{floor((n-2j)/2)} binom(n-j, u) M_F(n, j+u, t-1),
// which should equal M_F(n, j, t). Callers compare the two.
template <class F>
Int recurrence_rhs_of(F&& f, long n, long j, long t) {
    if (t < 1) throw std::domain_error("recurrence_rhs: need t >= 1");
    if (n < 0 || j < 0) throw std::domain_error("recurrence_rhs: negative parameter");
    if (n - 2 * j < 0) return 0;
    Int sum = 0;
    for (long u = 0; u <= (n - 2 * j) / 2; ++u)
        sum += binomial(n - j, u) * msum_of(f, n, j + u, t - 1);
    return binomial(n, j) * sum;
}

inline Int recurrence_rhs(const msum_query& q) {
    return recurrence_rhs_of(q.f, q.n, q.j, q.t);
}

// Kernel lifted by the weight pair binom(a+k, a) binom(a+n-k, a).
template <class F>
auto lifted_kernel_of(F base, long a) {
    return [base, a](long n, long k) -> Int {
        return binomial(a + k, a) * binomial(a + n - k, a) * base(n, k);
    };
}

// Right side of the lifting identity: expresses the weight-0 M-sum of a
// lifted kernel through weight-0 M-sums of the base kernel,
//   binom(a+j, a) sum_{l=0}^{a} binom(n-j+l, l) binom(n-j, a-l)
//                               M_base(n, j+a-l, 0).
// The shifted index j+a-l may leave the nominal domain; zero-extension
// makes those terms vanish.
template <class F>
Int lift_identity_rhs_of(F&& base, long n, long j, long a) {
    if (n < 0 || j < 0 || a < 0)
        throw std::domain_error("lift_identity_rhs: negative parameter");
    Int sum = 0;
    for (long l = 0; l <= a; ++l)
        sum += binomial(n - j + l, l) * binomial(n - j, a - l) *
               msum_of(base, n, j + a - l, 0);
    return binomial(a + j, a) * sum;
}

inline Int lift_identity_rhs(const kernel& base, long n, long j, long a) {
    return lift_identity_rhs_of(base, n, j, a);
}

// The weight-1 M-sum of the S kernel decomposes over a rational summand
// family: M_S(2n, j, 1) = binom(2n, n) sum_{u=0}^{n-j} R(n, j, j+u) with
//
//   R(n, j, t) = (-1)^n binom(3n, n+t) binom(2n+t, t) binom(n, t) binom(t, j)
//                * (2n^2 + n + 1 - t(n-1)) / ((2n+1)(n+t+1))
//
// R is integer-valued (verified as a claim) and splits into two integer
// parts whose divisibility by 2n+1 is itself one of the catalog's
// divisibility results.
inline Rat ms1_summand(long n, long j, long t) {
    if (n < 0 || j < 0 || t < 0)
        throw std::domain_error("ms1_summand: negative parameter");
    Int num = Int(parity_sign(n)) * binomial(3 * n, n + t) *
              binomial(2 * n + t, t) * binomial(n, t) * binomial(t, j) *
              Int(2 * n * n + n + 1 - t * (n - 1));
    Rat r = Rat(num) / Rat(Int(2 * n + 1) * Int(n + t + 1));
    return r;
}

inline Int ms1_summand_part1(long n, long j, long t) {
    if (n < 0 || j < 0 || t < 0)
        throw std::domain_error("ms1_summand_part1: negative parameter");
    Int core = exact_div(binomial(3 * n, n + t) * binomial(2 * n + t, 2 * n),
                         2 * n + 1, "ms1_summand_part1");
    return Int(parity_sign(n)) * core * binomial(n, t) * binomial(t, j);
}

inline Int ms1_summand_part2(long n, long j, long t) {
    if (n < 0 || j < 0 || t < 0)
        throw std::domain_error("ms1_summand_part2: negative parameter");
    Int core = exact_div(binomial(3 * n, n + t + 1) * binomial(2 * n + t, 2 * n),
                         2 * n + 1, "ms1_summand_part2");
    return Int(n) * Int(parity_sign(n)) * core * binomial(n, t) * binomial(t, j);
}

}  // namespace cattri
