#pragma once

// Core counting sequences and the Catalan triangle.
//
// All rational prefactors are handled as "numerator first, then assert
// the division is exact", which turns every integrality statement into
// a continuously checked runtime invariant.

#include <stdexcept>
#include <vector>

#include "cattri/binomial.hpp"
#include "cattri/integer.hpp"

namespace cattri {

// n-th Catalan number, binom(2n, n) / (n + 1).  OEIS A000108.
inline Int catalan(long n) {
    if (n < 0) throw std::domain_error("catalan: negative index");
    return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

// Fuss-Catalan number of order three, binom(3n, n) / (2n + 1).
// Counts monotone {E, N} paths to (2n, n) staying on or below y = x/2.
// OEIS A001764.
inline Int fuss_catalan3(long n) {
    if (n < 0) throw std::domain_error("fuss_catalan3: negative index");
    return exact_div(binomial(3 * n, n), 2 * n + 1, "fuss_catalan3");
}

// Central binomial coefficient binom(2n, n).  OEIS A000984.
inline Int central_binomial(long n) {
    if (n < 0) throw std::domain_error("central_binomial: negative index");
    return binomial(2 * n, n);
}

// Catalan triangle entry C(n, k): monotone {E, N} paths to (n, k) that
// never rise above the diagonal y = x. Computed by the quotient form
//   C(n, k) = ((n - k + 1) / (n + 1)) binom(n + k, n);
// the difference form binom(n+k, n) - binom(n+k, n+1) is kept as a
// tested invariant rather than a second code path here.
inline Int catalan_triangle_entry(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("catalan_triangle_entry: need 0 <= k <= n");
    return exact_div(Int(n - k + 1) * binomial(n + k, n), n + 1,
                     "catalan_triangle_entry");
}

// Rows 0..n_max of the Catalan triangle built purely by the additive
// recurrences
//   C(n+1, k)   = C(n+1, k-1) + C(n, k)    for 1 <= k <= n
//   C(n+1, n+1) = C(n+1, n)
// with C(n, 0) = 1. Deliberately independent of the closed form above
// so the two can be cross-checked.
inline std::vector<std::vector<Int>> catalan_triangle(long n_max) {
    if (n_max < 0) throw std::domain_error("catalan_triangle: negative size");
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    rows.push_back({Int(1)});
    for (long n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        std::vector<Int> row(static_cast<size_t>(n) + 1);
        row[0] = 1;
        for (long k = 1; k < n; ++k)
            row[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(k)];
        row[static_cast<size_t>(n)] = row[static_cast<size_t>(n - 1)];
        rows.push_back(std::move(row));
    }
    return rows;
}

// T(n, j) = binom(2n+j, j) binom(2n+1, n+j+1) / (2n + 1).
// Integer-valued for 0 <= j <= n; also counts a family of Schroeder
// paths (see lattice.hpp). T(n, 0) is the n-th Catalan number.
inline Int t_number(long n, long j) {
    if (n < 0 || j < 0 || j > n)
        throw std::domain_error("t_number: need 0 <= j <= n");
    return exact_div(binomial(2 * n + j, j) * binomial(2 * n + 1, n + j + 1),
                     2 * n + 1, "t_number");
}

// Alternate product form binom(n, j) binom(2n+j, n-1) / n, defined for
// n >= 1. Must agree with t_number everywhere both exist.
inline Int t_number_product_form(long n, long j) {
    if (n < 1 || j < 0 || j > n)
        throw std::domain_error("t_number_product_form: need n >= 1, 0 <= j <= n");
    return exact_div(binomial(n, j) * binomial(2 * n + j, n - 1), n,
                     "t_number_product_form");
}

}  // namespace cattri
