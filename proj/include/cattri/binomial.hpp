#pragma once

// Binomial coefficients along two independent routes:
//
//   binomial()     product formula, good for isolated large queries
//   pascal_table   additive recurrence, good for dense sweeps
//
// The two routes are cross-checked in the test suite; agreement is part
// of the library's correctness story, so neither may be rewritten in
// terms of the other.

#include <stdexcept>
#include <vector>

#include "cattri/integer.hpp"

namespace cattri {

// binom(n, k) with the zero-extension convention: 0 whenever k < 0,
// k > n, or n < 0. Several summation identities in this library rely on
// out-of-range terms vanishing silently, so this is a contract, not a
// convenience.
inline Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Dense table of binom(n, k) for 0 <= k <= n <= n_max, built with the
// additive recurrence only. Immutable after construction, so concurrent
// readers are safe.
class pascal_table {
  public:
    explicit pascal_table(long n_max) {
        if (n_max < 0) throw std::domain_error("pascal_table: negative size");
        rows_.reserve(static_cast<size_t>(n_max) + 1);
        rows_.push_back({Int(1)});
        for (long n = 1; n <= n_max; ++n) {
            const auto& prev = rows_.back();
            std::vector<Int> row(static_cast<size_t>(n) + 1);
            row.front() = 1;
            row.back() = 1;
            for (long k = 1; k < n; ++k)
                row[static_cast<size_t>(k)] =
                    prev[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(k)];
            rows_.push_back(std::move(row));
        }
    }

    long size() const { return static_cast<long>(rows_.size()) - 1; }

    // Same zero-extension as binomial(); n beyond the table is an error
    // because silently returning 0 there would mask a sizing bug.
    const Int& at(long n, long k) const {
        if (n < 0 || k < 0 || k > n) return zero_;
        if (n > size()) throw std::out_of_range("pascal_table: row beyond table");
        return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

  private:
    std::vector<std::vector<Int>> rows_;
    static inline const Int zero_{0};
};

}  // namespace cattri
