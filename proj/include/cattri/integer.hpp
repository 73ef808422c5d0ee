#pragma once

// Exact signed integers and rationals. Everything in this library is
// computed without rounding; values cross module boundaries as decimal
// strings.

#include <gmpxx.h>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cattri {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int from_decimal(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    }
}

// True when divisor | value. GMP's convention covers divisor == 0:
// only 0 is divisible by 0.
inline bool divides(const Int& divisor, const Int& value) {
    return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

// Quotient of an exact division. A non-zero remainder means an
// integrality invariant has been violated somewhere, which is a bug in
// this library (or a falsified identity), never a recoverable input
// error, so it aborts with a diagnostic instead of throwing.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
    if (!divides(den, num)) {
        std::fprintf(stderr, "cattri: exact division violated in %s: %s / %s\n",
                     what, num.get_str().c_str(), den.get_str().c_str());
        std::abort();
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// (-1)^k as a parity branch, never a floating power.
inline int parity_sign(long k) { return (k & 1L) ? -1 : 1; }

}  // namespace cattri
