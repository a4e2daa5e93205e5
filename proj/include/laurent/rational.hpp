#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace laurent {

// Exact rational coefficients. All arithmetic in the library is exact; no
// floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// q^e for integer e of either sign. Negative e requires q != 0.
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational result(1);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

} // namespace laurent
