#ifndef EDERIV_RATIONAL_HPP
#define EDERIV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "ederiv/errors.hpp"

namespace ederiv {

// Arbitrary-precision exact rationals. All arithmetic in the library is
// exact; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long p, long q = 1) {
    if (q == 0) throw InputError("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& p, const Integer& q) {
    if (q == 0) throw InputError("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace ederiv

#endif
