#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace curveh1 {

/// Exact rational number, always stored canonically: gcd(|num|, den) = 1,
/// den > 0. Backed by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "p", "-p" or "p/q". Used by the spec-file reader and JSON I/O.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Integer(s), 1);
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: " + s);
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational rational_inverse(const Rational& r) {
    if (r == 0) throw std::domain_error("inversion of zero");
    return Rational(1) / r;
}

}  // namespace curveh1
