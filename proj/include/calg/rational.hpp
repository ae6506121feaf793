#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "calg/errors.hpp"

namespace calg {

// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw StructuralError("zero denominator in rational literal: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw StructuralError("bad rational literal: " + s);
    }
}

} // namespace calg
