#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "hallratio/errors.hpp"

namespace hallratio {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the rest of the code relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Accepts "p", "p/q" and "-p/q"; q must be nonzero.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw ParseError("rational with zero denominator: " + s);
        return Rational(p, q);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

inline double to_double(const Rational& q) { return static_cast<double>(q); }

// l1 norm of a nonnegative vector.
inline Rational l1_norm(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace hallratio
