#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "ijord/errors.hpp"

namespace ijord {

// All reducibility arithmetic is exact; nothing in the artifact touches
// floating point.
using Rational = boost::rational<long long>;

inline long long floor_rat(const Rational& r) {
    long long n = r.numerator(), d = r.denominator(); // d > 0, reduced
    long long q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

// Denominator 1 or 2 after reduction.
inline bool is_half_integral(const Rational& r) {
    return r.denominator() == 1 || r.denominator() == 2;
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline long long as_integer(const Rational& r) {
    if (!is_integral(r))
        throw Error(Errc::NonIntegral, "rational " + std::to_string(r.numerator()) + "/" +
                                           std::to_string(r.denominator()) + " is not an integer");
    return r.numerator();
}

// Renders "p/q", or just "p" when integral.  Tables never show decimals.
inline std::string rat_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace ijord
