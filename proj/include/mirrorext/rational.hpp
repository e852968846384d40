#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace mirrorext {

/// Exact rational scalar. Conformal weights, central charges and Kac-table
/// entries all live in denominators bounded by a few thousand, so a 64-bit
/// rational is ample.
using Rational = boost::rational<std::int64_t>;

/// Representative of q mod 1 in [0, 1).
inline Rational mod1(const Rational& q) {
    std::int64_t n = q.numerator(), d = q.denominator(); // d > 0 by invariant
    std::int64_t r = n % d;
    if (r < 0)
        r += d;
    return Rational(r, d);
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// "p/q" (or "p" when integral), the catalog wire form.
inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parse "p/q" or "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

} // namespace mirrorext
