// Exact arbitrary-precision scalars used throughout: integers for polynomial
// coefficients and counts, rationals for evaluations at negative arguments.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chromapol {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const BigRational& q) { return q.str(); }

/// H_n = 1 + 1/2 + ... + 1/n as an exact rational. H_0 = 0.
inline BigRational harmonic(int n) {
    BigRational h = 0;
    for (int k = 1; k <= n; ++k) h += BigRational(1, k);
    return h;
}

/// Parses "p", "-p" or "p/q" into an exact rational. Whitespace is not allowed.
inline BigRational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    const auto is_int = [&](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!is_int(text)) fail();
        return BigRational(BigInt(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) fail();
    const BigInt d{std::string(den)};
    if (d == 0) fail();
    return BigRational(BigInt(std::string(num)), d);
}

}  // namespace chromapol
