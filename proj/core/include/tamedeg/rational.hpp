// Exact coefficient arithmetic: arbitrary-precision integers and rationals.
//
// Rational values are kept canonical by the backing type (lowest terms,
// positive denominator, zero stored as 0/1), which is exactly the contract
// the rest of the library relies on for identity checks.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamedeg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats a rational as `p` when integral and `p/q` otherwise.
inline std::string to_string(const Rational& value) {
    return value.str();
}

/// Parses `p` or `p/q` (optional leading '-'), arbitrary precision.
/// Throws std::invalid_argument on malformed input or zero denominator.
inline Rational rational_from_string(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    std::size_t pos = 0;
    auto digits = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            ++pos;
        }
        std::size_t first_digit = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        if (pos == first_digit) {
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        }
        return text.substr(start, pos - start);
    };
    std::string_view num = digits(true);
    std::string_view den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits(false);
    }
    if (pos != text.size()) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    Integer d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
    }
    return Rational(Integer{std::string(num)}, d);
}

}  // namespace tamedeg
