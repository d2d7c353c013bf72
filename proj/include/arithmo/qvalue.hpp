#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithmo {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational value. Always stored reduced with a positive denominator;
// integer values have denominator 1.
using QValue = boost::multiprecision::cpp_rational;

inline bool is_integer(const QValue& q) { return denominator(q) == 1; }

// Renders "a/b" in lowest terms, integers bare ("16", "-7/3").
inline std::string to_string(const QValue& q) { return q.str(); }

// Inverse of to_string. Accepts an optional leading '-' on the numerator.
inline QValue parse_qvalue(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("parse_qvalue: malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const std::size_t slash = text.find('/');
    const auto parse_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) throw bad();
        std::size_t i = (allow_sign && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) return QValue(parse_int(text, true));
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw bad();
    return QValue(num, den);
}

}  // namespace arithmo
