#pragma once

#include <cctype>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilschur/errors.hpp"

namespace nilschur {

/// Exact arbitrary-precision integer; every coefficient in the kernel uses
/// this type, so no computation can silently overflow.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& value) {
    return value.str();
}

/// Parses an optionally signed decimal string.  Rejects anything else so a
/// malformed serialization cannot be half-read.
inline Int parse_decimal(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-'))
        start = 1;
    if (start == text.size())
        throw InvalidInput("not a decimal integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidInput("not a decimal integer: '" + text + "'");
    return Int(text);
}

} // namespace nilschur
