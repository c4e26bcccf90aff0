#pragma once

#include <charconv>
#include <string>

namespace ssn {

// Shortest round-trip decimal form, locale independent. All CSV output goes
// through this so reruns are byte-identical.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace ssn
