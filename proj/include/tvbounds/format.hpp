#pragma once

#include <charconv>
#include <string>

namespace tvbounds {

// Shortest decimal that round-trips to the same double; used everywhere a
// number reaches a file so that golden outputs are byte-stable.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace tvbounds
