#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace rabbithunt {

// Shortest decimal form that round-trips to the same double. Keeps CSV and
// JSON output byte-stable across runs.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf, ptr);
}

} // namespace rabbithunt
