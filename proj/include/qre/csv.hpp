#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>

namespace qre::csv {

// shortest round-trip decimal form; byte-stable across runs, parses back to
// the exact double the library computed
inline std::string fmt(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;  // 32 bytes always suffice for shortest-form doubles
    return std::string(buf, ptr);
}

inline std::string fmt(std::int64_t value) { return std::to_string(value); }

inline std::string fmt(int value) { return std::to_string(value); }

template <typename T>
std::string fmt(const std::optional<T>& value) {
    return value ? fmt(*value) : std::string();
}

}  // namespace qre::csv
