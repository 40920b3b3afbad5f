#ifndef GS_FORMAT_HPP
#define GS_FORMAT_HPP

#include <charconv>
#include <string>

namespace gs {

// Shortest round-trip decimal form of a double. Output depends only on the
// value, which keeps emitted CSV files byte-stable across runs and builds.
inline std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace gs

#endif
