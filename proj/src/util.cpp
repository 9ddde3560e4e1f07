#include "qfade/util.hpp"

#include <charconv>

namespace qfade {

std::string double_repr(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

}  // namespace qfade
