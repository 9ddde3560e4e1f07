#pragma once

#include <string>

namespace qfade {

/// Shortest decimal string that parses back to exactly the same double.
std::string double_repr(double value);

}  // namespace qfade
