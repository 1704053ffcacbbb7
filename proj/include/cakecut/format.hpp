#pragma once

#include <string>

namespace cakecut {

// Shortest decimal that parses back to the same double; never localized.
std::string format_double(double v);

}  // namespace cakecut
