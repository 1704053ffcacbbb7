#include "cakecut/format.hpp"

#include <array>
#include <charconv>

namespace cakecut {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), result.ptr);
}

}  // namespace cakecut
