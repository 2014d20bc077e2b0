#include "advect/number_format.hpp"

#include "advect/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace advect {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw NumericalFailure("to_chars failed");
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
  double out = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace advect
