#include "texturematrix/display.hpp"

#include <cmath>

#include <fmt/format.h>

namespace texturematrix {

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) return fmt::format("{}", value);
  const double scale = std::pow(10.0, decimals);
  const double magnitude = std::abs(value) * scale;
  double whole = std::floor(magnitude);
  // Decimal ties such as 0.06665 are stored just below the half; treat
  // anything within 1e-9 of it as a tie.
  if (magnitude - whole >= 0.5 - 1e-9) whole += 1.0;
  double rounded = std::copysign(whole / scale, value);
  if (rounded == 0.0) rounded = 0.0;
  return fmt::format("{:.{}f}", rounded, decimals);
}

}  // namespace texturematrix
