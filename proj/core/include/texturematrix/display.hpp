#pragma once

#include <string>

namespace texturematrix {

/// Fixed-point rendering that rounds half away from zero at the given number
/// of decimals ("0.0667" for 4/60 at 4 dp). Never prints "-0.00".
std::string format_fixed(double value, int decimals);

/// Table precisions: grey-level-scaled and entropy values use 2 decimals,
/// unit-interval quantities use 4.
inline constexpr int kWideDecimals = 2;
inline constexpr int kUnitDecimals = 4;

}  // namespace texturematrix
