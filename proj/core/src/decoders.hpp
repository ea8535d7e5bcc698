#pragma once

#include <cstddef>
#include <span>

#include "texturematrix/pixel_grid.hpp"

namespace texturematrix::detail {

bool has_netpbm_magic(std::span<const std::byte> bytes) noexcept;
bool has_png_signature(std::span<const std::byte> bytes) noexcept;

PixelGrid decode_netpbm(std::span<const std::byte> bytes);
PixelGrid decode_png(std::span<const std::byte> bytes);

}  // namespace texturematrix::detail
