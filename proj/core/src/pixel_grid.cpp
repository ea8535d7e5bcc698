#include "texturematrix/pixel_grid.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "decoders.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix {

PixelGrid::PixelGrid(std::size_t rows, std::size_t cols, std::size_t channels,
                     std::vector<GreyLevel> values)
    : rows_(rows), cols_(cols), channels_(channels), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError(fmt::format("image has zero dimension ({}x{})", rows_, cols_));
  }
  if (channels_ != 1 && channels_ != 3) {
    throw DimensionError(fmt::format("unsupported channel count {}", channels_));
  }
  if (values_.size() != rows_ * cols_ * channels_) {
    throw DimensionError(fmt::format("expected {} samples for {}x{}x{}, got {}",
                                     rows_ * cols_ * channels_, rows_, cols_, channels_,
                                     values_.size()));
  }
}

PixelGrid PixelGrid::from_levels(std::size_t rows, std::size_t cols, std::size_t channels,
                                 std::span<const int> values) {
  std::vector<GreyLevel> levels;
  levels.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int v = values[k];
    if (v < 0 || v > 255) {
      throw ContractError(fmt::format("grey level {} at index {} outside [0, 255]", v, k));
    }
    levels.push_back(static_cast<GreyLevel>(v));
  }
  return PixelGrid(rows, cols, channels, std::move(levels));
}

std::span<const GreyLevel> PixelGrid::plane(std::size_t channel) const {
  if (channel >= channels_) {
    throw ContractError(fmt::format("channel {} out of range", channel));
  }
  const std::size_t size = rows_ * cols_;
  return std::span<const GreyLevel>(values_).subspan(channel * size, size);
}

GreyLevel PixelGrid::at(std::size_t channel, std::size_t row, std::size_t col) const {
  if (channel >= channels_ || row >= rows_ || col >= cols_) {
    throw ContractError(fmt::format("pixel ({}, {}, {}) out of range", channel, row, col));
  }
  return values_[(channel * rows_ + row) * cols_ + col];
}

PixelGrid to_luma(const PixelGrid& grid) {
  if (grid.channels() == 1) return grid;
  const auto r = grid.plane(0);
  const auto g = grid.plane(1);
  const auto b = grid.plane(2);
  std::vector<GreyLevel> luma(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    // Weights scaled by 1000; +500 rounds half up.
    const unsigned weighted = 299u * r[k] + 587u * g[k] + 114u * b[k];
    luma[k] = static_cast<GreyLevel>((weighted + 500u) / 1000u);
  }
  return PixelGrid(grid.rows(), grid.cols(), 1, std::move(luma));
}

std::string_view to_string(Direction direction) noexcept {
  switch (direction) {
    case Direction::E: return "E";
    case Direction::NE: return "NE";
    case Direction::N: return "N";
    case Direction::NW: return "NW";
    case Direction::W: return "W";
    case Direction::SW: return "SW";
    case Direction::S: return "S";
    case Direction::SE: return "SE";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) noexcept {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (Direction d : kAllDirections) {
    if (upper == to_string(d)) return d;
  }
  return std::nullopt;
}

std::string_view to_string(SymmetricAxis axis) noexcept {
  switch (axis) {
    case SymmetricAxis::Horizontal: return "horizontal";
    case SymmetricAxis::Vertical: return "vertical";
    case SymmetricAxis::DiagonalMain: return "diagonal";
    case SymmetricAxis::DiagonalAnti: return "diagonal-anti";
  }
  return "?";
}

std::optional<SymmetricAxis> parse_axis(std::string_view text) noexcept {
  if (text == "h" || text == "horizontal") return SymmetricAxis::Horizontal;
  if (text == "v" || text == "vertical") return SymmetricAxis::Vertical;
  if (text == "d" || text == "diagonal") return SymmetricAxis::DiagonalMain;
  if (text == "diagonal-anti") return SymmetricAxis::DiagonalAnti;
  return std::nullopt;
}

std::uint64_t pair_count(const PixelGrid& grid, Direction direction) noexcept {
  const Offset off = neighbor_offset(direction);
  const std::size_t dr = static_cast<std::size_t>(off.row < 0 ? -off.row : off.row);
  const std::size_t dc = static_cast<std::size_t>(off.col < 0 ? -off.col : off.col);
  if (grid.rows() <= dr || grid.cols() <= dc) return 0;
  return static_cast<std::uint64_t>(grid.channels()) * (grid.rows() - dr) * (grid.cols() - dc);
}

PixelGrid decode_image(std::span<const std::byte> bytes) {
  if (detail::has_netpbm_magic(bytes)) return detail::decode_netpbm(bytes);
  if (detail::has_png_signature(bytes)) return detail::decode_png(bytes);
  throw FormatError("unrecognized image signature (expected PGM, PPM, or PNG)");
}

PixelGrid load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(fmt::format("cannot open '{}'", path.string()));
  }
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError(fmt::format("read error on '{}'", path.string()));
  }
  try {
    return decode_image(std::as_bytes(std::span<const char>(raw)));
  } catch (const FormatError& e) {
    throw FormatError(fmt::format("{}: {}", path.string(), e.what()));
  } catch (const DimensionError& e) {
    throw DimensionError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void save_netpbm(const PixelGrid& grid, const std::filesystem::path& path,
                 NetpbmEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError(fmt::format("cannot write '{}'", path.string()));
  }
  const std::string encoded = encode_netpbm(grid, encoding);
  out.write(encoded.data(), static_cast<std::streamsize>(encoded.size()));
  if (!out) {
    throw IoError(fmt::format("write error on '{}'", path.string()));
  }
}

}  // namespace texturematrix
