#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace texturematrix {

using GreyLevel = std::uint8_t;

/// Immutable grid of 8-bit grey levels. Multi-channel images are stored
/// planar: one rows x cols plane per channel, each plane row-major.
class PixelGrid {
 public:
  /// Throws DimensionError when rows or cols is zero, channels is not 1 or 3,
  /// or values.size() != rows * cols * channels.
  PixelGrid(std::size_t rows, std::size_t cols, std::size_t channels,
            std::vector<GreyLevel> values);

  /// Builds a grid from wider integers; any value outside [0, 255] is
  /// rejected with a ContractError.
  static PixelGrid from_levels(std::size_t rows, std::size_t cols, std::size_t channels,
                               std::span<const int> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t channels() const noexcept { return channels_; }

  std::span<const GreyLevel> values() const noexcept { return values_; }
  std::span<const GreyLevel> plane(std::size_t channel) const;

  GreyLevel at(std::size_t channel, std::size_t row, std::size_t col) const;

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t channels_;
  std::vector<GreyLevel> values_;
};

/// Collapses an RGB grid to one plane with ITU-R BT.601 weights, rounded to
/// the nearest integer. Single-channel grids are returned unchanged.
PixelGrid to_luma(const PixelGrid& grid);

// --- neighbor geometry ------------------------------------------------------

/// Compass directions. Rows grow downward, so North is row - 1.
enum class Direction : std::uint8_t { E, NE, N, NW, W, SW, S, SE };

inline constexpr std::array<Direction, 8> kAllDirections = {
    Direction::E, Direction::NE, Direction::N, Direction::NW,
    Direction::W, Direction::SW, Direction::S, Direction::SE};

struct Offset {
  int row;
  int col;
  friend bool operator==(const Offset&, const Offset&) = default;
};

constexpr Offset neighbor_offset(Direction direction) noexcept {
  switch (direction) {
    case Direction::E: return {0, 1};
    case Direction::NE: return {-1, 1};
    case Direction::N: return {-1, 0};
    case Direction::NW: return {-1, -1};
    case Direction::W: return {0, -1};
    case Direction::SW: return {1, -1};
    case Direction::S: return {1, 0};
    case Direction::SE: return {1, 1};
  }
  return {0, 0};
}

constexpr Direction opposite(Direction direction) noexcept {
  return static_cast<Direction>((static_cast<int>(direction) + 4) % 8);
}

/// Compass angle in degrees, East = 0, counter-clockwise.
constexpr int angle_degrees(Direction direction) noexcept {
  return static_cast<int>(direction) * 45;
}

std::string_view to_string(Direction direction) noexcept;
/// Accepts the short lowercase or uppercase compass label ("e", "NE", ...).
std::optional<Direction> parse_direction(std::string_view text) noexcept;

/// Symmetric axes, each the union of two opposite directions.
enum class SymmetricAxis : std::uint8_t { Horizontal, Vertical, DiagonalMain, DiagonalAnti };

inline constexpr std::array<SymmetricAxis, 4> kAllAxes = {
    SymmetricAxis::Horizontal, SymmetricAxis::Vertical, SymmetricAxis::DiagonalMain,
    SymmetricAxis::DiagonalAnti};

/// Axes used for tabulated reports: Horizontal, Vertical, and the main diagonal.
inline constexpr std::array<SymmetricAxis, 3> kReportAxes = {
    SymmetricAxis::Horizontal, SymmetricAxis::Vertical, SymmetricAxis::DiagonalMain};

/// The two directions that make up an axis. The first member is the one the
/// accumulation kernels walk (E, S, SE, NE).
constexpr std::pair<Direction, Direction> constituents(SymmetricAxis axis) noexcept {
  switch (axis) {
    case SymmetricAxis::Horizontal: return {Direction::E, Direction::W};
    case SymmetricAxis::Vertical: return {Direction::S, Direction::N};
    case SymmetricAxis::DiagonalMain: return {Direction::SE, Direction::NW};
    case SymmetricAxis::DiagonalAnti: return {Direction::NE, Direction::SW};
  }
  return {Direction::E, Direction::W};
}

/// "horizontal", "vertical", "diagonal", "diagonal-anti".
std::string_view to_string(SymmetricAxis axis) noexcept;
/// Accepts the long names above plus "h", "v", "d".
std::optional<SymmetricAxis> parse_axis(std::string_view text) noexcept;

/// Number of in-grid (reference, neighbor) pairs for one direction, pooled
/// over channels: channels * (rows - |dr|) * (cols - |dc|).
std::uint64_t pair_count(const PixelGrid& grid, Direction direction) noexcept;

// --- file I/O ---------------------------------------------------------------

/// Decodes an in-memory image. Netpbm (P2, P5, P3, P6) is always available;
/// PNG only when the library was built with libpng.
PixelGrid decode_image(std::span<const std::byte> bytes);

/// Reads and decodes a file. Throws IoError when the file cannot be read,
/// FormatError for unsupported content, DimensionError for empty images.
PixelGrid load_image(const std::filesystem::path& path);

enum class NetpbmEncoding { Ascii, Binary };

/// PGM for single-channel grids, PPM for RGB grids; maxval is always 255.
std::string encode_netpbm(const PixelGrid& grid, NetpbmEncoding encoding = NetpbmEncoding::Binary);

void save_netpbm(const PixelGrid& grid, const std::filesystem::path& path,
                 NetpbmEncoding encoding = NetpbmEncoding::Binary);

/// True when the library was compiled with PNG decoding.
bool png_supported() noexcept;

}  // namespace texturematrix
