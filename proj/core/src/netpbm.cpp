#include <charconv>
#include <string>

#include <fmt/format.h>

#include "decoders.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix::detail {
namespace {

class NetpbmReader {
 public:
  explicit NetpbmReader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads one unsigned decimal token.
  unsigned long read_number(std::string_view field) {
    skip_separators();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && is_digit(peek())) ++pos_;
    if (start == pos_) {
      throw FormatError(fmt::format("missing or malformed {}", field));
    }
    if (pos_ < bytes_.size() && !is_space(peek()) && peek() != '#') {
      throw FormatError(fmt::format("malformed {}", field));
    }
    unsigned long value = 0;
    const char* first = reinterpret_cast<const char*>(bytes_.data()) + start;
    const char* last = reinterpret_cast<const char*>(bytes_.data()) + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw FormatError(fmt::format("{} out of range", field));
    }
    return value;
  }

  // Binary rasters start after exactly one whitespace byte following maxval.
  std::span<const std::byte> binary_payload(std::size_t expected) {
    if (pos_ >= bytes_.size() || !is_space(peek())) {
      throw FormatError("missing separator before binary raster");
    }
    ++pos_;
    if (bytes_.size() - pos_ < expected) {
      throw FormatError(fmt::format("truncated raster: expected {} bytes, found {}", expected,
                                    bytes_.size() - pos_));
    }
    return bytes_.subspan(pos_, expected);
  }

 private:
  char peek() const { return static_cast<char>(bytes_[pos_]); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const char c = peek();
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < bytes_.size() && peek() != '\n' && peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::byte> bytes_;
  std::size_t pos_ = 2;  // past the magic number
};

}  // namespace

bool has_netpbm_magic(std::span<const std::byte> bytes) noexcept {
  if (bytes.size() < 2 || static_cast<char>(bytes[0]) != 'P') return false;
  const char kind = static_cast<char>(bytes[1]);
  return kind == '2' || kind == '3' || kind == '5' || kind == '6';
}

PixelGrid decode_netpbm(std::span<const std::byte> bytes) {
  if (!has_netpbm_magic(bytes)) {
    throw FormatError("magic number is not P2, P3, P5, or P6");
  }
  const char kind = static_cast<char>(bytes[1]);
  const bool ascii = kind == '2' || kind == '3';
  const std::size_t channels = (kind == '3' || kind == '6') ? 3 : 1;

  NetpbmReader reader(bytes);
  const unsigned long width = reader.read_number("width");
  const unsigned long height = reader.read_number("height");
  const unsigned long maxval = reader.read_number("maxval");
  if (width == 0 || height == 0) {
    throw DimensionError(fmt::format("image has zero dimension ({}x{})", height, width));
  }
  if (maxval != 255) {
    throw FormatError(fmt::format("unsupported maxval {} (only 8-bit maxval 255 is accepted)",
                                  maxval));
  }

  const std::size_t plane = static_cast<std::size_t>(width) * height;
  const std::size_t samples = plane * channels;
  std::vector<GreyLevel> planar(samples);

  // Netpbm interleaves channels per pixel; PixelGrid stores planes.
  auto store = [&](std::size_t index, unsigned long value) {
    const std::size_t pixel = index / channels;
    const std::size_t channel = index % channels;
    planar[channel * plane + pixel] = static_cast<GreyLevel>(value);
  };

  if (ascii) {
    for (std::size_t k = 0; k < samples; ++k) {
      const unsigned long value = reader.read_number("sample");
      if (value > maxval) {
        throw FormatError(fmt::format("sample {} exceeds maxval {}", value, maxval));
      }
      store(k, value);
    }
  } else {
    const auto raster = reader.binary_payload(samples);
    for (std::size_t k = 0; k < samples; ++k) {
      store(k, static_cast<unsigned long>(raster[k]));
    }
  }
  return PixelGrid(height, width, channels, std::move(planar));
}

}  // namespace texturematrix::detail

namespace texturematrix {

std::string encode_netpbm(const PixelGrid& grid, NetpbmEncoding encoding) {
  const bool rgb = grid.channels() == 3;
  const bool ascii = encoding == NetpbmEncoding::Ascii;
  const char* magic = rgb ? (ascii ? "P3" : "P6") : (ascii ? "P2" : "P5");
  std::string out = fmt::format("{}\n{} {}\n255\n", magic, grid.cols(), grid.rows());

  const std::size_t plane = grid.rows() * grid.cols();
  const auto values = grid.values();
  if (ascii) {
    for (std::size_t row = 0; row < grid.rows(); ++row) {
      for (std::size_t col = 0; col < grid.cols(); ++col) {
        const std::size_t pixel = row * grid.cols() + col;
        for (std::size_t c = 0; c < grid.channels(); ++c) {
          if (col != 0 || c != 0) out.push_back(' ');
          out += std::to_string(values[c * plane + pixel]);
        }
      }
      out.push_back('\n');
    }
  } else {
    out.reserve(out.size() + values.size());
    for (std::size_t pixel = 0; pixel < plane; ++pixel) {
      for (std::size_t c = 0; c < grid.channels(); ++c) {
        out.push_back(static_cast<char>(values[c * plane + pixel]));
      }
    }
  }
  return out;
}

}  // namespace texturematrix
