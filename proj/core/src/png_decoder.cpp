#include <array>
#include <cstring>
#include <memory>

#include <fmt/format.h>

#include "decoders.hpp"
#include "texturematrix/errors.hpp"

#if defined(TEXTUREMATRIX_HAVE_PNG)
#include <png.h>
#endif

namespace texturematrix::detail {

namespace {
constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
}  // namespace

bool has_png_signature(std::span<const std::byte> bytes) noexcept {
  return bytes.size() >= kPngSignature.size() &&
         std::memcmp(bytes.data(), kPngSignature.data(), kPngSignature.size()) == 0;
}

#if defined(TEXTUREMATRIX_HAVE_PNG)

namespace {

struct MemorySource {
  std::span<const std::byte> bytes;
  std::size_t pos = 0;
};

void read_from_memory(png_structp png, png_bytep out, png_size_t length) {
  auto* source = static_cast<MemorySource*>(png_get_io_ptr(png));
  if (source->bytes.size() - source->pos < length) {
    png_error(png, "truncated PNG stream");
  }
  std::memcpy(out, source->bytes.data() + source->pos, length);
  source->pos += length;
}

// libpng reports errors via longjmp; record the message and unwind through setjmp.
struct ErrorSink {
  std::string message;
};

void on_error(png_structp png, png_const_charp message) {
  auto* sink = static_cast<ErrorSink*>(png_get_error_ptr(png));
  sink->message = message;
  png_longjmp(png, 1);
}

void on_warning(png_structp, png_const_charp) {}

}  // namespace

PixelGrid decode_png(std::span<const std::byte> bytes) {
  MemorySource source{bytes};
  ErrorSink sink;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink, on_error, on_warning);
  if (png == nullptr) throw FormatError("cannot initialise PNG decoder");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw FormatError("cannot initialise PNG decoder");
  }

  // Heap-held so the pointers stay fixed across setjmp.
  const auto interleaved = std::make_unique<std::vector<GreyLevel>>();
  const auto row_pointers = std::make_unique<std::vector<png_bytep>>();
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int color_type = 0;
  volatile bool rejected = false;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError(fmt::format("PNG decode failed: {}", sink.message));
  }

  png_set_read_fn(png, &source, read_from_memory);
  png_read_info(png, info);
  png_get_IHDR(png, info, &width, &height, &bit_depth, &color_type, nullptr, nullptr, nullptr);
  if (bit_depth != 8 || (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_RGB) ||
      png_get_valid(png, info, PNG_INFO_tRNS) != 0) {
    rejected = true;
  } else {
    const std::size_t channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    interleaved->resize(stride * height);
    row_pointers->resize(height);
    for (png_uint_32 r = 0; r < height; ++r) (*row_pointers)[r] = interleaved->data() + r * stride;
    png_read_image(png, row_pointers->data());
    png_read_end(png, nullptr);
  }
  png_destroy_read_struct(&png, &info, nullptr);

  std::vector<GreyLevel> pixels = std::move(*interleaved);

  if (rejected) {
    const char* kind = "unsupported";
    switch (color_type) {
      case PNG_COLOR_TYPE_PALETTE: kind = "palette"; break;
      case PNG_COLOR_TYPE_GRAY_ALPHA: kind = "grey+alpha"; break;
      case PNG_COLOR_TYPE_RGB_ALPHA: kind = "rgb+alpha"; break;
      default: break;
    }
    if (bit_depth != 8) {
      throw FormatError(fmt::format("unsupported PNG bit depth {} (only 8 accepted)", bit_depth));
    }
    throw FormatError(fmt::format("unsupported PNG color type {} ({}); only 8-bit grey or RGB",
                                  color_type, kind));
  }
  if (width == 0 || height == 0) {
    throw DimensionError("image has zero dimension");
  }

  const std::size_t channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
  if (channels == 1) return PixelGrid(height, width, 1, std::move(pixels));
  const std::size_t plane = static_cast<std::size_t>(width) * height;
  std::vector<GreyLevel> planar(pixels.size());
  for (std::size_t p = 0; p < plane; ++p) {
    for (std::size_t c = 0; c < 3; ++c) planar[c * plane + p] = pixels[p * 3 + c];
  }
  return PixelGrid(height, width, 3, std::move(planar));
}

#else

PixelGrid decode_png(std::span<const std::byte>) {
  throw FormatError("PNG input is not supported by this build (libpng unavailable)");
}

#endif

}  // namespace texturematrix::detail

namespace texturematrix {

bool png_supported() noexcept {
#if defined(TEXTUREMATRIX_HAVE_PNG)
  return true;
#else
  return false;
#endif
}

}  // namespace texturematrix
