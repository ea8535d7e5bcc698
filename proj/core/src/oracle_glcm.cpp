#include "texturematrix/oracle.hpp"

#include <fmt/format.h>

#include "texturematrix/errors.hpp"

namespace texturematrix {

CooccurrenceMatrix oracle_glcm(const PixelGrid& image, Direction direction) {
  int dr = 0;
  int dc = 0;
  switch (direction) {
    case Direction::E: dc = 1; break;
    case Direction::W: dc = -1; break;
    case Direction::N: dr = -1; break;
    case Direction::S: dr = 1; break;
    case Direction::NE: dr = -1; dc = 1; break;
    case Direction::NW: dr = -1; dc = -1; break;
    case Direction::SE: dr = 1; dc = 1; break;
    case Direction::SW: dr = 1; dc = -1; break;
  }

  std::vector<std::uint64_t> cells(kMatrixCells, 0);
  std::uint64_t pairs = 0;
  const long rows = static_cast<long>(image.rows());
  const long cols = static_cast<long>(image.cols());
  for (std::size_t ch = 0; ch < image.channels(); ++ch) {
    for (long r = 0; r < rows; ++r) {
      for (long c = 0; c < cols; ++c) {
        const long nr = r + dr;
        const long nc = c + dc;
        if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
        const int i = image.at(ch, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        const int j = image.at(ch, static_cast<std::size_t>(nr), static_cast<std::size_t>(nc));
        cells[static_cast<std::size_t>(i) * 256 + static_cast<std::size_t>(j)] += 1;
        ++pairs;
      }
    }
  }
  if (pairs == 0) {
    throw DegenerateGeometryError(fmt::format("no {} pairs in {}x{} image", to_string(direction),
                                              image.rows(), image.cols()));
  }
  return CooccurrenceMatrix::from_cells(direction, std::move(cells));
}

CooccurrenceMatrix oracle_symmetric_glcm(const PixelGrid& image, SymmetricAxis axis) {
  const auto [forward, backward] = constituents(axis);
  const CooccurrenceMatrix a = oracle_glcm(image, forward);
  const CooccurrenceMatrix b = oracle_glcm(image, backward);
  std::vector<std::uint64_t> cells(kMatrixCells);
  for (std::size_t i = 0; i < 256; ++i) {
    for (std::size_t j = 0; j < 256; ++j) cells[i * 256 + j] = a(i, j) + b(i, j);
  }
  return CooccurrenceMatrix::from_cells(axis, std::move(cells));
}

}  // namespace texturematrix
