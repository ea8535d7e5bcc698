#include "texturematrix/glcm.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix {

CooccurrenceMatrix::CooccurrenceMatrix(MatrixTag tag)
    : counts_(kMatrixCells, 0), tag_(tag), total_(0) {}

CooccurrenceMatrix::CooccurrenceMatrix(MatrixTag tag, std::vector<std::uint64_t> cells,
                                       std::uint64_t total)
    : counts_(std::move(cells)), tag_(tag), total_(total) {}

CooccurrenceMatrix CooccurrenceMatrix::from_cells(MatrixTag tag, std::vector<std::uint64_t> cells) {
  if (cells.size() != kMatrixCells) {
    throw ContractError(fmt::format("expected {} cells, got {}", kMatrixCells, cells.size()));
  }
  const std::uint64_t total = std::accumulate(cells.begin(), cells.end(), std::uint64_t{0});
  return CooccurrenceMatrix(tag, std::move(cells), total);
}

SymmetricAxis CooccurrenceMatrix::axis() const {
  if (const auto* axis = std::get_if<SymmetricAxis>(&tag_)) return *axis;
  throw ContractError(fmt::format("matrix is tagged with direction {}, not a symmetric axis",
                                  to_string(std::get<Direction>(tag_))));
}

bool CooccurrenceMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    for (std::size_t j = i + 1; j < kGreyLevels; ++j) {
      if (counts_[i * kGreyLevels + j] != counts_[j * kGreyLevels + i]) return false;
    }
  }
  return true;
}

CooccurrenceMatrix transpose(const CooccurrenceMatrix& matrix) {
  std::vector<std::uint64_t> cells(kMatrixCells);
  const auto src = matrix.cells();
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    for (std::size_t j = 0; j < kGreyLevels; ++j) {
      cells[j * kGreyLevels + i] = src[i * kGreyLevels + j];
    }
  }
  MatrixTag tag = matrix.tag();
  if (const auto* direction = std::get_if<Direction>(&tag)) tag = opposite(*direction);
  return CooccurrenceMatrix::from_cells(tag, std::move(cells));
}

namespace {

struct Window {
  std::size_t row_begin, row_end, col_begin, col_end;
  std::ptrdiff_t neighbor_shift;  // linear offset from reference to neighbor
};

Window pairing_window(const PixelGrid& image, Direction direction) {
  if (pair_count(image, direction) == 0) {
    throw DegenerateGeometryError(fmt::format("{}x{} image has no {} neighbor pairs",
                                              image.rows(), image.cols(), to_string(direction)));
  }
  const Offset off = neighbor_offset(direction);
  Window w{};
  w.row_begin = off.row < 0 ? 1 : 0;
  w.row_end = off.row > 0 ? image.rows() - 1 : image.rows();
  w.col_begin = off.col < 0 ? 1 : 0;
  w.col_end = off.col > 0 ? image.cols() - 1 : image.cols();
  w.neighbor_shift = static_cast<std::ptrdiff_t>(off.row) * static_cast<std::ptrdiff_t>(image.cols()) + off.col;
  return w;
}

// Calls emit(reference, neighbor) for every in-grid pair, pooling channels.
template <typename Emit>
void for_each_pair(const PixelGrid& image, const Window& w, Emit&& emit) {
  const std::size_t cols = image.cols();
  for (std::size_t c = 0; c < image.channels(); ++c) {
    const GreyLevel* plane = image.plane(c).data();
    for (std::size_t r = w.row_begin; r < w.row_end; ++r) {
      const GreyLevel* ref = plane + r * cols + w.col_begin;
      const GreyLevel* nb = ref + w.neighbor_shift;
      const std::size_t n = w.col_end - w.col_begin;
      for (std::size_t k = 0; k < n; ++k) emit(ref[k], nb[k]);
    }
  }
}

}  // namespace

CooccurrenceMatrix directional_glcm(const PixelGrid& image, Direction direction) {
  const Window w = pairing_window(image, direction);
  std::vector<std::uint64_t> cells(kMatrixCells, 0);
  std::uint64_t* counts = cells.data();
  for_each_pair(image, w, [counts](GreyLevel i, GreyLevel j) {
    ++counts[static_cast<std::size_t>(i) * kGreyLevels + j];
  });
  return CooccurrenceMatrix::from_cells(direction, std::move(cells));
}

CooccurrenceMatrix symmetric_glcm(const PixelGrid& image, SymmetricAxis axis) {
  const Window w = pairing_window(image, constituents(axis).first);
  std::vector<std::uint64_t> cells(kMatrixCells, 0);
  std::uint64_t* counts = cells.data();
  for_each_pair(image, w, [counts](GreyLevel i, GreyLevel j) {
    ++counts[static_cast<std::size_t>(i) * kGreyLevels + j];
    ++counts[static_cast<std::size_t>(j) * kGreyLevels + i];
  });
  return CooccurrenceMatrix::from_cells(axis, std::move(cells));
}

ProbabilityMatrix ProbabilityMatrix::from_probabilities(SymmetricAxis axis,
                                                        std::vector<double> probs,
                                                        std::uint64_t total_pairs) {
  if (probs.size() != kMatrixCells) {
    throw ContractError(fmt::format("expected {} cells, got {}", kMatrixCells, probs.size()));
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ContractError(fmt::format("probability {} outside [0, 1]", p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ContractError(fmt::format("probabilities sum to {}, not 1", sum));
  }
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    for (std::size_t j = i + 1; j < kGreyLevels; ++j) {
      if (probs[i * kGreyLevels + j] != probs[j * kGreyLevels + i]) {
        throw ContractError(fmt::format("probability matrix not symmetric at ({}, {})", i, j));
      }
    }
  }
  return ProbabilityMatrix(axis, std::move(probs), total_pairs);
}

ProbabilityMatrix normalize(const CooccurrenceMatrix& glcm) {
  const SymmetricAxis axis = glcm.axis();
  if (!glcm.is_symmetric()) {
    throw ContractError("normalize requires a symmetric co-occurrence matrix");
  }
  const std::uint64_t total = glcm.total_pairs();
  if (total == 0) {
    throw DegenerateGeometryError("co-occurrence matrix has no pairs");
  }
  std::vector<double> probs(kMatrixCells);
  const double denominator = static_cast<double>(total);
  const auto counts = glcm.cells();
  for (std::size_t k = 0; k < kMatrixCells; ++k) {
    probs[k] = static_cast<double>(counts[k]) / denominator;
  }
  return ProbabilityMatrix(axis, std::move(probs), total);
}

void write_glcm_csv(std::ostream& out, const CooccurrenceMatrix& matrix) {
  out << "i,j,count\n";
  const auto counts = matrix.cells();
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    for (std::size_t j = 0; j < kGreyLevels; ++j) {
      if (const auto n = counts[i * kGreyLevels + j]; n != 0) out << fmt::format("{},{},{}\n", i, j, n);
    }
  }
}

void write_nglcm_csv(std::ostream& out, const ProbabilityMatrix& matrix, bool display_precision) {
  out << "i,j,prob\n";
  const auto probs = matrix.cells();
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    for (std::size_t j = 0; j < kGreyLevels; ++j) {
      const double p = probs[i * kGreyLevels + j];
      if (p == 0.0) continue;
      out << i << ',' << j << ','
          << (display_precision ? format_fixed(p, kUnitDecimals) : fmt::format("{}", p)) << '\n';
    }
  }
}

}  // namespace texturematrix
