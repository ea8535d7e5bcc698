#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "texturematrix/pixel_grid.hpp"

namespace texturematrix {

inline constexpr std::size_t kGreyLevels = 256;
inline constexpr std::size_t kMatrixCells = kGreyLevels * kGreyLevels;

/// A co-occurrence matrix is built either for one direction or for a
/// symmetric axis (both opposite directions accumulated together).
using MatrixTag = std::variant<Direction, SymmetricAxis>;

/// 256 x 256 pair counts indexed (reference level, neighbor level).
class CooccurrenceMatrix {
 public:
  explicit CooccurrenceMatrix(MatrixTag tag);

  /// Takes ownership of kMatrixCells row-major counts; total_pairs is their sum.
  static CooccurrenceMatrix from_cells(MatrixTag tag, std::vector<std::uint64_t> cells);

  std::uint64_t operator()(std::size_t reference, std::size_t neighbor) const {
    return counts_[reference * kGreyLevels + neighbor];
  }

  void increment(GreyLevel reference, GreyLevel neighbor, std::uint64_t by = 1) {
    counts_[static_cast<std::size_t>(reference) * kGreyLevels + neighbor] += by;
    total_ += by;
  }

  std::span<const std::uint64_t> cells() const noexcept { return counts_; }
  std::uint64_t total_pairs() const noexcept { return total_; }
  const MatrixTag& tag() const noexcept { return tag_; }

  bool has_axis_tag() const noexcept { return std::holds_alternative<SymmetricAxis>(tag_); }
  /// Throws ContractError unless tagged with a SymmetricAxis.
  SymmetricAxis axis() const;

  /// counts(i, j) == counts(j, i) for every cell.
  bool is_symmetric() const noexcept;

  friend bool operator==(const CooccurrenceMatrix&, const CooccurrenceMatrix&) = default;

 private:
  CooccurrenceMatrix(MatrixTag tag, std::vector<std::uint64_t> cells, std::uint64_t total);

  std::vector<std::uint64_t> counts_;
  MatrixTag tag_;
  std::uint64_t total_ = 0;
};

/// Transposed counts. A direction tag becomes its opposite; axis tags are kept.
CooccurrenceMatrix transpose(const CooccurrenceMatrix& matrix);

/// Pools counts from all channels for one direction at distance 1.
/// Throws DegenerateGeometryError when the grid admits no pair.
CooccurrenceMatrix directional_glcm(const PixelGrid& image, Direction direction);

/// Both opposite directions of the axis, accumulated in one pass that records
/// (i, j) and (j, i) per pair. Same error contract as directional_glcm.
CooccurrenceMatrix symmetric_glcm(const PixelGrid& image, SymmetricAxis axis);

/// Joint probabilities P(i, j) = counts(i, j) / total_pairs for a symmetric
/// matrix.
class ProbabilityMatrix {
 public:
  /// Validates an externally built distribution: kMatrixCells entries in
  /// [0, 1], summing to 1 within 1e-9, symmetric. Throws ContractError.
  static ProbabilityMatrix from_probabilities(SymmetricAxis axis, std::vector<double> probs,
                                              std::uint64_t total_pairs = 0);

  double operator()(std::size_t reference, std::size_t neighbor) const {
    return probs_[reference * kGreyLevels + neighbor];
  }

  std::span<const double> cells() const noexcept { return probs_; }
  SymmetricAxis axis() const noexcept { return axis_; }
  /// Denominator used when built by normalize(); 0 for externally built ones.
  std::uint64_t total_pairs() const noexcept { return total_; }

 private:
  friend ProbabilityMatrix normalize(const CooccurrenceMatrix& glcm);
  ProbabilityMatrix(SymmetricAxis axis, std::vector<double> probs, std::uint64_t total)
      : probs_(std::move(probs)), axis_(axis), total_(total) {}

  std::vector<double> probs_;
  SymmetricAxis axis_;
  std::uint64_t total_;
};

/// Throws ContractError for direction-tagged or asymmetric input and
/// DegenerateGeometryError when total_pairs is 0.
ProbabilityMatrix normalize(const CooccurrenceMatrix& glcm);

/// CSV with header "i,j,count"; zero cells omitted, rows sorted by (i, j).
void write_glcm_csv(std::ostream& out, const CooccurrenceMatrix& matrix);

/// CSV with header "i,j,prob"; probabilities in shortest round-trip form, or
/// at 4 decimals when display_precision is set.
void write_nglcm_csv(std::ostream& out, const ProbabilityMatrix& matrix,
                     bool display_precision = false);

}  // namespace texturematrix
