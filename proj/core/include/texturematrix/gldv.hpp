#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>

#include "texturematrix/glcm.hpp"

namespace texturematrix {

inline constexpr std::size_t kDifferenceCount = 256;
inline constexpr std::size_t kGroupCount = 13;

/// Inclusive difference ranges of the grouped vector: twelve 20-wide buckets
/// and a final 16-wide one (240-255).
inline constexpr std::array<std::pair<int, int>, kGroupCount> kDifferenceGroups = {{
    {0, 19}, {20, 39}, {40, 59}, {60, 79}, {80, 99}, {100, 119}, {120, 139},
    {140, 159}, {160, 179}, {180, 199}, {200, 219}, {220, 239}, {240, 255},
}};

/// Index into kDifferenceGroups for a difference in [0, 255].
constexpr std::size_t group_index(int difference) noexcept {
  return difference >= 240 ? kGroupCount - 1 : static_cast<std::size_t>(difference / 20);
}

struct DifferenceEntry {
  int difference;
  std::uint64_t count;
  double probability;
};

/// Distribution of |i - j| over a symmetric co-occurrence matrix.
class DifferenceVector {
 public:
  /// Builds from raw per-difference counts. Throws DegenerateGeometryError
  /// when every count is zero.
  static DifferenceVector from_counts(SymmetricAxis axis,
                                      const std::array<std::uint64_t, kDifferenceCount>& counts);

  const std::array<DifferenceEntry, kDifferenceCount>& entries() const noexcept { return entries_; }
  const DifferenceEntry& operator[](std::size_t difference) const { return entries_[difference]; }
  std::uint64_t total_pairs() const noexcept { return total_; }
  SymmetricAxis axis() const noexcept { return axis_; }

 private:
  DifferenceVector() = default;

  std::array<DifferenceEntry, kDifferenceCount> entries_{};
  SymmetricAxis axis_ = SymmetricAxis::Horizontal;
  std::uint64_t total_ = 0;
};

struct DifferenceGroup {
  int range_lo;
  int range_hi;
  std::uint64_t count;
  double probability;
};

class GroupedDifferenceVector {
 public:
  const std::array<DifferenceGroup, kGroupCount>& groups() const noexcept { return groups_; }
  const DifferenceGroup& operator[](std::size_t index) const { return groups_[index]; }
  std::uint64_t total_pairs() const noexcept { return total_; }
  SymmetricAxis axis() const noexcept { return axis_; }

 private:
  friend GroupedDifferenceVector group_gldv(const DifferenceVector& vector);
  GroupedDifferenceVector() = default;

  std::array<DifferenceGroup, kGroupCount> groups_{};
  SymmetricAxis axis_ = SymmetricAxis::Horizontal;
  std::uint64_t total_ = 0;
};

/// Sums each diagonal band |i - j| = d of a symmetric matrix. Throws
/// ContractError for direction-tagged or asymmetric input and
/// DegenerateGeometryError for an empty matrix.
DifferenceVector gldv(const CooccurrenceMatrix& glcm);

GroupedDifferenceVector group_gldv(const DifferenceVector& vector);

// Statistics that depend on (i, j) only through |i - j|, evaluated on the
// difference vector instead of the full matrix.
double gldv_contrast(const DifferenceVector& vector);
double gldv_dissimilarity(const DifferenceVector& vector);
double gldv_homogeneity(const DifferenceVector& vector);

/// "difference,count,probability", 256 rows.
void write_gldv_csv(std::ostream& out, const DifferenceVector& vector, bool display_precision = false);
/// "range_lo,range_hi,count,probability", 13 rows.
void write_group_gldv_csv(std::ostream& out, const GroupedDifferenceVector& groups,
                          bool display_precision = false);

}  // namespace texturematrix
