#include "texturematrix/gldv.hpp"

#include <ostream>

#include <fmt/format.h>

#include "compensated_sum.hpp"
#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix {

DifferenceVector DifferenceVector::from_counts(
    SymmetricAxis axis, const std::array<std::uint64_t, kDifferenceCount>& counts) {
  DifferenceVector v;
  v.axis_ = axis;
  for (std::uint64_t n : counts) v.total_ += n;
  if (v.total_ == 0) {
    throw DegenerateGeometryError("difference vector has no pairs");
  }
  const double denominator = static_cast<double>(v.total_);
  for (std::size_t d = 0; d < kDifferenceCount; ++d) {
    v.entries_[d] = {static_cast<int>(d), counts[d], static_cast<double>(counts[d]) / denominator};
  }
  return v;
}

DifferenceVector gldv(const CooccurrenceMatrix& glcm) {
  const SymmetricAxis axis = glcm.axis();
  if (!glcm.is_symmetric()) {
    throw ContractError("difference vector requires a symmetric co-occurrence matrix");
  }
  std::array<std::uint64_t, kDifferenceCount> counts{};
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    for (std::size_t j = 0; j < kGreyLevels; ++j) {
      counts[i > j ? i - j : j - i] += glcm(i, j);
    }
  }
  return DifferenceVector::from_counts(axis, counts);
}

GroupedDifferenceVector group_gldv(const DifferenceVector& vector) {
  GroupedDifferenceVector grouped;
  grouped.axis_ = vector.axis();
  grouped.total_ = vector.total_pairs();
  for (std::size_t g = 0; g < kGroupCount; ++g) {
    grouped.groups_[g] = {kDifferenceGroups[g].first, kDifferenceGroups[g].second, 0, 0.0};
  }
  for (const DifferenceEntry& e : vector.entries()) {
    grouped.groups_[group_index(e.difference)].count += e.count;
  }
  const double denominator = static_cast<double>(grouped.total_);
  for (DifferenceGroup& g : grouped.groups_) {
    g.probability = static_cast<double>(g.count) / denominator;
  }
  return grouped;
}

namespace {

template <typename Weight>
double weighted_sum(const DifferenceVector& vector, Weight weight) {
  detail::CompensatedSum sum;
  for (const DifferenceEntry& e : vector.entries()) {
    if (e.count != 0) sum.add(weight(static_cast<double>(e.difference)) * e.probability);
  }
  return sum.value();
}

}  // namespace

double gldv_contrast(const DifferenceVector& vector) {
  return weighted_sum(vector, [](double d) { return d * d; });
}

double gldv_dissimilarity(const DifferenceVector& vector) {
  return weighted_sum(vector, [](double d) { return d; });
}

double gldv_homogeneity(const DifferenceVector& vector) {
  return weighted_sum(vector, [](double d) { return 1.0 / (1.0 + d * d); });
}

namespace {
std::string render_probability(double p, bool display_precision) {
  return display_precision ? format_fixed(p, kUnitDecimals) : fmt::format("{}", p);
}
}  // namespace

void write_gldv_csv(std::ostream& out, const DifferenceVector& vector, bool display_precision) {
  out << "difference,count,probability\n";
  for (const DifferenceEntry& e : vector.entries()) {
    out << e.difference << ',' << e.count << ',' << render_probability(e.probability, display_precision)
        << '\n';
  }
}

void write_group_gldv_csv(std::ostream& out, const GroupedDifferenceVector& groups,
                          bool display_precision) {
  out << "range_lo,range_hi,count,probability\n";
  for (const DifferenceGroup& g : groups.groups()) {
    out << g.range_lo << ',' << g.range_hi << ',' << g.count << ','
        << render_probability(g.probability, display_precision) << '\n';
  }
}

}  // namespace texturematrix
