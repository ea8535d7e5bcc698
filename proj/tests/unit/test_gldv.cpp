#include <doctest.h>

#include <numeric>
#include <sstream>

#include "test_support.hpp"
#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"
#include "texturematrix/gldv.hpp"
#include "texturematrix/texture_stats.hpp"

using namespace texturematrix;
using texturematrix::testing::grid_of;

namespace {

DifferenceVector unit_mass_at(int difference) {
  std::array<std::uint64_t, kDifferenceCount> counts{};
  counts[static_cast<std::size_t>(difference)] = 1;
  return DifferenceVector::from_counts(SymmetricAxis::Horizontal, counts);
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("constant image has all mass at difference zero") {
  const PixelGrid g = grid_of(4, 5, std::vector<int>(20, 9));
  for (SymmetricAxis axis : kAllAxes) {
    const auto v = gldv(symmetric_glcm(g, axis));
    CHECK(v[0].count == v.total_pairs());
    CHECK(v[0].probability == 1.0);
    for (std::size_t d = 1; d < kDifferenceCount; ++d) CHECK(v[d].count == 0);
  }
}

TEST_CASE("published diagonal difference vector") {
  std::array<std::uint64_t, kDifferenceCount> counts{};
  const std::array<std::uint64_t, 7> column = {6, 10, 14, 12, 6, 4, 8};
  std::copy(column.begin(), column.end(), counts.begin());
  const auto v = DifferenceVector::from_counts(SymmetricAxis::DiagonalMain, counts);
  CHECK(v.total_pairs() == 60);

  const std::array<const char*, 10> expected = {"0.1000", "0.1667", "0.2333", "0.2000", "0.1000",
                                                "0.0667", "0.1333", "0.0000", "0.0000", "0.0000"};
  for (std::size_t d = 0; d < expected.size(); ++d) {
    CHECK(v[d].difference == static_cast<int>(d));
    CHECK(format_fixed(v[d].probability, kUnitDecimals) == expected[d]);
  }

  const auto g = group_gldv(v);
  CHECK(g[0].count == 60);
  CHECK(format_fixed(g[0].probability, kUnitDecimals) == "1.0000");
  for (std::size_t k = 1; k < kGroupCount; ++k) {
    CHECK(g[k].count == 0);
    CHECK(format_fixed(g[k].probability, kUnitDecimals) == "0.0000");
  }
}

TEST_CASE("difference vector built from a matrix sums diagonal bands") {
  // Horizontal pairs of [0 1 3]: (0,1), (1,3) and mirrors.
  const auto v = gldv(symmetric_glcm(grid_of(1, 3, {0, 1, 3}), SymmetricAxis::Horizontal));
  CHECK(v[1].count == 2);
  CHECK(v[2].count == 2);
  CHECK(v.total_pairs() == 4);
  CHECK(v[1].probability == 0.5);
}

TEST_CASE("group boundaries") {
  CHECK(group_gldv(unit_mass_at(19))[0].count == 1);
  CHECK(group_gldv(unit_mass_at(20))[1].count == 1);
  CHECK(group_gldv(unit_mass_at(239))[11].count == 1);
  CHECK(group_gldv(unit_mass_at(240))[12].count == 1);
  CHECK(group_gldv(unit_mass_at(255))[12].count == 1);
  CHECK(group_gldv(unit_mass_at(255))[12].probability == 1.0);
}

TEST_CASE("groups partition 0..255") {
  std::array<int, kDifferenceCount> hits{};
  for (std::size_t k = 0; k < kGroupCount; ++k) {
    const auto [lo, hi] = kDifferenceGroups[k];
    CHECK(hi - lo + 1 == (k + 1 < kGroupCount ? 20 : 16));
    for (int d = lo; d <= hi; ++d) {
      ++hits[static_cast<std::size_t>(d)];
      CHECK(group_index(d) == k);
    }
  }
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("mass conservation on random grids") {
  for (const PixelGrid& img : texturematrix::testing::property_corpus(21, 80)) {
    for (SymmetricAxis axis : kAllAxes) {
      if (pair_count(img, constituents(axis).first) == 0) continue;
      const auto m = symmetric_glcm(img, axis);
      const auto v = gldv(m);
      std::uint64_t counted = 0;
      double prob = 0.0;
      for (const auto& e : v.entries()) {
        counted += e.count;
        prob += e.probability;
      }
      REQUIRE(counted == m.total_pairs());
      CHECK(prob == doctest::Approx(1.0).epsilon(1e-9));

      const auto g = group_gldv(v);
      std::uint64_t grouped = 0;
      double grouped_prob = 0.0;
      for (const auto& e : g.groups()) {
        grouped += e.count;
        grouped_prob += e.probability;
      }
      REQUIRE(grouped == counted);
      CHECK(grouped_prob == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("difference-form statistics agree with the matrix form") {
  for (const PixelGrid& img : texturematrix::testing::property_corpus(22, 60)) {
    for (SymmetricAxis axis : kReportAxes) {
      if (pair_count(img, constituents(axis).first) == 0) continue;
      const auto m = symmetric_glcm(img, axis);
      const auto s = compute_stats(normalize(m));
      const auto v = gldv(m);
      CHECK(std::abs(gldv_contrast(v) - s.contrast) <= 1e-9);
      CHECK(std::abs(gldv_dissimilarity(v) - s.dissimilarity) <= 1e-9);
      CHECK(std::abs(gldv_homogeneity(v) - s.homogeneity) <= 1e-9);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(gldv(directional_glcm(grid_of(1, 2, {1, 2}), Direction::E)), ContractError);
  CHECK_THROWS_AS(gldv(CooccurrenceMatrix(SymmetricAxis::Horizontal)), DegenerateGeometryError);
  CooccurrenceMatrix lopsided(SymmetricAxis::Horizontal);
  lopsided.increment(0, 3);
  CHECK_THROWS_AS(gldv(lopsided), ContractError);
  CHECK_THROWS_AS(DifferenceVector::from_counts(SymmetricAxis::Horizontal, {}), DegenerateGeometryError);
}

TEST_CASE("csv export shapes") {
  const auto v = gldv(symmetric_glcm(grid_of(1, 2, {0, 255}), SymmetricAxis::Horizontal));
  std::ostringstream full;
  write_gldv_csv(full, v);
  CHECK(line_count(full.str()) == 257);
  CHECK(full.str().rfind("difference,count,probability\n0,0,0\n", 0) == 0);
  CHECK(full.str().find("\n255,2,1\n") != std::string::npos);

  std::ostringstream groups;
  write_group_gldv_csv(groups, group_gldv(v), true);
  CHECK(line_count(groups.str()) == 14);
  CHECK(groups.str().rfind("range_lo,range_hi,count,probability\n0,19,0,0.0000\n", 0) == 0);
  CHECK(groups.str().find("\n240,255,2,1.0000\n") != std::string::npos);
}
