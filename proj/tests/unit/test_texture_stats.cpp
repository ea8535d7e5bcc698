#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"
#include "texturematrix/texture_stats.hpp"

using namespace texturematrix;
using texturematrix::testing::grid_of;
using texturematrix::testing::literal_stats;

namespace {

ProbabilityMatrix two_cell_matrix() {
  std::vector<double> probs(kMatrixCells, 0.0);
  probs[0 * kGreyLevels + 255] = 0.5;
  probs[255 * kGreyLevels + 0] = 0.5;
  return ProbabilityMatrix::from_probabilities(SymmetricAxis::Horizontal, probs);
}

TextureStatistics with_contrast(SymmetricAxis axis, double contrast) {
  TextureStatistics s;
  s.axis = axis;
  s.contrast = contrast;
  return s;
}

void check_against_literal(const ProbabilityMatrix& p) {
  const TextureStatistics s = compute_stats(p);
  const auto lit = literal_stats(p);
  const double tol = 1e-9;
  CHECK(std::abs(s.contrast - static_cast<double>(lit.contrast)) <= tol);
  CHECK(std::abs(s.dissimilarity - static_cast<double>(lit.dissimilarity)) <= tol);
  CHECK(std::abs(s.homogeneity - static_cast<double>(lit.homogeneity)) <= tol);
  CHECK(std::abs(s.angular_second_moment - static_cast<double>(lit.asm_)) <= tol);
  CHECK(std::abs(s.energy - static_cast<double>(lit.energy)) <= tol);
  CHECK(s.max_probability == static_cast<double>(lit.max_probability));
  CHECK(std::abs(s.entropy - static_cast<double>(lit.entropy)) <= tol);
  CHECK(std::abs(s.mean - static_cast<double>(lit.mean_i)) <= tol);
  CHECK(std::abs(s.mean - static_cast<double>(lit.mean_j)) <= tol);
  CHECK(std::abs(s.std_dev - static_cast<double>(lit.std_i)) <= tol);
  CHECK(std::abs(s.std_dev - static_cast<double>(lit.std_j)) <= tol);
  CHECK(std::abs(s.correlation - static_cast<double>(lit.correlation)) <= tol);
}

}  // namespace

TEST_CASE("constant image") {
  const PixelGrid g = grid_of(5, 4, std::vector<int>(20, 77));
  for (SymmetricAxis axis : kAllAxes) {
    const auto s = compute_stats(normalize(symmetric_glcm(g, axis)));
    CHECK(s.axis == axis);
    CHECK(s.contrast == 0.0);
    CHECK(s.dissimilarity == 0.0);
    CHECK(s.homogeneity == 1.0);
    CHECK(s.angular_second_moment == 1.0);
    CHECK(s.energy == 1.0);
    CHECK(s.max_probability == 1.0);
    CHECK(s.entropy == 0.0);
    CHECK(s.mean == 77.0);
    CHECK(s.std_dev == 0.0);
    CHECK(s.correlation == 1.0);
    CHECK(s.degenerate);
  }
}

TEST_CASE("two-cell distribution at 0 and 255") {
  const ProbabilityMatrix p = two_cell_matrix();
  const auto s = compute_stats(p);
  // Frozen from an exact-arithmetic evaluation of the definitions.
  CHECK(s.contrast == doctest::Approx(65025.0).epsilon(1e-15));
  CHECK(s.dissimilarity == doctest::Approx(255.0).epsilon(1e-15));
  CHECK(std::abs(s.homogeneity - 1.5378463999015778e-05) <= 1e-18);
  CHECK(s.angular_second_moment == 0.5);
  CHECK(std::abs(s.energy - 0.7071067811865476) <= 1e-15);
  CHECK(s.max_probability == 0.5);
  CHECK(std::abs(s.entropy - std::log(2.0)) <= 1e-15);
  CHECK(s.mean == 127.5);
  CHECK(s.std_dev == 127.5);
  CHECK(s.correlation == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_FALSE(s.degenerate);
  check_against_literal(p);
}

TEST_CASE("agrees with the literal full-loop evaluation on random grids") {
  for (const PixelGrid& g : texturematrix::testing::property_corpus(31, 60)) {
    for (SymmetricAxis axis : kAllAxes) {
      if (pair_count(g, constituents(axis).first) == 0) continue;
      check_against_literal(normalize(symmetric_glcm(g, axis)));
    }
  }
}

TEST_CASE("identities and ranges") {
  for (const PixelGrid& g : texturematrix::testing::property_corpus(32, 100)) {
    for (SymmetricAxis axis : kAllAxes) {
      if (pair_count(g, constituents(axis).first) == 0) continue;
      const auto p = normalize(symmetric_glcm(g, axis));
      const auto s = compute_stats(p);
      CHECK(std::abs(s.energy * s.energy - s.angular_second_moment) <= 1e-12);
      CHECK(s.max_probability >= s.angular_second_moment - 1e-15);
      CHECK(s.max_probability <= 1.0);
      CHECK(s.homogeneity > 0.0);
      CHECK(s.homogeneity <= 1.0 + 1e-15);
      CHECK(s.angular_second_moment > 0.0);
      CHECK(s.angular_second_moment <= 1.0);
      CHECK(s.entropy >= 0.0);
      CHECK(s.contrast >= 0.0);
      CHECK(std::abs(s.correlation) <= 1.0 + 1e-12);
      CHECK((s.contrast == 0.0) == (s.dissimilarity == 0.0));
      if (s.contrast == 0.0) CHECK(s.homogeneity == doctest::Approx(1.0).epsilon(1e-15));
      if (s.contrast > 0.0) CHECK(s.homogeneity < 1.0);

      const auto m = marginal_moments(p);
      CHECK(m.mean_over_reference == m.mean_over_neighbor);
      CHECK(m.std_dev_over_reference == m.std_dev_over_neighbor);
      CHECK(m.mean_over_reference == s.mean);
    }
  }
}

TEST_CASE("grey-level shift moves only the mean") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> shift_dist(1, 55);
  for (int trial = 0; trial < 60; ++trial) {
    auto spec = texturematrix::testing::random_spec(rng);
    spec.max_level = 200;
    const PixelGrid g = texturematrix::testing::random_grid(rng, spec);
    const int shift = shift_dist(rng);
    std::vector<int> shifted;
    for (GreyLevel v : g.values()) shifted.push_back(v + shift);
    const PixelGrid h = PixelGrid::from_levels(g.rows(), g.cols(), g.channels(), shifted);
    for (SymmetricAxis axis : kReportAxes) {
      if (pair_count(g, constituents(axis).first) == 0) continue;
      const auto a = compute_stats(normalize(symmetric_glcm(g, axis)));
      const auto b = compute_stats(normalize(symmetric_glcm(h, axis)));
      CHECK(std::abs(a.contrast - b.contrast) <= 1e-9);
      CHECK(std::abs(a.dissimilarity - b.dissimilarity) <= 1e-9);
      CHECK(std::abs(a.homogeneity - b.homogeneity) <= 1e-9);
      CHECK(std::abs(a.angular_second_moment - b.angular_second_moment) <= 1e-9);
      CHECK(std::abs(a.energy - b.energy) <= 1e-9);
      CHECK(std::abs(a.max_probability - b.max_probability) <= 1e-9);
      CHECK(std::abs(a.entropy - b.entropy) <= 1e-9);
      CHECK(std::abs(a.std_dev - b.std_dev) <= 1e-9);
      CHECK(std::abs(a.correlation - b.correlation) <= 1e-9);
      CHECK(std::abs((b.mean - a.mean) - shift) <= 1e-9);
    }
  }
}

TEST_CASE("transposing a symmetric matrix changes nothing") {
  for (const PixelGrid& g : texturematrix::testing::property_corpus(34, 40)) {
    if (pair_count(g, Direction::S) == 0) continue;
    const auto m = symmetric_glcm(g, SymmetricAxis::Vertical);
    const auto a = compute_stats(normalize(m));
    const auto b = compute_stats(normalize(transpose(m)));
    CHECK(a.contrast == b.contrast);
    CHECK(a.entropy == b.entropy);
    CHECK(a.correlation == b.correlation);
    CHECK(a.mean == b.mean);
  }
}

TEST_CASE("entropy of n equal cells is ln n") {
  for (std::size_t n = 1; n <= kGreyLevels; ++n) {
    CooccurrenceMatrix m(SymmetricAxis::Horizontal);
    for (std::size_t k = 0; k < n; ++k) m.increment(static_cast<GreyLevel>(k), static_cast<GreyLevel>(k));
    const auto s = compute_stats(normalize(m));
    REQUIRE(std::abs(s.entropy - std::log(static_cast<double>(n))) <= 1e-12);
  }
}

TEST_CASE("average contrast") {
  using A = SymmetricAxis;
  CHECK(format_fixed(average_contrast(with_contrast(A::Horizontal, 1.11), with_contrast(A::Vertical, 1.00),
                                      with_contrast(A::DiagonalMain, 1.74)),
                     2) == "1.28");
  CHECK(format_fixed(average_contrast(with_contrast(A::Horizontal, 3462.06),
                                      with_contrast(A::Vertical, 2276.93),
                                      with_contrast(A::DiagonalMain, 3780.63)),
                     2) == "3173.21");
  CHECK(average_contrast(with_contrast(A::Horizontal, 42.5), with_contrast(A::Vertical, 42.5),
                         with_contrast(A::DiagonalMain, 42.5)) == 42.5);
  CHECK_THROWS_AS(average_contrast(with_contrast(A::Vertical, 1), with_contrast(A::Horizontal, 1),
                                   with_contrast(A::DiagonalMain, 1)),
                  ContractError);
}
