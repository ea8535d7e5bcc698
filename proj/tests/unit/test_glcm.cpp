#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"
#include "texturematrix/glcm.hpp"
#include "texturematrix/oracle.hpp"

using namespace texturematrix;
using texturematrix::testing::grid_of;

namespace {

std::size_t nonzero_cells(const CooccurrenceMatrix& m) {
  std::size_t n = 0;
  for (auto c : m.cells()) n += c != 0;
  return n;
}

CooccurrenceMatrix plus(const CooccurrenceMatrix& a, const CooccurrenceMatrix& b, MatrixTag tag) {
  std::vector<std::uint64_t> cells(kMatrixCells);
  for (std::size_t k = 0; k < kMatrixCells; ++k) cells[k] = a.cells()[k] + b.cells()[k];
  return CooccurrenceMatrix::from_cells(tag, std::move(cells));
}

}  // namespace

TEST_CASE("single eastward pair") {
  const auto m = directional_glcm(grid_of(1, 2, {5, 7}), Direction::E);
  CHECK(m(5, 7) == 1);
  CHECK(m.total_pairs() == 1);
  CHECK(nonzero_cells(m) == 1);
  CHECK(std::get<Direction>(m.tag()) == Direction::E);
}

TEST_CASE("one interior south-east pair") {
  const auto m = directional_glcm(grid_of(2, 2, {0, 1, 1, 0}), Direction::SE);
  CHECK(m(0, 0) == 1);
  CHECK(m.total_pairs() == 1);
  CHECK(nonzero_cells(m) == 1);
}

TEST_CASE("oracle on small examples") {
  const auto e = oracle_glcm(grid_of(1, 2, {5, 7}), Direction::E);
  CHECK(e(5, 7) == 1);
  CHECK(e.total_pairs() == 1);
  const auto s = oracle_glcm(grid_of(2, 2, {0, 1, 2, 3}), Direction::S);
  CHECK(s(0, 2) == 1);
  CHECK(s(1, 3) == 1);
  CHECK(s.total_pairs() == 2);
}

TEST_CASE("symmetric matrix holds a pair and its mirror") {
  const auto h = symmetric_glcm(grid_of(1, 2, {5, 7}), SymmetricAxis::Horizontal);
  CHECK(h(5, 7) == 1);
  CHECK(h(7, 5) == 1);
  CHECK(h.total_pairs() == 2);
  CHECK(h.axis() == SymmetricAxis::Horizontal);
}

TEST_CASE("the two diagonals differ in general") {
  const PixelGrid g = grid_of(2, 2, {0, 1, 1, 0});
  const auto main = symmetric_glcm(g, SymmetricAxis::DiagonalMain);
  const auto anti = symmetric_glcm(g, SymmetricAxis::DiagonalAnti);
  CHECK(main(0, 0) == 2);
  CHECK(nonzero_cells(main) == 1);
  CHECK(anti(1, 1) == 2);
  CHECK(nonzero_cells(anti) == 1);
  CHECK(main.cells().size() == anti.cells().size());
  CHECK_FALSE(std::equal(main.cells().begin(), main.cells().end(), anti.cells().begin()));
}

TEST_CASE("rgb planes pool without cross-channel pairs") {
  // Three planes of a 1x2 image; a cross-channel pairing would create (7, 1).
  const PixelGrid g = grid_of(1, 2, {5, 7, 1, 2, 5, 7}, 3);
  const auto m = directional_glcm(g, Direction::E);
  CHECK(m.total_pairs() == 3);
  CHECK(m(5, 7) == 2);
  CHECK(m(1, 2) == 1);
  CHECK(m(7, 1) == 0);
}

TEST_CASE("6x6 three-plane image gives 90 eastward pairs") {
  std::vector<int> values(6 * 6 * 3, 0);
  const auto m = directional_glcm(grid_of(6, 6, values, 3), Direction::E);
  CHECK(m.total_pairs() == 90);
}

TEST_CASE("degenerate geometry") {
  const PixelGrid column = grid_of(3, 1, {1, 2, 3});
  CHECK_THROWS_AS(directional_glcm(column, Direction::E), DegenerateGeometryError);
  CHECK_THROWS_AS(oracle_glcm(column, Direction::W), DegenerateGeometryError);
  CHECK_THROWS_AS(symmetric_glcm(column, SymmetricAxis::DiagonalMain), DegenerateGeometryError);
  CHECK(directional_glcm(column, Direction::S).total_pairs() == 2);
  const PixelGrid single = grid_of(1, 1, {4});
  for (Direction d : kAllDirections) CHECK_THROWS_AS(directional_glcm(single, d), DegenerateGeometryError);
}

TEST_CASE("production and oracle agree cell for cell") {
  for (const PixelGrid& g : texturematrix::testing::property_corpus(11, 80)) {
    for (Direction d : kAllDirections) {
      if (pair_count(g, d) == 0) {
        CHECK_THROWS_AS(directional_glcm(g, d), DegenerateGeometryError);
        continue;
      }
      REQUIRE(directional_glcm(g, d) == oracle_glcm(g, d));
    }
    for (SymmetricAxis axis : kAllAxes) {
      if (pair_count(g, constituents(axis).first) == 0) continue;
      REQUIRE(symmetric_glcm(g, axis) == oracle_symmetric_glcm(g, axis));
    }
  }
}

TEST_CASE("structural invariants on random grids") {
  for (const PixelGrid& g : texturematrix::testing::property_corpus(12, 80)) {
    for (Direction d : kAllDirections) {
      const std::uint64_t expected = pair_count(g, d);
      if (expected == 0) continue;
      const auto m = directional_glcm(g, d);
      const Offset o = neighbor_offset(d);
      CHECK(m.total_pairs() ==
            g.channels() * (g.rows() - std::abs(o.row)) * (g.cols() - std::abs(o.col)));
      REQUIRE(directional_glcm(g, opposite(d)) == transpose(m));
    }
    for (SymmetricAxis axis : kAllAxes) {
      const auto [forward, backward] = constituents(axis);
      if (pair_count(g, forward) == 0) continue;
      const auto s = symmetric_glcm(g, axis);
      CHECK(s.is_symmetric());
      CHECK(s.total_pairs() == 2 * pair_count(g, forward));
      const auto d = directional_glcm(g, forward);
      REQUIRE(s == plus(d, transpose(d), axis));
      REQUIRE(s == plus(d, directional_glcm(g, backward), axis));
    }
  }
}

TEST_CASE("normalize") {
  SUBCASE("two equal cells") {
    const auto p = normalize(symmetric_glcm(grid_of(1, 2, {5, 7}), SymmetricAxis::Horizontal));
    CHECK(p(5, 7) == 0.5);
    CHECK(p(7, 5) == 0.5);
    CHECK(p.total_pairs() == 2);
    CHECK(p.axis() == SymmetricAxis::Horizontal);
  }
  SUBCASE("direction-tagged input is a contract error") {
    CHECK_THROWS_AS(normalize(directional_glcm(grid_of(1, 2, {5, 7}), Direction::E)), ContractError);
  }
  SUBCASE("asymmetric axis-tagged input is a contract error") {
    CooccurrenceMatrix m(SymmetricAxis::Vertical);
    m.increment(1, 2);
    CHECK_THROWS_AS(normalize(m), ContractError);
  }
  SUBCASE("empty matrix is degenerate") {
    CHECK_THROWS_AS(normalize(CooccurrenceMatrix(SymmetricAxis::Vertical)), DegenerateGeometryError);
  }
  SUBCASE("sums to one and keeps the zero pattern") {
    for (const PixelGrid& g : texturematrix::testing::property_corpus(13, 60)) {
      if (pair_count(g, Direction::E) == 0) continue;
      const auto m = symmetric_glcm(g, SymmetricAxis::Horizontal);
      const auto p = normalize(m);
      double sum = 0.0;
      for (std::size_t k = 0; k < kMatrixCells; ++k) {
        sum += p.cells()[k];
        REQUIRE((p.cells()[k] == 0.0) == (m.cells()[k] == 0));
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
      for (std::size_t i = 0; i < kGreyLevels; ++i)
        for (std::size_t j = 0; j < kGreyLevels; ++j) REQUIRE(p(i, j) == p(j, i));
    }
  }
}

TEST_CASE("count column normalizes to the published probabilities") {
  // Counts placed on diagonal cells, which are symmetric by construction.
  const std::array<std::uint64_t, 7> counts = {6, 10, 14, 12, 6, 4, 8};
  const std::array<const char*, 7> expected = {"0.1000", "0.1667", "0.2333", "0.2000",
                                               "0.1000", "0.0667", "0.1333"};
  CooccurrenceMatrix m(SymmetricAxis::DiagonalMain);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    m.increment(static_cast<GreyLevel>(k * 30), static_cast<GreyLevel>(k * 30), counts[k]);
  }
  REQUIRE(m.total_pairs() == 60);
  const auto p = normalize(m);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    CHECK(format_fixed(p(k * 30, k * 30), 4) == expected[k]);
  }
}

TEST_CASE("ProbabilityMatrix validation") {
  std::vector<double> probs(kMatrixCells, 0.0);
  probs[0] = 1.0;
  CHECK_NOTHROW(ProbabilityMatrix::from_probabilities(SymmetricAxis::Horizontal, probs));
  probs[0] = 0.9;
  CHECK_THROWS_AS(ProbabilityMatrix::from_probabilities(SymmetricAxis::Horizontal, probs), ContractError);
  probs[0] = 0.5;
  probs[1] = 0.5;  // (0, 1) without its mirror
  CHECK_THROWS_AS(ProbabilityMatrix::from_probabilities(SymmetricAxis::Horizontal, probs), ContractError);
  CHECK_THROWS_AS(ProbabilityMatrix::from_probabilities(SymmetricAxis::Horizontal, {1.0}), ContractError);
}

TEST_CASE("csv export") {
  const auto h = symmetric_glcm(grid_of(1, 2, {5, 7}), SymmetricAxis::Horizontal);
  std::ostringstream counts;
  write_glcm_csv(counts, h);
  CHECK(counts.str() == "i,j,count\n5,7,1\n7,5,1\n");
  std::ostringstream probs;
  write_nglcm_csv(probs, normalize(h));
  CHECK(probs.str() == "i,j,prob\n5,7,0.5\n7,5,0.5\n");
}
