#include "texturematrix/texture_stats.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "compensated_sum.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix {
namespace {

struct Marginals {
  std::array<double, kGreyLevels> reference{};
  std::array<double, kGreyLevels> neighbor{};
};

Marginals marginals_of(const ProbabilityMatrix& m) {
  Marginals out;
  for (std::size_t k = 0; k < kGreyLevels; ++k) {
    detail::CompensatedSum row;
    detail::CompensatedSum col;
    for (std::size_t l = 0; l < kGreyLevels; ++l) {
      row.add(m(k, l));
      col.add(m(l, k));
    }
    out.reference[k] = row.value();
    out.neighbor[k] = col.value();
  }
  return out;
}

double mean_of(const std::array<double, kGreyLevels>& marginal) {
  detail::CompensatedSum sum;
  for (std::size_t k = 0; k < kGreyLevels; ++k) sum.add(static_cast<double>(k) * marginal[k]);
  return sum.value();
}

double std_dev_of(const std::array<double, kGreyLevels>& marginal, double mean) {
  detail::CompensatedSum sum;
  for (std::size_t k = 0; k < kGreyLevels; ++k) {
    const double dev = static_cast<double>(k) - mean;
    sum.add(dev * dev * marginal[k]);
  }
  return std::sqrt(sum.value());
}

}  // namespace

MarginalMoments marginal_moments(const ProbabilityMatrix& matrix) {
  const Marginals m = marginals_of(matrix);
  const double mean_i = mean_of(m.reference);
  const double mean_j = mean_of(m.neighbor);
  return {mean_i, mean_j, std_dev_of(m.reference, mean_i), std_dev_of(m.neighbor, mean_j)};
}

TextureStatistics compute_stats(const ProbabilityMatrix& matrix) {
  TextureStatistics s;
  s.axis = matrix.axis();

  const Marginals marginals = marginals_of(matrix);
  s.mean = mean_of(marginals.reference);
  s.std_dev = std_dev_of(marginals.reference, s.mean);
  const double variance = s.std_dev * s.std_dev;

  detail::CompensatedSum contrast, dissimilarity, homogeneity, asm_sum, entropy, covariance;
  double max_p = 0.0;
  for (std::size_t i = 0; i < kGreyLevels; ++i) {
    const double di = static_cast<double>(i) - s.mean;
    for (std::size_t j = 0; j < kGreyLevels; ++j) {
      const double p = matrix(i, j);
      if (p == 0.0) continue;
      const double diff = static_cast<double>(i) - static_cast<double>(j);
      const double sq = diff * diff;
      contrast.add(sq * p);
      dissimilarity.add(std::abs(diff) * p);
      homogeneity.add(p / (1.0 + sq));
      asm_sum.add(p * p);
      entropy.add(-p * std::log(p));
      covariance.add(p * di * (static_cast<double>(j) - s.mean));
      if (p > max_p) max_p = p;
    }
  }

  s.contrast = contrast.value();
  s.dissimilarity = dissimilarity.value();
  s.homogeneity = homogeneity.value();
  s.angular_second_moment = asm_sum.value();
  s.energy = std::sqrt(s.angular_second_moment);
  s.max_probability = max_p;
  // -p ln p is non-negative per cell; clamp the -0.0 of a single unit cell.
  s.entropy = entropy.value() <= 0.0 ? 0.0 : entropy.value();

  if (variance == 0.0) {
    s.correlation = 1.0;
    s.degenerate = true;
  } else {
    s.correlation = covariance.value() / variance;
  }
  return s;
}

double average_contrast(const TextureStatistics& horizontal, const TextureStatistics& vertical,
                        const TextureStatistics& diagonal) {
  if (horizontal.axis != SymmetricAxis::Horizontal || vertical.axis != SymmetricAxis::Vertical ||
      (diagonal.axis != SymmetricAxis::DiagonalMain && diagonal.axis != SymmetricAxis::DiagonalAnti)) {
    throw ContractError(fmt::format("average contrast expects horizontal, vertical, diagonal; got {}, {}, {}",
                                    to_string(horizontal.axis), to_string(vertical.axis),
                                    to_string(diagonal.axis)));
  }
  return (horizontal.contrast + vertical.contrast + diagonal.contrast) / 3.0;
}

}  // namespace texturematrix
