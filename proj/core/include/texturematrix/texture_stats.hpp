#pragma once

#include "texturematrix/glcm.hpp"

namespace texturematrix {

/// The ten second-order statistics of one normalized symmetric matrix.
struct TextureStatistics {
  SymmetricAxis axis = SymmetricAxis::Horizontal;
  double contrast = 0.0;          // sum (i - j)^2 P
  double dissimilarity = 0.0;     // sum |i - j| P
  double homogeneity = 0.0;       // sum P / (1 + (i - j)^2)
  double angular_second_moment = 0.0;  // sum P^2
  double energy = 0.0;            // sqrt(ASM)
  double max_probability = 0.0;
  double entropy = 0.0;           // -sum P ln P, with 0 ln 0 = 0
  double mean = 0.0;              // grey levels
  double std_dev = 0.0;           // grey levels
  double correlation = 0.0;
  /// Set when std_dev is 0; correlation is then reported as 1 by convention.
  bool degenerate = false;
};

/// Evaluates all ten statistics in row-major cell order with compensated
/// summation. Zero cells are skipped.
TextureStatistics compute_stats(const ProbabilityMatrix& matrix);

/// Mean computed from the reference (row) marginal and from the neighbor
/// (column) marginal. Both are summed in the same index order, so they are
/// bit-identical for a symmetric matrix.
struct MarginalMoments {
  double mean_over_reference;
  double mean_over_neighbor;
  double std_dev_over_reference;
  double std_dev_over_neighbor;
};
MarginalMoments marginal_moments(const ProbabilityMatrix& matrix);

/// Arithmetic mean of the three contrasts. Expects Horizontal, Vertical and a
/// diagonal axis in that order; throws ContractError otherwise.
double average_contrast(const TextureStatistics& horizontal, const TextureStatistics& vertical,
                        const TextureStatistics& diagonal);

}  // namespace texturematrix
