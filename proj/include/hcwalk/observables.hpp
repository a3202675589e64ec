#pragma once

#include <Eigen/Dense>

#include "hcwalk/spectral.hpp"

namespace hcwalk {

/// Joint probabilities Gamma_ij of finding one particle at i and the other
/// at j. Symmetric, zero diagonal; sums to ||psi||^2 over unordered pairs.
struct CorrelationMatrix {
  Eigen::MatrixXd values;  // N x N
};

/// Site density with the factor-1/2 pair convention: sums to 1 for a
/// normalized state.
struct DensityProfile {
  Eigen::VectorXd values;  // length N
};

CorrelationMatrix pair_correlations(const PairState& psi);

DensityProfile density(const PairState& psi);

// 1 / sum_i rho_i^2. A pure two-particle basis state gives 2, a perfectly
// uniform density gives N.
double participation_ratio(const DensityProfile& rho);

struct QuadrantWeights {
  double cowalk = 0.0;    // weight within |i-j| <= band of the diagonal
  double antiwalk = 0.0;  // weight in the opposite-corner quadrants
};

// Both weights are sums over unordered pairs i<j. antiwalk covers
// i <= start_lo, j >= start_hi minus the starting pair itself.
QuadrantWeights quadrant_weights(const CorrelationMatrix& gamma, int start_lo, int start_hi,
                                 int band);

// Number of interacting eigenvalues split off the non-interacting band:
// below min(free)-margin plus above max(free)+margin.
int count_bound_states(const Eigen::VectorXd& interacting, const Eigen::VectorXd& free_spectrum,
                       double margin);

// factor x the larger of the two edge level spacings of the free spectrum;
// finite lattices blur the split-off threshold by about this much.
double default_bound_state_margin(const Eigen::VectorXd& free_spectrum, double factor = 3.0);

}  // namespace hcwalk
