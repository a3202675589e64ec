#include "hcwalk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcwalk {

CorrelationMatrix pair_correlations(const PairState& psi) {
  const int n = psi.basis.n_sites;
  CorrelationMatrix gamma;
  gamma.values = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < psi.basis.dim; ++a) {
    const auto [i, j] = psi.basis.unrank(a);
    const double p = std::norm(psi.amplitudes[a]);
    gamma.values(i, j) = p;
    gamma.values(j, i) = p;
  }
  return gamma;
}

DensityProfile density(const PairState& psi) {
  const int n = psi.basis.n_sites;
  DensityProfile rho;
  rho.values = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < psi.basis.dim; ++a) {
    const auto [i, j] = psi.basis.unrank(a);
    const double p = 0.5 * std::norm(psi.amplitudes[a]);
    rho.values[i] += p;
    rho.values[j] += p;
  }
  return rho;
}

double participation_ratio(const DensityProfile& rho) {
  const double s = rho.values.squaredNorm();
  if (s == 0.0)
    throw std::invalid_argument("participation_ratio: density is identically zero");
  return 1.0 / s;
}

QuadrantWeights quadrant_weights(const CorrelationMatrix& gamma, int start_lo, int start_hi,
                                 int band) {
  const int n = static_cast<int>(gamma.values.rows());
  if (gamma.values.cols() != n)
    throw std::invalid_argument("quadrant_weights: matrix must be square");
  if (band < 0) throw std::invalid_argument("quadrant_weights: band must be >= 0");
  if (start_lo < 0 || start_hi >= n || start_lo >= start_hi)
    throw std::invalid_argument("quadrant_weights: need 0 <= start_lo < start_hi < N");

  QuadrantWeights w;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double g = gamma.values(i, j);
      if (j - i <= band) w.cowalk += g;
      if (i <= start_lo && j >= start_hi && !(i == start_lo && j == start_hi))
        w.antiwalk += g;
    }
  }
  return w;
}

int count_bound_states(const Eigen::VectorXd& interacting, const Eigen::VectorXd& free_spectrum,
                       double margin) {
  if (interacting.size() == 0 || free_spectrum.size() == 0)
    throw std::invalid_argument("count_bound_states: empty spectrum");
  if (margin < 0.0) throw std::invalid_argument("count_bound_states: margin must be >= 0");
  const double lo = free_spectrum.minCoeff() - margin;
  const double hi = free_spectrum.maxCoeff() + margin;
  int count = 0;
  for (int k = 0; k < interacting.size(); ++k)
    if (interacting[k] < lo || interacting[k] > hi) ++count;
  return count;
}

double default_bound_state_margin(const Eigen::VectorXd& free_spectrum, double factor) {
  if (free_spectrum.size() < 3)
    throw std::invalid_argument("default_bound_state_margin: need at least 3 levels");
  Eigen::VectorXd sorted = free_spectrum;
  std::sort(sorted.data(), sorted.data() + sorted.size());
  const int m = static_cast<int>(sorted.size());
  const double gap_lo = sorted[1] - sorted[0];
  const double gap_hi = sorted[m - 1] - sorted[m - 2];
  return factor * std::max(gap_lo, gap_hi);
}

}  // namespace hcwalk
