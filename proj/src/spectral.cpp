#include "hcwalk/spectral.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hcwalk/errors.hpp"

namespace hcwalk {

PairState basis_state(const PairBasis& basis, int i, int j) {
  PairState psi;
  psi.basis = basis;
  psi.amplitudes = Eigen::VectorXcd::Zero(basis.dim);
  psi.amplitudes[basis.rank(i, j)] = 1.0;
  return psi;
}

double norm_squared(const PairState& psi) { return psi.amplitudes.squaredNorm(); }

SpectralDecomposition eigendecompose(const HamiltonianMatrix& h) {
  const int dim = h.basis.dim;
  if (h.entries.rows() != dim || h.entries.cols() != dim)
    throw std::invalid_argument("eigendecompose: entries do not match basis dim");

  SpectralDecomposition sd;
  sd.basis = h.basis;
  sd.modes = h.entries;  // overwritten with eigenvectors
  sd.energies.resize(dim);

  // Error budget: dsyevd leaves |dE| ~ eps*||H||. A phase at time tau picks
  // up tau*dE, so at tau = 1e4/t and ||H|| <~ 50t the phase error stays
  // below ~1e-7 rad. The residual invariants in the tests hold this.
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', dim,
                                         sd.modes.data(), dim, sd.energies.data());
  if (info != 0)
    throw ComputationalError("dsyevd did not converge (info=" + std::to_string(info) +
                             ", dim=" + std::to_string(dim) + ")");
  return sd;
}

Eigen::VectorXd eigenvalues_only(const HamiltonianMatrix& h) {
  const int dim = h.basis.dim;
  if (h.entries.rows() != dim || h.entries.cols() != dim)
    throw std::invalid_argument("eigenvalues_only: entries do not match basis dim");

  Eigen::VectorXd w(dim);
  const int kd = half_bandwidth(h.entries);
  if (6 * (kd + 1) <= dim) {
    // Band storage, lower triangle: ab(i-j, j) = H(i,j) for j <= i <= j+kd.
    const int ldab = kd + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * dim, 0.0);
    for (int j = 0; j < dim; ++j)
      for (int i = j; i <= std::min(dim - 1, j + kd); ++i)
        ab[static_cast<std::size_t>(j) * ldab + (i - j)] = h.entries(i, j);
    double z = 0.0;
    const lapack_int info = LAPACKE_dsbevd(LAPACK_COL_MAJOR, 'N', 'L', dim, kd,
                                           ab.data(), ldab, w.data(), &z, 1);
    if (info != 0)
      throw ComputationalError("dsbevd did not converge (info=" + std::to_string(info) + ")");
    return w;
  }

  Eigen::MatrixXd a = h.entries;
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', dim, a.data(), dim, w.data());
  if (info != 0)
    throw ComputationalError("dsyevd did not converge (info=" + std::to_string(info) + ")");
  return w;
}

PairState evolve(const SpectralDecomposition& decomp, const PairState& psi0, double tau,
                 Exec exec) {
  if (psi0.basis.dim != decomp.basis.dim || psi0.amplitudes.size() != decomp.basis.dim)
    throw std::invalid_argument("evolve: state and decomposition dimensions differ");
  PairState out;
  out.basis = psi0.basis;
  out.time = psi0.time + tau;
  kernels::spectral_propagate(decomp.modes, decomp.energies, tau, psi0.amplitudes,
                              out.amplitudes, exec);
  return out;
}

}  // namespace hcwalk
