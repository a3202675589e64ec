#pragma once

#include <Eigen/Dense>
#include <complex>

#include "hcwalk/kernels.hpp"
#include "hcwalk/model.hpp"

namespace hcwalk {

struct SpectralDecomposition {
  PairBasis basis;
  Eigen::VectorXd energies;  // ascending, units of t
  Eigen::MatrixXd modes;     // orthonormal eigenvectors, column n <-> energies[n]
};

/// A two-particle wave packet: complex amplitude per pair-basis state.
struct PairState {
  PairBasis basis;
  Eigen::VectorXcd amplitudes;
  double time = 0.0;  // units of 1/t
};

// Unit amplitude on |i,j>.
PairState basis_state(const PairBasis& basis, int i, int j);

double norm_squared(const PairState& psi);

// Full symmetric eigendecomposition (LAPACK dsyevd). Throws
// ComputationalError if the solver does not converge.
SpectralDecomposition eigendecompose(const HamiltonianMatrix& h);

// Spectrum without eigenvectors. Uses the banded solver when the matrix is
// narrow-banded (nearest-neighbour pair Hamiltonians are), dense dsyevd
// otherwise.
Eigen::VectorXd eigenvalues_only(const HamiltonianMatrix& h);

// psi(t + tau) = sum_n exp(-i E_n tau) |n><n|psi>. Exact at any tau; this is
// what makes single-shot long-time evaluation cheap.
PairState evolve(const SpectralDecomposition& decomp, const PairState& psi0, double tau,
                 Exec exec = Exec::omp);

}  // namespace hcwalk
