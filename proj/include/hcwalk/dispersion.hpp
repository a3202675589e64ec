#pragma once

#include <vector>

#include "hcwalk/model.hpp"

namespace hcwalk {

// Direct summation of sum_{r>=1} r^-s resp. the alternating variant, with an
// Euler-Maclaurin tail so the truncation error is far below 1e-12. These are
// deliberately not hard-coded constants: they double as a cross-check of the
// band-edge numbers.
double zeta_sum(double s);  // s > 1
double eta_sum(double s);   // s >= 1

// Single-particle dispersion E(k) = 2t sum_{r>=1} cos(kr)/r^alpha
// (NN: 2t cos k). Supports alpha in {1,2,3}; alpha=1 diverges at k=0.
double single_dispersion(HoppingKind kind, double alpha, double k);

struct BandEdges {
  double single_min = 0.0;
  double single_max = 0.0;
  double two_particle_min = 0.0;
  double two_particle_max = 0.0;  // +infinity for alpha = 1
};

// Infinite-lattice band edges: two-particle edges (-4t*eta(alpha),
// +4t*zeta(alpha)) for power-law hopping, (-4t, +4t) for NN.
BandEdges band_edges(HoppingKind kind, double alpha);

// Periodic-ring variant of the pair Hamiltonian (distance = ring distance),
// used only to label states by total quasimomentum. Requires a clean
// (vacancy-free) spec.
HamiltonianMatrix build_ring_hamiltonian(const ModelSpec& spec, Exec exec = Exec::omp);

struct DispersionPoint {
  double total_momentum = 0.0;  // in (-pi, pi], units 1/a
  double energy = 0.0;
};

// Diagonalizes the ring Hamiltonian and resolves each eigenstate's total
// quasimomentum through the translation operator (degenerate levels get the
// translation matrix of their cluster diagonalized). Throws
// ComputationalError if a translation eigenvalue cannot be matched to a
// lattice momentum.
std::vector<DispersionPoint> two_particle_spectrum_vs_K(const HamiltonianMatrix& ring,
                                                        int n_sites);

}  // namespace hcwalk
