#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hcwalk/basis.hpp"
#include "hcwalk/kernels.hpp"

namespace hcwalk {

enum class HoppingKind { nearest_neighbour, power_law };

// The hopping scale t is the unit of energy throughout; all energies are
// reported in units of t and times in 1/t (hbar = 1).
inline constexpr double kHoppingScale = 1.0;

/// Everything that determines the two-particle Hamiltonian.
///
/// Vacant sites keep their basis states but have every hopping amplitude to
/// or from them set to zero. The pair interaction is not touched by
/// vacancies. Amplitudes started on non-vacant sites can therefore never
/// reach a vacant site, which makes this equivalent to deleting the site
/// while keeping the indexing uniform.
struct ModelSpec {
  int n_sites = 50;
  HoppingKind hopping = HoppingKind::power_law;
  double alpha = 3.0;  // hopping exponent (power_law mode)
  double beta = 3.0;   // interaction exponent
  double v_over_t = 0.0;
  std::vector<int> vacancies;  // 0-based
};

void validate(const ModelSpec& spec);

// t / |i-j|^alpha (or t for |i-j|==1 in NN mode), zero when either site is
// vacant. Throws std::invalid_argument for i == j or out-of-range sites.
double hop_amplitude(const ModelSpec& spec, int i, int j);

// v / |i-j|^beta. Vacancies do not zero the interaction.
double interaction_strength(const ModelSpec& spec, int i, int j);

struct HamiltonianMatrix {
  PairBasis basis;
  Eigen::MatrixXd entries;  // dim x dim, real symmetric, units of t
};

// Dense two-particle Hamiltonian over the pair basis. Diagonal of state
// (i,j) is the pair interaction; state (i,j) couples to (k,j) / (i,l) with
// the amplitude of the moved particle. Both triangles are filled from the
// same formula, so the matrix is symmetric to the last bit.
HamiltonianMatrix build_hamiltonian(const ModelSpec& spec, Exec exec = Exec::omp);

// Same with hopping forced to nearest-neighbour; interaction keeps its
// power-law form.
HamiltonianMatrix nn_mode_hamiltonian(const ModelSpec& spec, Exec exec = Exec::omp);

// Largest |row-col| carrying a nonzero entry; the banded eigensolver path
// keys off this.
int half_bandwidth(const Eigen::MatrixXd& m);

}  // namespace hcwalk
