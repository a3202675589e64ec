#pragma once

#include <array>
#include <complex>
#include <vector>

#include "hcwalk/kernels.hpp"
#include "hcwalk/spectral.hpp"

namespace hcwalk {

/// Two-impurity scattering geometry: a pair launched between two vacant
/// barrier sites, with a complex absorbing potential on every site strictly
/// outside the closed barrier interval.
struct ScatterSetup {
  ModelSpec spec;                         // barrier sites must be among its vacancies
  std::array<int, 2> barrier_sites{9, 30};  // 0-based
  std::array<int, 2> start_sites{19, 20};
  double absorb_strength = 1.0;  // gamma, units of t
  double measure_time = 20.0;    // units of 1/t
};

void validate(const ScatterSetup& setup);

// Assembles the spec (vacancies = barriers) plus geometry in one go.
ScatterSetup make_scatter_setup(int n_sites, std::array<int, 2> barriers,
                                std::array<int, 2> starts, HoppingKind hopping, double alpha,
                                double beta, double v_over_t, double gamma, double tau);

/// H - i*diag(cap): the Hermitian part in sparse rows, the absorbing diagonal
/// separately. cap(state (i,j)) = gamma*(w(i)+w(j)), w = 1 strictly outside
/// [barrier_lo, barrier_hi].
struct AbsorbingHamiltonian {
  PairBasis basis;
  kernels::CsrMatrix hermitian;  // hopping + interaction diagonal
  Eigen::VectorXd cap;

  Eigen::MatrixXcd dense() const;  // small-scale checks only
};

AbsorbingHamiltonian build_absorbing_hamiltonian(const ScatterSetup& setup);

// Fixed-step RK4 on i dpsi/dt = (H - i*cap) psi. The norm must not grow; a
// per-step increase beyond 1e-12 raises ComputationalError.
PairState propagate_absorbing(const AbsorbingHamiltonian& hc, const PairState& psi0, double tau,
                              double dtau, Exec exec = Exec::omp);

// Probability that BOTH particles sit inside [barrier_lo, barrier_hi].
double survival_probability(const PairState& psi, int barrier_lo, int barrier_hi);

// Particle density summed over the interior sites (counts one-in/one-out
// pairs at half weight). This matches the figure captions literally and is
// the CLI default.
double interior_density(const PairState& psi, int barrier_lo, int barrier_hi);

enum class SurvivalMeasure { pair_interior, density };

struct SurvivalPoint {
  double v_over_t = 0.0;
  double survival = 0.0;
  double gamma = 0.0;
  double dtau = 0.0;
};

// Independent scan points; runs them in parallel with serial kernels inside.
std::vector<SurvivalPoint> survival_scan(const ScatterSetup& base,
                                         const std::vector<double>& v_grid,
                                         SurvivalMeasure measure, double dtau,
                                         int n_threads = 0);

}  // namespace hcwalk
