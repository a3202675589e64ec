#include "hcwalk/openprop.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hcwalk/errors.hpp"

namespace hcwalk {

void validate(const ScatterSetup& setup) {
  validate(setup.spec);
  const int lo = std::min(setup.barrier_sites[0], setup.barrier_sites[1]);
  const int hi = std::max(setup.barrier_sites[0], setup.barrier_sites[1]);
  if (lo == hi) throw std::invalid_argument("ScatterSetup: barrier sites must differ");
  for (int b : {lo, hi}) {
    if (b < 0 || b >= setup.spec.n_sites)
      throw std::invalid_argument("ScatterSetup: barrier site " + std::to_string(b) +
                                  " outside the lattice");
    if (std::find(setup.spec.vacancies.begin(), setup.spec.vacancies.end(), b) ==
        setup.spec.vacancies.end())
      throw std::invalid_argument("ScatterSetup: barrier site " + std::to_string(b) +
                                  " is not vacant in the spec");
  }
  const int s0 = setup.start_sites[0];
  const int s1 = setup.start_sites[1];
  if (s0 == s1) throw std::invalid_argument("ScatterSetup: start sites must differ");
  for (int s : setup.start_sites) {
    if (s <= lo || s >= hi)
      throw std::invalid_argument("ScatterSetup: start site " + std::to_string(s) +
                                  " not strictly between the barriers");
    if (std::find(setup.spec.vacancies.begin(), setup.spec.vacancies.end(), s) !=
        setup.spec.vacancies.end())
      throw std::invalid_argument("ScatterSetup: start site " + std::to_string(s) + " is vacant");
  }
  if (setup.absorb_strength < 0.0)
    throw std::invalid_argument("ScatterSetup: absorb_strength must be >= 0");
  if (setup.measure_time < 0.0)
    throw std::invalid_argument("ScatterSetup: measure_time must be >= 0");
}

ScatterSetup make_scatter_setup(int n_sites, std::array<int, 2> barriers,
                                std::array<int, 2> starts, HoppingKind hopping, double alpha,
                                double beta, double v_over_t, double gamma, double tau) {
  ScatterSetup s;
  s.spec.n_sites = n_sites;
  s.spec.hopping = hopping;
  s.spec.alpha = alpha;
  s.spec.beta = beta;
  s.spec.v_over_t = v_over_t;
  s.spec.vacancies = {barriers[0], barriers[1]};
  s.barrier_sites = barriers;
  s.start_sites = starts;
  s.absorb_strength = gamma;
  s.measure_time = tau;
  validate(s);
  return s;
}

AbsorbingHamiltonian build_absorbing_hamiltonian(const ScatterSetup& setup) {
  validate(setup);
  const HamiltonianMatrix h = build_hamiltonian(setup.spec, Exec::serial);
  const int lo = std::min(setup.barrier_sites[0], setup.barrier_sites[1]);
  const int hi = std::max(setup.barrier_sites[0], setup.barrier_sites[1]);

  AbsorbingHamiltonian hc;
  hc.basis = h.basis;
  hc.hermitian = kernels::csr_from_dense(h.entries);
  hc.cap.resize(h.basis.dim);
  auto outside = [lo, hi](int s) { return s < lo || s > hi; };
  for (int a = 0; a < h.basis.dim; ++a) {
    const auto [i, j] = h.basis.unrank(a);
    hc.cap[a] =
        setup.absorb_strength * ((outside(i) ? 1.0 : 0.0) + (outside(j) ? 1.0 : 0.0));
  }
  return hc;
}

Eigen::MatrixXcd AbsorbingHamiltonian::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.dim, basis.dim);
  for (int r = 0; r < hermitian.rows; ++r)
    for (int k = hermitian.row_ptr[r]; k < hermitian.row_ptr[r + 1]; ++k)
      m(r, hermitian.col_idx[k]) += hermitian.values[k];
  for (int a = 0; a < basis.dim; ++a) m(a, a) -= std::complex<double>(0.0, cap[a]);
  return m;
}

namespace {

// y = -i*(H x) - cap.*x, evaluated as one fused pass after the sparse matvec.
void apply_rhs(const AbsorbingHamiltonian& hc, const std::complex<double>* x,
               std::complex<double>* hx, std::complex<double>* y, Exec exec) {
  kernels::csr_matvec(hc.hermitian, x, hx, exec);
  const int dim = hc.basis.dim;
#pragma omp parallel for schedule(static) if (exec == Exec::omp)
  for (int a = 0; a < dim; ++a) {
    const double g = hc.cap[a];
    y[a] = {hx[a].imag() - g * x[a].real(), -hx[a].real() - g * x[a].imag()};
  }
}

}  // namespace

PairState propagate_absorbing(const AbsorbingHamiltonian& hc, const PairState& psi0, double tau,
                              double dtau, Exec exec) {
  const int dim = hc.basis.dim;
  if (psi0.basis.dim != dim || psi0.amplitudes.size() != dim)
    throw std::invalid_argument("propagate_absorbing: state does not match the Hamiltonian");
  if (dtau <= 0.0) throw std::invalid_argument("propagate_absorbing: dtau must be > 0");
  if (tau < 0.0) throw std::invalid_argument("propagate_absorbing: tau must be >= 0");

  PairState psi = psi0;
  psi.time = psi0.time + tau;
  if (tau == 0.0) return psi;

  const long n_steps = std::max(1L, std::lround(tau / dtau));
  const double h = tau / static_cast<double>(n_steps);

  Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), stage(dim), hx(dim);
  auto* y = psi.amplitudes.data();

  double norm_prev = psi.amplitudes.squaredNorm();
  for (long step = 0; step < n_steps; ++step) {
    apply_rhs(hc, y, hx.data(), k1.data(), exec);
    for (int a = 0; a < dim; ++a) stage[a] = y[a] + 0.5 * h * k1[a];
    apply_rhs(hc, stage.data(), hx.data(), k2.data(), exec);
    for (int a = 0; a < dim; ++a) stage[a] = y[a] + 0.5 * h * k2[a];
    apply_rhs(hc, stage.data(), hx.data(), k3.data(), exec);
    for (int a = 0; a < dim; ++a) stage[a] = y[a] + h * k3[a];
    apply_rhs(hc, stage.data(), hx.data(), k4.data(), exec);
    for (int a = 0; a < dim; ++a)
      y[a] += (h / 6.0) * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);

    const double norm_now = psi.amplitudes.squaredNorm();
    if (!(norm_now <= norm_prev + 1e-12))
      throw ComputationalError(
          "propagate_absorbing: norm grew by more than 1e-12 in one step (dtau too large "
          "for this Hamiltonian), step " +
          std::to_string(step));
    norm_prev = norm_now;
  }
  return psi;
}

double survival_probability(const PairState& psi, int barrier_lo, int barrier_hi) {
  double p = 0.0;
  for (int a = 0; a < psi.basis.dim; ++a) {
    const auto [i, j] = psi.basis.unrank(a);
    if (i >= barrier_lo && j <= barrier_hi) p += std::norm(psi.amplitudes[a]);
  }
  return p;
}

double interior_density(const PairState& psi, int barrier_lo, int barrier_hi) {
  double p = 0.0;
  for (int a = 0; a < psi.basis.dim; ++a) {
    const auto [i, j] = psi.basis.unrank(a);
    const double w = std::norm(psi.amplitudes[a]);
    if (i >= barrier_lo && i <= barrier_hi) p += 0.5 * w;
    if (j >= barrier_lo && j <= barrier_hi) p += 0.5 * w;
  }
  return p;
}

std::vector<SurvivalPoint> survival_scan(const ScatterSetup& base,
                                         const std::vector<double>& v_grid,
                                         SurvivalMeasure measure, double dtau, int n_threads) {
  validate(base);
  if (n_threads <= 0) n_threads = omp_get_max_threads();
  const int lo = std::min(base.barrier_sites[0], base.barrier_sites[1]);
  const int hi = std::max(base.barrier_sites[0], base.barrier_sites[1]);
  const int npts = static_cast<int>(v_grid.size());
  std::vector<SurvivalPoint> out(npts);

#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
  for (int p = 0; p < npts; ++p) {
    ScatterSetup setup = base;
    setup.spec.v_over_t = v_grid[p];
    const AbsorbingHamiltonian hc = build_absorbing_hamiltonian(setup);
    PairState psi0 = basis_state(hc.basis, std::min(setup.start_sites[0], setup.start_sites[1]),
                                 std::max(setup.start_sites[0], setup.start_sites[1]));
    const PairState psi =
        propagate_absorbing(hc, psi0, setup.measure_time, dtau, Exec::serial);
    const double s = (measure == SurvivalMeasure::pair_interior)
                         ? survival_probability(psi, lo, hi)
                         : interior_density(psi, lo, hi);
    out[p] = {v_grid[p], s, setup.absorb_strength, dtau};
  }
  return out;
}

}  // namespace hcwalk
