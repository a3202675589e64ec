#include "hcwalk/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hcwalk/errors.hpp"
#include "hcwalk/kahan.hpp"
#include "hcwalk/spectral.hpp"

namespace hcwalk {

namespace {
constexpr double kPi = std::numbers::pi;
}

double zeta_sum(double s) {
  if (s <= 1.0) throw std::invalid_argument("zeta_sum: needs s > 1");
  constexpr long R = 200000;
  KahanSum acc;
  for (long r = R; r >= 1; --r) acc.add(std::pow(static_cast<double>(r), -s));
  // Euler-Maclaurin tail from R+1.
  const double a = static_cast<double>(R) + 1.0;
  acc.add(std::pow(a, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(a, -s));
  acc.add(s * std::pow(a, -s - 1.0) / 12.0);
  return acc.value();
}

double eta_sum(double s) {
  if (s < 1.0) throw std::invalid_argument("eta_sum: needs s >= 1");
  constexpr long R = 2000000;  // even
  KahanSum acc;
  for (long r = R; r >= 1; --r) {
    const double term = std::pow(static_cast<double>(r), -s);
    acc.add((r % 2 == 1) ? term : -term);
  }
  // Euler-transformed alternating tail: a/2 + (a-b)/4 leaves an error well
  // below 1e-15 for s >= 1 at this R.
  const double a = std::pow(static_cast<double>(R) + 1.0, -s);
  const double b = std::pow(static_cast<double>(R) + 2.0, -s);
  acc.add(0.5 * a);
  acc.add(0.25 * (a - b));
  return acc.value();
}

double single_dispersion(HoppingKind kind, double alpha, double k) {
  if (!std::isfinite(k)) throw std::invalid_argument("single_dispersion: k must be finite");
  const double kk = std::abs(std::remainder(k, 2.0 * kPi));  // fold to [0, pi]

  if (kind == HoppingKind::nearest_neighbour) return 2.0 * kHoppingScale * std::cos(kk);

  if (alpha == 1.0) {
    if (kk == 0.0)
      throw std::invalid_argument("single_dispersion: diverges at k = 0 for alpha = 1");
    return -2.0 * kHoppingScale * std::log(2.0 * std::sin(0.5 * kk));
  }
  if (alpha == 2.0) {
    // Closed form of sum cos(kr)/r^2 on [0, 2pi].
    return 2.0 * kHoppingScale * (kPi * kPi / 6.0 - kPi * kk / 2.0 + kk * kk / 4.0);
  }
  if (alpha == 3.0) {
    // Truncation R chosen from the tail bound 2/((alpha-1) R^(alpha-1)),
    // i.e. 1/R^2 <= 1e-10.
    constexpr long R = 100000;
    KahanSum acc;
    for (long r = 1; r <= R; ++r)
      acc.add(std::cos(kk * static_cast<double>(r)) /
              (static_cast<double>(r) * static_cast<double>(r) * static_cast<double>(r)));
    return 2.0 * kHoppingScale * acc.value();
  }
  throw std::invalid_argument("single_dispersion: alpha must be one of {1, 2, 3}");
}

BandEdges band_edges(HoppingKind kind, double alpha) {
  BandEdges e;
  if (kind == HoppingKind::nearest_neighbour) {
    e.single_min = -2.0 * kHoppingScale;
    e.single_max = 2.0 * kHoppingScale;
  } else if (alpha == 1.0) {
    e.single_min = -2.0 * kHoppingScale * eta_sum(1.0);  // -2t ln 2
    e.single_max = std::numeric_limits<double>::infinity();
  } else if (alpha > 1.0) {
    e.single_min = -2.0 * kHoppingScale * eta_sum(alpha);
    e.single_max = 2.0 * kHoppingScale * zeta_sum(alpha);
  } else {
    throw std::invalid_argument("band_edges: alpha must be >= 1");
  }
  e.two_particle_min = 2.0 * e.single_min;
  e.two_particle_max = 2.0 * e.single_max;
  return e;
}

HamiltonianMatrix build_ring_hamiltonian(const ModelSpec& spec, Exec exec) {
  validate(spec);
  if (!spec.vacancies.empty())
    throw std::invalid_argument("build_ring_hamiltonian: ring variant expects a clean lattice");

  const int n = spec.n_sites;
  const PairBasis basis(n);

  std::vector<double> amp(n, 0.0), vint(n, 0.0);
  for (int d = 1; d < n; ++d) {
    const int rd = std::min(d, n - d);  // ring distance
    if (spec.hopping == HoppingKind::nearest_neighbour)
      amp[d] = (rd == 1) ? kHoppingScale : 0.0;
    else
      amp[d] = kHoppingScale / std::pow(static_cast<double>(rd), spec.alpha);
    vint[d] = spec.v_over_t * kHoppingScale / std::pow(static_cast<double>(rd), spec.beta);
  }

  HamiltonianMatrix h;
  h.basis = basis;
  h.entries = Eigen::MatrixXd::Zero(basis.dim, basis.dim);

#pragma omp parallel for schedule(static) if (exec == Exec::omp)
  for (int a = 0; a < basis.dim; ++a) {
    const auto [i, j] = pair_unrank(a, n);
    h.entries(a, a) = vint[j - i];
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      const double t_ik = amp[std::abs(i - k)];
      if (t_ik != 0.0) h.entries(a, pair_rank(std::min(k, j), std::max(k, j), n)) = t_ik;
      const double t_jk = amp[std::abs(j - k)];
      if (t_jk != 0.0) h.entries(a, pair_rank(std::min(i, k), std::max(i, k), n)) = t_jk;
    }
  }
  return h;
}

std::vector<DispersionPoint> two_particle_spectrum_vs_K(const HamiltonianMatrix& ring,
                                                        int n_sites) {
  if (ring.basis.n_sites != n_sites)
    throw std::invalid_argument("two_particle_spectrum_vs_K: basis does not match n_sites");
  const int n = n_sites;
  const int dim = ring.basis.dim;

  const SpectralDecomposition sd = eigendecompose(ring);

  // Translation permutation on the pair basis: (i,j) -> (i+1, j+1) mod N.
  std::vector<int> shifted(dim);
  for (int a = 0; a < dim; ++a) {
    const auto [i, j] = ring.basis.unrank(a);
    const int is = (i + 1) % n;
    const int js = (j + 1) % n;
    shifted[a] = ring.basis.rank(std::min(is, js), std::max(is, js));
  }

  std::vector<DispersionPoint> points;
  points.reserve(dim);

  constexpr double cluster_gap = 1e-8;
  constexpr double momentum_tol = 1e-6;

  int p = 0;
  while (p < dim) {
    int q = p + 1;
    while (q < dim && sd.energies[q] - sd.energies[q - 1] < cluster_gap) ++q;
    const int m = q - p;

    // <v_a | T v_b> = sum_x v_a(T x) v_b(x)
    Eigen::MatrixXd t(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double s = 0.0;
        for (int x = 0; x < dim; ++x) s += sd.modes(shifted[x], p + a) * sd.modes(x, p + b);
        t(a, b) = s;
      }

    Eigen::EigenSolver<Eigen::MatrixXd> es(t);
    if (es.info() != Eigen::Success)
      throw ComputationalError("two_particle_spectrum_vs_K: translation eigenproblem failed");

    for (int a = 0; a < m; ++a) {
      const std::complex<double> lam = es.eigenvalues()[a];
      if (std::abs(std::abs(lam) - 1.0) > momentum_tol)
        throw ComputationalError(
            "two_particle_spectrum_vs_K: translation eigenvalue off the unit circle; "
            "degenerate cluster not resolved");
      const double theta = std::arg(lam);
      const double m_real = theta * n / (2.0 * kPi);
      long m_int = std::lround(m_real);
      if (std::abs(m_real - static_cast<double>(m_int)) > momentum_tol * n)
        throw ComputationalError(
            "two_particle_spectrum_vs_K: translation phase does not sit on a lattice momentum");
      m_int = ((m_int % n) + n) % n;
      if (2 * m_int > n) m_int -= n;
      points.push_back({2.0 * kPi * static_cast<double>(m_int) / n, sd.energies[p + a]});
    }
    p = q;
  }

  std::sort(points.begin(), points.end(), [](const DispersionPoint& a, const DispersionPoint& b) {
    return a.total_momentum < b.total_momentum ||
           (a.total_momentum == b.total_momentum && a.energy < b.energy);
  });
  return points;
}

}  // namespace hcwalk
