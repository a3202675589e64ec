#include "hcwalk/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hcwalk {

void validate(const ModelSpec& spec) {
  if (spec.n_sites < 2)
    throw std::invalid_argument("ModelSpec: n_sites must be >= 2");
  if (spec.hopping == HoppingKind::power_law && spec.alpha < 1.0)
    throw std::invalid_argument("ModelSpec: alpha must be >= 1");
  if (spec.beta < 1.0)
    throw std::invalid_argument("ModelSpec: beta must be >= 1");
  for (int s : spec.vacancies)
    if (s < 0 || s >= spec.n_sites)
      throw std::invalid_argument("ModelSpec: vacancy site " + std::to_string(s) +
                                  " outside the lattice");
}

namespace {

void check_site_pair(const ModelSpec& spec, int i, int j, const char* who) {
  if (i < 0 || j < 0 || i >= spec.n_sites || j >= spec.n_sites || i == j)
    throw std::invalid_argument(std::string(who) + ": need distinct sites in [0, N), got " +
                                std::to_string(i) + ", " + std::to_string(j));
}

std::vector<char> vacancy_mask(const ModelSpec& spec) {
  std::vector<char> vacant(spec.n_sites, 0);
  for (int s : spec.vacancies) vacant[s] = 1;
  return vacant;
}

// Hop amplitude per site distance; the vacancy mask is applied separately.
std::vector<double> hop_table(const ModelSpec& spec) {
  std::vector<double> amp(spec.n_sites, 0.0);
  for (int d = 1; d < spec.n_sites; ++d) {
    if (spec.hopping == HoppingKind::nearest_neighbour)
      amp[d] = (d == 1) ? kHoppingScale : 0.0;
    else
      amp[d] = kHoppingScale / std::pow(static_cast<double>(d), spec.alpha);
  }
  return amp;
}

std::vector<double> interaction_table(const ModelSpec& spec) {
  std::vector<double> v(spec.n_sites, 0.0);
  for (int d = 1; d < spec.n_sites; ++d)
    v[d] = spec.v_over_t * kHoppingScale / std::pow(static_cast<double>(d), spec.beta);
  return v;
}

}  // namespace

double hop_amplitude(const ModelSpec& spec, int i, int j) {
  validate(spec);
  check_site_pair(spec, i, j, "hop_amplitude");
  const auto vacant = vacancy_mask(spec);
  if (vacant[i] || vacant[j]) return 0.0;
  const int d = std::abs(i - j);
  if (spec.hopping == HoppingKind::nearest_neighbour)
    return (d == 1) ? kHoppingScale : 0.0;
  return kHoppingScale / std::pow(static_cast<double>(d), spec.alpha);
}

double interaction_strength(const ModelSpec& spec, int i, int j) {
  validate(spec);
  check_site_pair(spec, i, j, "interaction_strength");
  const int d = std::abs(i - j);
  return spec.v_over_t * kHoppingScale / std::pow(static_cast<double>(d), spec.beta);
}

HamiltonianMatrix build_hamiltonian(const ModelSpec& spec, Exec exec) {
  validate(spec);
  const PairBasis basis(spec.n_sites);
  const int n = spec.n_sites;
  const int dim = basis.dim;

  const auto vacant = vacancy_mask(spec);
  const auto amp = hop_table(spec);
  const auto vint = interaction_table(spec);

  HamiltonianMatrix h;
  h.basis = basis;
  h.entries = Eigen::MatrixXd::Zero(dim, dim);

  // Row-parallel fill: row a only writes H(a, .), and the mirrored entry is
  // produced when the partner row runs the reverse move with the same
  // distance table, so symmetry is exact.
#pragma omp parallel for schedule(static) if (exec == Exec::omp)
  for (int a = 0; a < dim; ++a) {
    const auto [i, j] = pair_unrank(a, n);
    h.entries(a, a) = vint[j - i];
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      // move the particle at i to k: (i,j) -> (k,j)
      if (!vacant[i] && !vacant[k]) {
        const double t_ik = amp[std::abs(i - k)];
        if (t_ik != 0.0)
          h.entries(a, pair_rank(std::min(k, j), std::max(k, j), n)) = t_ik;
      }
      // move the particle at j to k: (i,j) -> (i,k)
      if (!vacant[j] && !vacant[k]) {
        const double t_jk = amp[std::abs(j - k)];
        if (t_jk != 0.0)
          h.entries(a, pair_rank(std::min(i, k), std::max(i, k), n)) = t_jk;
      }
    }
  }
  return h;
}

HamiltonianMatrix nn_mode_hamiltonian(const ModelSpec& spec, Exec exec) {
  ModelSpec nn = spec;
  nn.hopping = HoppingKind::nearest_neighbour;
  return build_hamiltonian(nn, exec);
}

int half_bandwidth(const Eigen::MatrixXd& m) {
  const int dim = static_cast<int>(m.rows());
  int kd = 0;
  for (int j = 0; j < dim; ++j) {
    for (int i = dim - 1; i > j + kd; --i) {
      if (m(i, j) != 0.0) {
        kd = i - j;
        break;
      }
    }
  }
  return kd;
}

}  // namespace hcwalk
