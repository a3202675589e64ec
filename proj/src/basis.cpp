#include "hcwalk/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hcwalk {

PairBasis::PairBasis(int n_sites_) : n_sites(n_sites_) {
  if (n_sites < 2)
    throw std::invalid_argument("PairBasis: need at least 2 sites, got " +
                                std::to_string(n_sites));
  dim = n_sites * (n_sites - 1) / 2;
}

int pair_rank(int i, int j, int n_sites) {
  if (i < 0 || j >= n_sites || i >= j)
    throw std::invalid_argument("pair_rank: need 0 <= i < j < N, got i=" +
                                std::to_string(i) + " j=" + std::to_string(j) +
                                " N=" + std::to_string(n_sites));
  return i * n_sites - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_unrank(int idx, int n_sites) {
  const int dim = n_sites * (n_sites - 1) / 2;
  if (idx < 0 || idx >= dim)
    throw std::invalid_argument("pair_unrank: index " + std::to_string(idx) +
                                " outside [0, " + std::to_string(dim) + ")");
  // First index: largest i with i*N - i*(i+1)/2 <= idx. Solve the quadratic,
  // then fix up against floating-point edge cases.
  const double nm = 2.0 * n_sites - 1.0;
  int i = static_cast<int>((nm - std::sqrt(nm * nm - 8.0 * idx)) / 2.0);
  auto row_start = [n_sites](int r) { return r * n_sites - r * (r + 1) / 2; };
  while (i > 0 && row_start(i) > idx) --i;
  while (row_start(i + 1) <= idx) ++i;
  const int j = idx - row_start(i) + i + 1;
  return {i, j};
}

int PairBasis::rank(int i, int j) const { return pair_rank(i, j, n_sites); }

std::pair<int, int> PairBasis::unrank(int idx) const { return pair_unrank(idx, n_sites); }

}  // namespace hcwalk
