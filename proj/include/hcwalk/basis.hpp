#pragma once

#include <utility>

namespace hcwalk {

/// Hilbert space of two hard-core bosons on a chain of n_sites sites.
///
/// States are unordered pairs |i,j> stored canonically with 0 <= i < j <
/// n_sites and enumerated in lexicographic order of (i, j). Double occupancy
/// |i,i> is excluded by construction, which is how the hard-core constraint
/// enters: the matrix elements in `model` never have to see it.
struct PairBasis {
  int n_sites = 0;
  int dim = 0;  // n_sites*(n_sites-1)/2

  PairBasis() = default;
  explicit PairBasis(int n_sites_);

  int rank(int i, int j) const;
  std::pair<int, int> unrank(int idx) const;
};

// rank/unrank as free functions; idx = i*N - i*(i+1)/2 + (j - i - 1).
int pair_rank(int i, int j, int n_sites);
std::pair<int, int> pair_unrank(int idx, int n_sites);

}  // namespace hcwalk
