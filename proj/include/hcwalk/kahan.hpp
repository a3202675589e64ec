#pragma once

#include <cmath>

namespace hcwalk {

// Neumaier-compensated summation. Keeps accumulated means order-independent
// to ~1e-15 relative even over 1e6 terms.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  // Fold another compensated sum in (used for the fixed-order merge of
  // per-thread partials).
  void merge(const KahanSum& other) {
    add(other.sum);
    add(other.comp);
  }

  double value() const { return sum + comp; }
};

}  // namespace hcwalk
