#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hcwalk/kahan.hpp"
#include "hcwalk/model.hpp"

namespace hcwalk {

/// One disorder study: the clean base model, how to dilute it, and when to
/// measure. The start sites double as the protected set — a particle has to
/// be placeable there, so they are never drawn as vacancies.
struct DisorderPlan {
  ModelSpec base;  // must carry no vacancies itself
  double vacancy_fraction = 0.1;
  int n_realizations = 5000;
  std::uint64_t master_seed = 1;
  std::array<int, 2> start_sites{24, 25};  // 0-based
  double tau = 1e4;
  int cowalk_band = 2;  // diagonal band used for the co-walking statistic
};

void validate(const DisorderPlan& plan);

// Fixed avalanche mix (splitmix64 finalizer) deriving the per-realization
// seed from (master_seed, realization).
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t counter);

struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
};

// round(vacancy_fraction*N) sites drawn uniformly without replacement from
// the non-protected sites. Pure function of (plan, realization).
std::vector<int> sample_vacancies(const DisorderPlan& plan, int realization);

struct ScalarStats {
  long n = 0;
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean (0 for n < 2)
};

/// Streaming mean of per-realization observables with compensated summation,
/// so accumulation order only matters at the 1e-15 level. Merging partials in
/// a fixed order keeps a fixed thread count bitwise reproducible.
class EnsembleAccumulator {
 public:
  EnsembleAccumulator() = default;
  explicit EnsembleAccumulator(int n_sites);

  void add_realization(const Eigen::MatrixXd& gamma, double participation, double cowalk,
                       double antiwalk);
  void add_failure() { ++failures_; }
  void merge(const EnsembleAccumulator& other);

  long count() const { return count_; }
  long failures() const { return failures_; }
  int n_sites() const { return n_sites_; }

  Eigen::MatrixXd mean_gamma() const;
  Eigen::MatrixXd gamma_standard_error() const;
  ScalarStats participation() const;
  ScalarStats cowalk() const;
  ScalarStats antiwalk() const;
  ScalarStats cowalk_minus_antiwalk() const;

 private:
  ScalarStats stats(const KahanSum& s, const KahanSum& s2) const;

  int n_sites_ = 0;
  long count_ = 0;
  long failures_ = 0;
  Eigen::MatrixXd gsum_, gcomp_, g2sum_, g2comp_;
  KahanSum p_, p2_, cw_, cw2_, aw_, aw2_, d_, d2_;
};

// Runs realizations [0, n_realizations) resp. [begin, end): per realization
// sample vacancies, build, eigendecompose, evolve to plan.tau, accumulate
// pair correlations + participation ratio + quadrant weights. Realizations
// are independent work items over an OpenMP pool; per-thread partials are
// merged in thread order. Throws ComputationalError if more than 0.1% of
// realizations fail.
EnsembleAccumulator run_ensemble(const DisorderPlan& plan, int n_threads = 0);
EnsembleAccumulator run_ensemble_range(const DisorderPlan& plan, int begin, int end,
                                       int n_threads = 0);

struct StationarityReport {
  std::vector<double> times;
  long realizations = 0;
  double max_abs_drift = 0.0;  // largest |mean Gamma(t_a) - mean Gamma(t_b)| element
  double max_z = 0.0;          // that drift in units of its paired standard error
  double z_threshold = 0.0;    // family-corrected acceptance level
  long compared = 0;           // elements with resolvable variance
  bool pass = false;
};

// Paired drift test: each realization is decomposed once and evolved to every
// time, so the per-element differences carry their own standard errors.
// Passes when no element drifts significantly at the 5% family level
// (Bonferroni over all compared elements).
StationarityReport stationarity_check(const DisorderPlan& plan, const std::vector<double>& times,
                                      int n_threads = 0);

// z with two-sided tail family_alpha/m, i.e. the classic Bonferroni cut.
double bonferroni_z(double family_alpha, long comparisons);

}  // namespace hcwalk
