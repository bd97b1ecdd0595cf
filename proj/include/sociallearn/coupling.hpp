#pragma once
// Runs the finite and the infinite process in lockstep on one shared reward
// stream and measures the per-step multiplicative closeness of Q^t and P^t
// against the 5^t * delta'' bound and its 1/sqrt(N) scaling.

#include <cstdint>
#include <vector>

#include "sociallearn/params.hpp"
#include "sociallearn/util.hpp"

namespace sociallearn {

struct InsufficientDataError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CouplingReport {
  ModelParams params;
  int64_t n = 0;
  int64_t t_max = 0;
  int64_t trials = 0;
  uint64_t master_seed = 0;
  double dpp60 = 0.0;   // delta'' with the 60-constant
  double dpp240 = 0.0;  // delta'' with the 240-constant

  // dev[t][trial] = max_j (max(P/Q, Q/P) - 1) at step t; NaN marks a step
  // where some option lost every adopter (counted, never interpolated).
  std::vector<std::vector<double>> dev;
  std::vector<int64_t> zero_q_events;  // per step
  bool checksums_match = true;

  struct StepSummary {
    int64_t t = 0;
    double median_dev = 0.0;
    double p95_dev = 0.0;
    double bound60 = 0.0;   // 5^t * delta''(60)
    double bound240 = 0.0;  // 5^t * delta''(240)
    bool vacuous60 = false;  // bound >= 1: no information at this scale
    bool vacuous240 = false;
    double violation_frac60 = 0.0;  // fraction of trials with dev > bound60
    int64_t zero_q = 0;
  };
  std::vector<StepSummary> summarize() const;
};

CouplingReport run_coupled(const ModelParams& p, int64_t n, int64_t t_max,
                           int64_t trials, uint64_t master_seed,
                           int workers = 1);

struct ScalingFit {
  double slope = 0.0;
  double slope_se = 0.0;
  int n_points = 0;
};

// Least-squares slope of log(median deviation at step t) against log N.
// Requires at least three N values spanning at least two decades.
ScalingFit scaling_fit(const std::vector<CouplingReport>& reports, int64_t t);

}  // namespace sociallearn
