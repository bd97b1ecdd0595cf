#pragma once
// Infinite-population limit: a stochastic multiplicative-weights update on
// normalized distributions, with a log-space potential tracker and an audit
// of the potential sandwich that yields the regret bound.
//
// Raw weights decay like (1-beta)^t and underflow near t ~ 700 in double
// precision, so the update runs in probability space; the unnormalized total
// is carried separately as log_phi with Phi^0 = m (W_j^0 = m * p0_j).

#include <cstdint>
#include <vector>

#include "sociallearn/params.hpp"
#include "sociallearn/record.hpp"
#include "sociallearn/rewards.hpp"

namespace sociallearn {

struct WeightDist {
  std::vector<double> p;
  double log_phi = 0.0;           // ln sum_j W_j^t
  double log_w1_0 = 0.0;          // ln W_1^0 = ln(m * p0_1)
  double cum_opt_reward = 0.0;    // sum_{s<=t} R_1^s
  double cum_group_reward = 0.0;  // sum_{s<=t} sum_j P_j^{s-1} R_j^s
  int64_t t = 0;

  static WeightDist uniform_start(int m);
  static WeightDist from_distribution(std::vector<double> p0);
};

// Throws when p0 has an entry below `zeta`; theorem-scoped experiments with a
// nonuniform start require the entropy floor, exploratory runs do not.
void require_entropy_floor(const std::vector<double>& p0, double zeta);

// One update. Returns the step's group reward sum_j P_j^{t-1} R_j^t.
double step_infinite(WeightDist& w, const RewardVector& r,
                     const ModelParams& p);

struct InfiniteRun {
  TrialRecord record;
  std::vector<double> log_phi;    // index t = 0..T
  std::vector<double> cum_opt;    // index t = 0..T
  std::vector<double> cum_group;  // index t = 0..T
  double log_w1_0 = 0.0;
};

InfiniteRun run_infinite(WeightDist start, RewardStream& stream,
                         const ModelParams& p, int64_t t_max,
                         const RunOptions& opt = {});

struct PrefixAudit {
  int64_t prefix = 0;
  double lower_slack = 0.0;  // log_phi - lower bound, must be >= 0
  double upper_slack = 0.0;  // upper bound - log_phi, must be >= 0
  bool pass = false;
};

struct PotentialAudit {
  std::vector<PrefixAudit> prefixes;
  int64_t violations = 0;
  double min_lower_slack = 0.0;
  double min_upper_slack = 0.0;
  bool pass() const { return violations == 0; }
};

// Checks, for every prefix T' <= T and in log space,
//   T' ln(alpha) + T' ln(1-mu) + dscale * cum_opt + ln(W_1^0)
//     <= log_phi(T')
//     <= T' ln(alpha) + T' ln(1+mu(e^dscale - 1)) + ln(m)
//        + dscale' * cum_group
// with dscale = ln(beta/alpha) and dscale' = (1-mu)(e^dscale - 1)/(1+mu*dscale).
// In the symmetric regime alpha = 1-beta these are exactly the potential
// bounds behind the 3*delta regret statement.
PotentialAudit audit_potential(const InfiniteRun& run, const ModelParams& p,
                               double tol = 1e-9);

}  // namespace sociallearn
