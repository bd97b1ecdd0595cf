#pragma once
// Environment and behavior parameters of the two-stage imitation dynamics,
// plus every derived constant the analysis uses (deviation scales, popularity
// floor, epoch length, regret bounds) and the precondition validator.

#include <cstdint>
#include <string>
#include <vector>

namespace sociallearn {

struct ModelParams {
  int m = 2;                 // option count, >= 2
  std::vector<double> eta;   // option qualities, sorted descending, in [0,1]
  double mu = 0.1;           // exploration probability, (0,1]
  double beta = 0.6;         // adoption probability on a good signal
  double alpha = 0.4;        // adoption probability on a bad signal

  // ln(beta/(1-beta)). Recomputed on demand, never cached.
  double delta() const;
  // ln(beta/alpha): the deviation scale that replaces delta() when
  // alpha != 1-beta. Equal to delta() in the paper regime.
  double delta_alt() const;
  bool symmetric_adoption(double tol = 1e-12) const;  // alpha == 1-beta

  static ModelParams make(int m, std::vector<double> eta, double mu,
                          double beta);  // alpha defaults to 1-beta
};

struct DerivedBounds {
  double delta = 0.0;
  double dpp_constant = 60.0;      // 60 or 240; see coupling reports
  double delta_pp = 0.0;           // sqrt(K*m*ln(N) / ((1-beta)*mu*N))
  double zeta = 0.0;               // mu*(1-beta)/(4m), popularity floor
  int64_t epoch_len = 0;           // ceil(ln(1/zeta)/delta^2); 0 when delta=0
  double regret_bound_inf = 0.0;   // 3*delta
  double regret_bound_fin = 0.0;   // 6*delta
  double share_lower_bound = 0.0;  // 1 - 3*delta/(eta1-eta2)
  bool vacuous = false;            // delta == 0: every bound degenerates

  double delta_t(int t) const;  // 5^t * delta_pp
};

// Per-step multiplicative floor of the infinite-population distribution:
// each option keeps at least (mu/m)*alpha unnormalized mass while the total
// is at most beta, so min_j p_j >= mu*alpha/(m*beta) after any step.
double infinite_share_floor(const ModelParams& p);

struct ValidationCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> errors;    // structural problems: input rejected
  std::vector<std::string> warnings;  // degenerate but simulable regimes
  std::vector<ValidationCheck> preconditions;  // theorem premises, informative
  bool structurally_valid() const { return errors.empty(); }
  bool all_preconditions_hold() const;
  // Deterministic one-liner embedded in output artifacts.
  std::string summary() const;
};

ValidationReport validate(const ModelParams& p, int64_t n, int64_t t_max);

DerivedBounds derived_bounds(const ModelParams& p, int64_t n,
                             double dpp_constant = 60.0);

}  // namespace sociallearn
