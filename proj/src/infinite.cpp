#include "sociallearn/infinite.hpp"

#include <cmath>
#include <stdexcept>

namespace sociallearn {

WeightDist WeightDist::uniform_start(int m) {
  WeightDist w;
  w.p.assign(size_t(m), 1.0 / double(m));
  w.log_phi = std::log(double(m));  // Phi^0 = m
  w.log_w1_0 = 0.0;                 // W_1^0 = 1
  return w;
}

WeightDist WeightDist::from_distribution(std::vector<double> p0) {
  double tot = 0.0;
  for (double v : p0) {
    if (v < 0.0) throw std::invalid_argument("negative start probability");
    tot += v;
  }
  if (!(std::abs(tot - 1.0) <= 1e-9))
    throw std::invalid_argument("start distribution does not sum to 1");
  WeightDist w;
  w.p = std::move(p0);
  for (double& v : w.p) v /= tot;
  w.log_phi = std::log(double(w.p.size()));
  w.log_w1_0 = std::log(double(w.p.size()) * w.p[0]);
  return w;
}

void require_entropy_floor(const std::vector<double>& p0, double zeta) {
  for (size_t j = 0; j < p0.size(); ++j)
    if (p0[j] < zeta)
      throw std::invalid_argument(
          "start distribution entry " + std::to_string(j) +
          " is below the required floor " + std::to_string(zeta));
}

double step_infinite(WeightDist& w, const RewardVector& r,
                     const ModelParams& p) {
  const int m = p.m;
  double g = 0.0;
  for (int j = 0; j < m; ++j)
    if (r[size_t(j)]) g += w.p[size_t(j)];

  // Unnormalized one-step mass; the ratio new/old total goes into log_phi.
  double tot = 0.0;
  for (int j = 0; j < m; ++j) {
    double mixed = (1.0 - p.mu) * w.p[size_t(j)] + p.mu / double(m);
    double factor = r[size_t(j)] ? p.beta : p.alpha;
    w.p[size_t(j)] = mixed * factor;
    tot += w.p[size_t(j)];
  }
  if (!(tot > 0.0))
    throw std::runtime_error("weight total collapsed to zero (alpha=0?)");
  double norm = 0.0;
  for (int j = 0; j < m; ++j) {
    w.p[size_t(j)] /= tot;
    norm += w.p[size_t(j)];
  }
  for (int j = 0; j < m; ++j) w.p[size_t(j)] /= norm;

  w.log_phi += std::log(tot);
  w.cum_group_reward += g;
  if (r[0]) w.cum_opt_reward += 1.0;
  ++w.t;
  return g;
}

InfiniteRun run_infinite(WeightDist start, RewardStream& stream,
                         const ModelParams& p, int64_t t_max,
                         const RunOptions& opt) {
  InfiniteRun run;
  run.log_w1_0 = start.log_w1_0;
  run.log_phi.reserve(size_t(t_max) + 1);
  run.cum_opt.reserve(size_t(t_max) + 1);
  run.cum_group.reserve(size_t(t_max) + 1);
  run.log_phi.push_back(start.log_phi);
  run.cum_opt.push_back(0.0);
  run.cum_group.push_back(0.0);

  WeightDist w = std::move(start);
  for (int64_t t = 1; t <= t_max; ++t) {
    RewardVector r = stream.next(p);
    run.record.leader_share.push_back(w.p[0]);
    double g = step_infinite(w, r, p);
    run.record.group_reward.push_back(g);
    run.log_phi.push_back(w.log_phi);
    run.cum_opt.push_back(w.cum_opt_reward);
    run.cum_group.push_back(w.cum_group_reward);

    if (opt.zeta_floor >= 0.0) {
      double pmin = w.p[0];
      for (double v : w.p) pmin = std::min(pmin, v);
      if (pmin < opt.zeta_floor) ++run.record.floor_violations;
    }
    if (opt.thin > 0 && (t % opt.thin == 0 || t == t_max)) {
      run.record.rec_t.push_back(t);
      run.record.rec_popularity.push_back(w.p);
      if (opt.record_counts) run.record.rec_r.push_back(r);
    }
  }
  run.record.final_t = w.t;
  return run;
}

PotentialAudit audit_potential(const InfiniteRun& run, const ModelParams& p,
                               double tol) {
  PotentialAudit audit;
  const double dscale = p.delta_alt();
  const double dprime =
      (1.0 - p.mu) * (std::exp(dscale) - 1.0) / (1.0 + p.mu * dscale);
  const double ln_alpha = std::log(p.alpha);
  const double ln_keep = std::log(1.0 - p.mu);
  const double ln_gain = std::log(1.0 + p.mu * (std::exp(dscale) - 1.0));
  const double ln_m = std::log(double(p.m));

  const int64_t t_end = int64_t(run.log_phi.size()) - 1;
  audit.prefixes.reserve(size_t(t_end));
  audit.min_lower_slack = std::numeric_limits<double>::infinity();
  audit.min_upper_slack = std::numeric_limits<double>::infinity();
  for (int64_t t = 1; t <= t_end; ++t) {
    double lower = double(t) * (ln_alpha + ln_keep) +
                   dscale * run.cum_opt[size_t(t)] + run.log_w1_0;
    double upper = double(t) * (ln_alpha + ln_gain) + ln_m +
                   dprime * run.cum_group[size_t(t)];
    PrefixAudit pa;
    pa.prefix = t;
    pa.lower_slack = run.log_phi[size_t(t)] - lower;
    pa.upper_slack = upper - run.log_phi[size_t(t)];
    pa.pass = pa.lower_slack >= -tol && pa.upper_slack >= -tol;
    if (!pa.pass) ++audit.violations;
    audit.min_lower_slack = std::min(audit.min_lower_slack, pa.lower_slack);
    audit.min_upper_slack = std::min(audit.min_upper_slack, pa.upper_slack);
    audit.prefixes.push_back(pa);
  }
  return audit;
}

}  // namespace sociallearn
