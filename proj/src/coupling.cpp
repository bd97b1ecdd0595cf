#include "sociallearn/coupling.hpp"

#include <cmath>

#include "sociallearn/finite.hpp"
#include "sociallearn/infinite.hpp"

namespace sociallearn {

CouplingReport::StepSummary summarize_step(const CouplingReport& rep,
                                           int64_t t) {
  CouplingReport::StepSummary s;
  s.t = t;
  std::vector<double> clean;
  clean.reserve(rep.dev[size_t(t)].size());
  int64_t viol = 0;
  s.bound60 = std::pow(5.0, double(t)) * rep.dpp60;
  s.bound240 = std::pow(5.0, double(t)) * rep.dpp240;
  s.vacuous60 = s.bound60 >= 1.0;
  s.vacuous240 = s.bound240 >= 1.0;
  for (double v : rep.dev[size_t(t)]) {
    if (std::isnan(v)) continue;
    clean.push_back(v);
    if (v > s.bound60) ++viol;
  }
  s.zero_q = rep.zero_q_events[size_t(t)];
  if (!clean.empty()) {
    s.median_dev = median(clean);
    s.p95_dev = quantile(clean, 0.95);
    s.violation_frac60 = double(viol) / double(clean.size());
  }
  return s;
}

std::vector<CouplingReport::StepSummary> CouplingReport::summarize() const {
  std::vector<StepSummary> out;
  out.reserve(dev.size());
  for (int64_t t = 0; t < int64_t(dev.size()); ++t)
    out.push_back(summarize_step(*this, t));
  return out;
}

CouplingReport run_coupled(const ModelParams& p, int64_t n, int64_t t_max,
                           int64_t trials, uint64_t master_seed, int workers) {
  CouplingReport rep;
  rep.params = p;
  rep.n = n;
  rep.t_max = t_max;
  rep.trials = trials;
  rep.master_seed = master_seed;
  rep.dpp60 = derived_bounds(p, n, 60.0).delta_pp;
  rep.dpp240 = derived_bounds(p, n, 240.0).delta_pp;
  rep.dev.assign(size_t(t_max) + 1, std::vector<double>(size_t(trials), 0.0));
  rep.zero_q_events.assign(size_t(t_max) + 1, 0);

  std::vector<uint64_t> checksum_fin(size_t(trials), 0);
  std::vector<uint64_t> checksum_inf(size_t(trials), 0);
  std::vector<std::vector<int64_t>> zero_q(size_t(trials));

  parallel_trials(trials, workers, [&](int64_t trial) {
    RewardStream stream = RewardStream::for_trial(master_seed, uint64_t(trial), t_max);
    Rng noise(trial_noise_seed(master_seed, uint64_t(trial)));
    FinitePopState fin = FinitePopState::uniform_start(n, p.m);
    WeightDist inf = WeightDist::uniform_start(p.m);
    uint64_t cs_fin = fnv1a(nullptr, 0);
    uint64_t cs_inf = fnv1a(nullptr, 0);

    rep.dev[0][size_t(trial)] = 0.0;  // identical uniform starts
    for (int64_t t = 1; t <= t_max; ++t) {
      RewardVector r = stream.next(p);
      // Each process folds the rewards it consumed into its own checksum;
      // the lemma's coupling is exactly this shared realization.
      cs_fin = fnv1a(r.data(), r.size(), cs_fin);
      step_finite(fin, r, p, noise);
      cs_inf = fnv1a(r.data(), r.size(), cs_inf);
      step_infinite(inf, r, p);

      bool degenerate = false;
      double worst = 0.0;
      for (int j = 0; j < p.m; ++j) {
        double qj = fin.q[size_t(j)];
        double pj = inf.p[size_t(j)];
        if (qj <= 0.0 || pj <= 0.0) {
          degenerate = true;
          break;
        }
        double ratio = pj / qj;
        worst = std::max(worst, std::max(ratio, 1.0 / ratio) - 1.0);
      }
      if (degenerate) {
        rep.dev[size_t(t)][size_t(trial)] =
            std::numeric_limits<double>::quiet_NaN();
        zero_q[size_t(trial)].push_back(t);
      } else {
        rep.dev[size_t(t)][size_t(trial)] = worst;
      }
    }
    checksum_fin[size_t(trial)] = cs_fin;
    checksum_inf[size_t(trial)] = cs_inf;
  });

  for (int64_t trial = 0; trial < trials; ++trial) {
    if (checksum_fin[size_t(trial)] != checksum_inf[size_t(trial)])
      rep.checksums_match = false;
    for (int64_t t : zero_q[size_t(trial)]) ++rep.zero_q_events[size_t(t)];
  }
  return rep;
}

ScalingFit scaling_fit(const std::vector<CouplingReport>& reports, int64_t t) {
  std::vector<double> xs, ys;
  std::vector<int64_t> seen;
  for (const auto& rep : reports) {
    if (t >= int64_t(rep.dev.size()))
      throw InsufficientDataError("report does not cover requested step");
    if (std::find(seen.begin(), seen.end(), rep.n) != seen.end()) continue;
    seen.push_back(rep.n);
    auto s = summarize_step(rep, t);
    if (!(s.median_dev > 0.0))
      throw InsufficientDataError("median deviation is zero; cannot fit");
    xs.push_back(std::log(double(rep.n)));
    ys.push_back(std::log(s.median_dev));
  }
  if (seen.size() < 3)
    throw InsufficientDataError(
        "scaling fit needs at least 3 distinct population sizes");
  auto [lo, hi] = std::minmax_element(seen.begin(), seen.end());
  if (double(*hi) / double(*lo) < 100.0)
    throw InsufficientDataError(
        "scaling fit needs population sizes spanning at least 2 decades");
  LinearFit f = ols_fit(xs, ys);
  return ScalingFit{f.slope, f.slope_se, f.n};
}

}  // namespace sociallearn
