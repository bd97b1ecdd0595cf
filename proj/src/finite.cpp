#include "sociallearn/finite.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sociallearn {

FinitePopState FinitePopState::uniform_start(int64_t n, int m) {
  FinitePopState st;
  st.n = n;
  st.d.assign(size_t(m), 0);
  st.s.assign(size_t(m), 0);
  st.q.assign(size_t(m), 1.0 / double(m));
  return st;
}

FinitePopState FinitePopState::from_adopters(int64_t n,
                                             std::vector<int64_t> d) {
  FinitePopState st;
  st.n = n;
  st.d = std::move(d);
  st.s.assign(st.d.size(), 0);
  int64_t tot = st.adopters();
  if (tot > n) throw std::invalid_argument("more adopters than individuals");
  st.q.assign(st.d.size(), 0.0);
  if (tot > 0) {
    for (size_t j = 0; j < st.d.size(); ++j)
      st.q[j] = double(st.d[j]) / double(tot);
  } else {
    st.q.assign(st.d.size(), 1.0 / double(st.d.size()));
  }
  return st;
}

AgentPopulation AgentPopulation::from_state(const FinitePopState& st) {
  AgentPopulation a;
  a.choice.assign(size_t(st.n), -1);
  a.pick.assign(size_t(st.n), -1);
  a.adopted.assign(size_t(st.n), 0);
  // Individuals are exchangeable: assign the first D_0 of them to option 0,
  // the next D_1 to option 1, and so on.
  int64_t i = 0;
  for (size_t j = 0; j < st.d.size(); ++j)
    for (int64_t k = 0; k < st.d[j]; ++k) a.choice[size_t(i++)] = int32_t(j);
  return a;
}

std::vector<int64_t> sample_stage(const FinitePopState& st,
                                  const ModelParams& p, Rng& rng) {
  std::vector<double> probs(size_t(p.m));
  for (int j = 0; j < p.m; ++j)
    probs[size_t(j)] = (1.0 - p.mu) * st.q[size_t(j)] + p.mu / double(p.m);
  return multinomial_draw(rng, st.n, probs);
}

std::vector<int64_t> adopt_stage(const std::vector<int64_t>& s,
                                 const RewardVector& r, const ModelParams& p,
                                 Rng& rng) {
  std::vector<int64_t> d(s.size(), 0);
  for (size_t j = 0; j < s.size(); ++j) {
    double accept = r[j] ? p.beta : p.alpha;
    d[j] = binomial_draw(rng, s[j], accept);
  }
  return d;
}

namespace {

// Shared post-adoption bookkeeping: popularity refresh, degenerate reset,
// step counter. Returns the group reward computed from the pre-step q.
double finish_step(FinitePopState& st, const std::vector<double>& q_before,
                   const RewardVector& r) {
  double g = 0.0;
  for (size_t j = 0; j < q_before.size(); ++j)
    if (r[j]) g += q_before[j];

  int64_t tot = st.adopters();
  if (tot > 0) {
    for (size_t j = 0; j < st.d.size(); ++j)
      st.q[j] = double(st.d[j]) / double(tot);
  } else {
    st.q.assign(st.d.size(), 1.0 / double(st.d.size()));
    ++st.degenerate_resets;
  }
  ++st.t;
  return g;
}

}  // namespace

double step_finite(FinitePopState& st, const RewardVector& r,
                   const ModelParams& p, Rng& rng) {
  std::vector<double> q_before = st.q;
  st.s = sample_stage(st, p, rng);
  st.d = adopt_stage(st.s, r, p, rng);
  return finish_step(st, q_before, r);
}

double step_finite_agent(FinitePopState& st, AgentPopulation& agents,
                         const RewardVector& r, const ModelParams& p,
                         Rng& rng) {
  const int m = p.m;
  const int64_t n = st.n;
  std::vector<double> q_before = st.q;

  int64_t prev_adopters = st.adopters();
  // Sparse adopters would make the literal resampling loop crawl; drawing
  // uniformly from the adopter list realizes the same distribution.
  std::vector<int64_t> adopter_idx;
  bool use_list = prev_adopters > 0 && prev_adopters < n / 64;
  if (use_list) {
    adopter_idx.reserve(size_t(prev_adopters));
    for (int64_t i = 0; i < n; ++i)
      if (agents.choice[size_t(i)] >= 0) adopter_idx.push_back(i);
  }

  std::fill(st.s.begin(), st.s.end(), 0);
  std::uniform_int_distribution<int> opt(0, m - 1);
  std::uniform_int_distribution<int64_t> comp(0, n - 1);
  for (int64_t i = 0; i < n; ++i) {
    int y;
    if (uniform01(rng) < p.mu) {
      y = opt(rng);
    } else if (prev_adopters == 0) {
      // Nobody to observe; q was reset to uniform, sample it directly.
      y = opt(rng);
    } else if (use_list) {
      std::uniform_int_distribution<size_t> pick(0, adopter_idx.size() - 1);
      y = agents.choice[size_t(adopter_idx[pick(rng)])];
    } else {
      int64_t c;
      do {
        c = comp(rng);
      } while (agents.choice[size_t(c)] < 0);
      y = agents.choice[size_t(c)];
    }
    agents.pick[size_t(i)] = int32_t(y);
    ++st.s[size_t(y)];
  }

  std::fill(st.d.begin(), st.d.end(), 0);
  for (int64_t i = 0; i < n; ++i) {
    int y = agents.pick[size_t(i)];
    double accept = r[size_t(y)] ? p.beta : p.alpha;
    bool z = uniform01(rng) < accept;
    agents.adopted[size_t(i)] = z ? 1 : 0;
    agents.choice[size_t(i)] = z ? int32_t(y) : -1;
    if (z) ++st.d[size_t(y)];
  }

  return finish_step(st, q_before, r);
}

TrialRecord run_finite(FinitePopState st, RewardStream& stream,
                       const ModelParams& p, int64_t t_max, Rng& rng,
                       const RunOptions& opt) {
  TrialRecord rec;
  rec.group_reward.reserve(size_t(t_max));
  rec.leader_share.reserve(size_t(t_max));
  rec.percap_reward.reserve(size_t(t_max));

  AgentPopulation agents;
  if (opt.agent_mode) agents = AgentPopulation::from_state(st);

  for (int64_t t = 1; t <= t_max; ++t) {
    RewardVector r = stream.next(p);
    double percap = 0.0;
    for (size_t j = 0; j < st.d.size(); ++j)
      if (r[j]) percap += double(st.d[j]) / double(st.n);
    rec.leader_share.push_back(st.q[0]);
    double g = opt.agent_mode ? step_finite_agent(st, agents, r, p, rng)
                              : step_finite(st, r, p, rng);
    rec.group_reward.push_back(g);
    rec.percap_reward.push_back(percap);

    if (opt.zeta_floor >= 0.0) {
      double qmin = st.q[0];
      for (double v : st.q) qmin = std::min(qmin, v);
      if (qmin < opt.zeta_floor) ++rec.floor_violations;
    }
    if (opt.thin > 0 && (t % opt.thin == 0 || t == t_max)) {
      rec.rec_t.push_back(t);
      rec.rec_popularity.push_back(st.q);
      if (opt.record_counts) {
        rec.rec_s.push_back(st.s);
        rec.rec_d.push_back(st.d);
        rec.rec_r.push_back(r);
      }
    }
  }
  rec.degenerate_resets = st.degenerate_resets;
  rec.final_t = st.t;
  return rec;
}

}  // namespace sociallearn
