#pragma once
// One step of the N-individual two-stage process (sampling, then adoption),
// in two equivalent modes: a multinomial "count mode" whose per-step cost is
// O(m), and a literal per-agent "agent mode".

#include <cstdint>
#include <vector>

#include "sociallearn/params.hpp"
#include "sociallearn/record.hpp"
#include "sociallearn/rewards.hpp"
#include "sociallearn/util.hpp"

namespace sociallearn {

struct FinitePopState {
  int64_t n = 0;
  std::vector<int64_t> d;  // adopter counts D^t
  std::vector<int64_t> s;  // sample counts S^t produced by the last step
  std::vector<double> q;   // popularity distribution Q^t
  int64_t t = 0;
  int64_t degenerate_resets = 0;  // steps that ended with zero adopters

  static FinitePopState uniform_start(int64_t n, int m);
  // q is derived from d; an all-zero d gives the uniform convention.
  static FinitePopState from_adopters(int64_t n, std::vector<int64_t> d);

  int64_t adopters() const {
    int64_t tot = 0;
    for (int64_t v : d) tot += v;
    return tot;
  }
};

// Agent mode keeps the literal per-individual indicators so tests can check
// that aggregation reproduces the count-mode state exactly.
struct AgentPopulation {
  std::vector<int32_t> choice;  // committed option, -1 = sitting out
  std::vector<int32_t> pick;    // stage-one considered option
  std::vector<uint8_t> adopted; // stage-two commitment bit

  static AgentPopulation from_state(const FinitePopState& st);
};

// Stage one: N categorical draws with probabilities (1-mu)Q_j + mu/m.
std::vector<int64_t> sample_stage(const FinitePopState& st,
                                  const ModelParams& p, Rng& rng);

// Stage two: D_j ~ Binomial(S_j, beta) on a good signal, Binomial(S_j, alpha)
// on a bad one.
std::vector<int64_t> adopt_stage(const std::vector<int64_t>& s,
                                 const RewardVector& r, const ModelParams& p,
                                 Rng& rng);

// Composes the two stages, refreshes q from the new adopter counts and
// advances t. Returns the step's group reward sum_j Q_j^{t-1} R_j^t (lagged
// popularity, as in the regret definition). A step that ends with zero
// adopters resets q to uniform and counts a degenerate reset.
double step_finite(FinitePopState& st, const RewardVector& r,
                   const ModelParams& p, Rng& rng);

// Same law, driven agent by agent; `agents` carries the previous step's
// choices and is updated in place. Peer observation resamples uniformly
// chosen companions until one that adopted is found (a direct draw over the
// adopter list is used when adopters are sparse; the law is identical).
double step_finite_agent(FinitePopState& st, AgentPopulation& agents,
                         const RewardVector& r, const ModelParams& p,
                         Rng& rng);

TrialRecord run_finite(FinitePopState st, RewardStream& stream,
                       const ModelParams& p, int64_t t_max, Rng& rng,
                       const RunOptions& opt = {});

}  // namespace sociallearn
