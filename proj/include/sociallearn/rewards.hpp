#pragma once
// Bernoulli quality-signal streams. One stream per trial, derived from
// (master seed, trial index); a coupled experiment feeds the identical
// stream to both processes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sociallearn/params.hpp"
#include "sociallearn/util.hpp"

namespace sociallearn {

// One time step: m binary quality indicators.
using RewardVector = std::vector<uint8_t>;

struct StreamExhausted : std::runtime_error {
  explicit StreamExhausted(int64_t t)
      : std::runtime_error("reward stream exhausted at t=" +
                           std::to_string(t)) {}
};

class RewardStream {
 public:
  // t_max < 0 means unbounded.
  RewardStream(uint64_t seed, int64_t t_max, bool coupled_binary = false);

  static RewardStream for_trial(uint64_t master_seed, uint64_t trial_index,
                                int64_t t_max, bool coupled_binary = false) {
    return RewardStream(trial_reward_seed(master_seed, trial_index), t_max,
                        coupled_binary);
  }

  // Replays a dumped trace file (one line per step, m space-separated bits).
  static RewardStream from_trace(const std::string& path);

  RewardVector next(const ModelParams& p);

  int64_t position() const { return t_; }
  int64_t horizon() const { return t_max_; }
  uint64_t seed() const { return seed_; }
  bool exhausted() const { return t_max_ >= 0 && t_ >= t_max_; }
  bool replaying() const { return replay_; }

 private:
  Rng gen_;
  uint64_t seed_ = 0;
  int64_t t_max_ = -1;
  int64_t t_ = 0;
  bool coupled_binary_ = false;
  bool replay_ = false;
  std::vector<RewardVector> trace_;
};

// Writes `steps` draws from a copy of the stream to a text trace file.
void dump_trace(const std::string& path, RewardStream stream,
                const ModelParams& p, int64_t steps);

}  // namespace sociallearn
