#pragma once
// Per-trial record shared by the finite and infinite runners.

#include <cstdint>
#include <vector>

#include "sociallearn/rewards.hpp"

namespace sociallearn {

struct RunOptions {
  // Record popularity snapshots every `thin` steps (0 = none; 1 = all).
  int thin = 0;
  // Also capture sample/adopter counts and reward bits for trajectory dumps.
  bool record_counts = false;
  // Finite process: simulate literal per-agent stages instead of count mode.
  bool agent_mode = false;
  // If >= 0, count steps whose post-step min_j popularity drops below this.
  double zeta_floor = -1.0;
};

struct TrialRecord {
  // g_t = sum_j popularity_j^{t-1} * R_j^t for t = 1..T.
  std::vector<double> group_reward;
  // Popularity of the top option before step t (the lagged weight used in
  // both the regret and the leader-share time averages).
  std::vector<double> leader_share;
  // Diagnostic only: adopters-over-N reward mass, sum_j (D_j^{t-1}/N) R_j^t.
  std::vector<double> percap_reward;

  int64_t degenerate_resets = 0;
  int64_t floor_violations = 0;
  int64_t final_t = 0;

  // Optional trajectory capture (see RunOptions::thin).
  std::vector<int64_t> rec_t;
  std::vector<std::vector<double>> rec_popularity;
  std::vector<std::vector<int64_t>> rec_s;
  std::vector<std::vector<int64_t>> rec_d;
  std::vector<RewardVector> rec_r;

  double mean_group_reward() const {
    if (group_reward.empty()) return 0.0;
    double s = 0.0;
    for (double g : group_reward) s += g;
    return s / double(group_reward.size());
  }
  double mean_leader_share() const {
    if (leader_share.empty()) return 0.0;
    double s = 0.0;
    for (double v : leader_share) s += v;
    return s / double(leader_share.size());
  }
};

}  // namespace sociallearn
