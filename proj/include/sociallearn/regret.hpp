#pragma once
// Monte Carlo regret estimation for both processes, the epoch-structured
// long-horizon experiment, and the table of theoretical bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sociallearn/params.hpp"
#include "sociallearn/record.hpp"

namespace sociallearn {

enum class Process { finite, infinite };

std::string to_string(Process p);

struct RegretSummary {
  Process process = Process::finite;
  int64_t n = 0;
  int64_t t_max = 0;
  int64_t trials = 0;
  uint64_t seed = 0;

  double regret_mean = 0.0;  // mean over trials of eta_1 - avg group reward
  double regret_se = 0.0;
  double leader_share_mean = 0.0;  // time-averaged lagged top-option share
  double leader_share_se = 0.0;
  double bound = 0.0;  // headline theoretical bound for this process
  std::string bound_name;
  bool bound_vacuous = false;
  int64_t degenerate_resets = 0;
  int64_t floor_violation_steps = 0;  // steps with min_j popularity < zeta
  int64_t total_steps = 0;
};

// Nonuniform infinite starts are allowed; when require_floor is set the start
// must respect the zeta entropy floor (the long-horizon argument needs it).
struct EstimateOptions {
  std::optional<std::vector<double>> start;  // infinite process only
  bool require_floor = false;
  bool agent_mode = false;
  bool coupled_binary = false;
  int workers = 1;
};

RegretSummary estimate_regret(Process process, const ModelParams& p, int64_t n,
                              int64_t t_max, int64_t trials,
                              uint64_t master_seed,
                              const EstimateOptions& opt = {});

struct EpochSummary {
  int64_t epoch = 0;  // 1-based
  int64_t epoch_len = 0;
  double regret_mean = 0.0;
  double regret_se = 0.0;
  // Popularity floor at the epoch's closing step, aggregated over trials.
  double min_boundary_popularity = 0.0;
  double boundary_floor_violation_frac = 0.0;
};

std::vector<EpochSummary> epoch_experiment(const ModelParams& p, int64_t n,
                                           int64_t epochs, int64_t trials,
                                           uint64_t master_seed,
                                           int workers = 1);

struct BoundRow {
  std::string name;
  double value = 0.0;
  bool vacuous = false;
  bool holds = true;  // for precondition rows
  std::string note;
};

// Pure computation of every theoretical quantity next to which estimates are
// displayed. delta = 0 yields vacuous markers, never division errors.
std::vector<BoundRow> bound_table(const ModelParams& p, int64_t n,
                                  int64_t t_max);

}  // namespace sociallearn
