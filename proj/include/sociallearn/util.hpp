#pragma once
// Shared plumbing: seed derivation, RNG draws, summary statistics,
// least squares, a trial worker pool, and a stream checksum.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sociallearn {

using Rng = std::mt19937_64;

// SplitMix64 finalizer on (master + golden-ratio stride). Every trial, sweep
// cell and reward stream derives its seed from (master, index) through this
// function, so workers can claim indices in any order without changing
// results.
inline uint64_t split_seed(uint64_t master, uint64_t index) {
  uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Reward streams and simulation noise live on disjoint seed lanes so a finite
// and an infinite run of the same trial index share rewards but not noise.
inline uint64_t trial_reward_seed(uint64_t master, uint64_t trial) {
  return split_seed(master, 2 * trial);
}
inline uint64_t trial_noise_seed(uint64_t master, uint64_t trial) {
  return split_seed(master, 2 * trial + 1);
}

// 53-bit uniform in [0,1).
inline double uniform01(Rng& rng) { return double(rng() >> 11) * 0x1.0p-53; }

int64_t binomial_draw(Rng& rng, int64_t n, double p);

// N categorical draws with probabilities p, decomposed into conditional
// binomials: O(m) per call independent of n.
std::vector<int64_t> multinomial_draw(Rng& rng, int64_t n,
                                      const std::vector<double>& p);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;      // sample stddev / sqrt(n)
  double stddev = 0.0;  // sample stddev (n-1 denominator)
  int64_t n = 0;
};
MeanSe mean_se(std::span<const double> xs);

double median(std::vector<double> xs);
double quantile(std::vector<double> xs, double q);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  int n = 0;
};
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

uint64_t fnv1a(const void* data, size_t len,
               uint64_t h = 1469598103934665603ULL);

// Runs fn(0..trials-1) across `workers` threads. Results must be written to
// per-index slots; aggregation order is then independent of scheduling.
template <class Fn>
void parallel_trials(int64_t trials, int workers, Fn&& fn) {
  if (workers <= 1 || trials <= 1) {
    for (int64_t i = 0; i < trials; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  int nw = int(std::min<int64_t>(workers, trials));
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&] {
      int64_t i;
      while (!failed.load(std::memory_order_relaxed) &&
             (i = next.fetch_add(1)) < trials) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!first_error) first_error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// %.17g formatting: round-trip exact and byte-stable across runs.
std::string fmt_double(double v);

}  // namespace sociallearn
