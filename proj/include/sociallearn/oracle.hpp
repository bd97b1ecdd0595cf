#pragma once
// Brute-force transition distribution of the finite process for tiny
// instances, by enumerating reward outcomes x stage-one count vectors x
// per-option adoption counts. Enumeration is over exchangeable counts, never
// individual agents. Probability arithmetic is templated: long double with a
// sorted-ascending summation contract by default, exact rationals on demand.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sociallearn/params.hpp"

namespace sociallearn {

using Rational = boost::multiprecision::cpp_rational;

struct OracleSizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int64_t kOracleMaxN = 4;
inline constexpr int kOracleMaxM = 3;
inline constexpr int64_t kOracleMaxT = 3;

template <class P>
struct StateDistributionT {
  int64_t n = 0;
  int m = 0;
  int64_t t = 0;
  std::map<std::vector<int64_t>, P> prob;  // adopter counts -> probability

  // Total probability mass. Float mode sums ascending by magnitude.
  P total() const {
    std::vector<P> vals;
    vals.reserve(prob.size());
    for (const auto& [d, pr] : prob) vals.push_back(pr);
    if constexpr (std::is_floating_point_v<P>) {
      std::sort(vals.begin(), vals.end(),
                [](const P& a, const P& b) { return std::abs((long double)a) < std::abs((long double)b); });
    }
    P tot = 0;
    for (const auto& v : vals) tot += v;
    return tot;
  }
};

using StateDistribution = StateDistributionT<long double>;
using ExactStateDistribution = StateDistributionT<Rational>;

namespace oracle_detail {

inline void check_size(const ModelParams& p, int64_t n) {
  if (n < 1 || n > kOracleMaxN)
    throw OracleSizeError("exact oracle requires 1 <= N <= " +
                          std::to_string(kOracleMaxN));
  if (p.m < 2 || p.m > kOracleMaxM)
    throw OracleSizeError("exact oracle requires 2 <= m <= " +
                          std::to_string(kOracleMaxM));
}

inline int64_t binom_coeff(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class P>
P pow_count(const P& base, int64_t e) {
  P r = 1;
  for (int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

template <class Fn>
void for_each_composition(int64_t n, int m, std::vector<int64_t>& buf, int j,
                          Fn&& fn) {
  if (j == m - 1) {
    buf[size_t(j)] = n;
    fn(buf);
    return;
  }
  for (int64_t k = 0; k <= n; ++k) {
    buf[size_t(j)] = k;
    for_each_composition(n - k, m, buf, j + 1, fn);
  }
}

// q induced by adopter counts; all-zero counts carry the uniform convention.
template <class P>
std::vector<P> popularity(const std::vector<int64_t>& d, int m) {
  int64_t tot = 0;
  for (int64_t v : d) tot += v;
  std::vector<P> q(size_t(m));
  if (tot == 0) {
    for (auto& v : q) v = P(1) / P(m);
  } else {
    for (int j = 0; j < m; ++j) q[size_t(j)] = P(d[size_t(j)]) / P(tot);
  }
  return q;
}

}  // namespace oracle_detail

template <class P>
StateDistributionT<P> initial_distribution(const ModelParams& p, int64_t n) {
  oracle_detail::check_size(p, n);
  StateDistributionT<P> dist;
  dist.n = n;
  dist.m = p.m;
  dist.prob[std::vector<int64_t>(size_t(p.m), 0)] = 1;
  return dist;
}

// One exact pushforward. When joint_qr is non-null it receives
// sum over the enumeration of Pr * Q_j(before) * R_j, i.e. E[Q_j^t R_j^{t+1}].
template <class P>
StateDistributionT<P> exact_step(const StateDistributionT<P>& dist,
                                 const ModelParams& p,
                                 std::vector<P>* joint_qr = nullptr) {
  using namespace oracle_detail;
  check_size(p, dist.n);
  const int m = dist.m;
  const int64_t n = dist.n;

  std::vector<P> eta(size_t(m)), mu_term(size_t(m));
  for (int j = 0; j < m; ++j) eta[size_t(j)] = P(p.eta[size_t(j)]);
  const P mu = P(p.mu);
  const P beta = P(p.beta);
  const P alpha = P(p.alpha);

  if (joint_qr) joint_qr->assign(size_t(m), P(0));

  StateDistributionT<P> out;
  out.n = n;
  out.m = m;
  out.t = dist.t + 1;

  std::vector<int64_t> sbuf(size_t(m));
  for (const auto& [d, pr_state] : dist.prob) {
    std::vector<P> q = popularity<P>(d, m);
    std::vector<P> samp(size_t(m));
    for (int j = 0; j < m; ++j)
      samp[size_t(j)] = (P(1) - mu) * q[size_t(j)] + mu / P(m);

    for (int rmask = 0; rmask < (1 << m); ++rmask) {
      P pr_r = 1;
      for (int j = 0; j < m; ++j) {
        bool good = (rmask >> j) & 1;
        pr_r *= good ? eta[size_t(j)] : P(1) - eta[size_t(j)];
      }
      if (pr_r == 0) continue;
      if (joint_qr) {
        for (int j = 0; j < m; ++j)
          if ((rmask >> j) & 1) (*joint_qr)[size_t(j)] += pr_state * pr_r * q[size_t(j)];
      }

      for_each_composition(n, m, sbuf, 0, [&](const std::vector<int64_t>& s) {
        P pr_s = P(1);
        int64_t multi = 1, left = n;
        for (int j = 0; j < m; ++j) {
          multi *= binom_coeff(left, s[size_t(j)]);
          left -= s[size_t(j)];
          pr_s *= pow_count(samp[size_t(j)], s[size_t(j)]);
        }
        pr_s *= P(multi);
        if (pr_s == 0) return;

        // Per-option adoption counts, product of independent binomials.
        std::vector<int64_t> a(size_t(m), 0);
        std::vector<P> branch(size_t(m) + 1);
        branch[0] = pr_state * pr_r * pr_s;
        int j = 0;
        while (j >= 0) {
          if (j == m) {
            out.prob[a] += branch[size_t(m)];
            --j;
            ++a[size_t(j)];
          } else if (a[size_t(j)] > s[size_t(j)]) {
            a[size_t(j)] = 0;
            --j;
            if (j >= 0) ++a[size_t(j)];
          } else {
            bool good = (rmask >> j) & 1;
            P phi = good ? beta : alpha;
            P pr_a = P(binom_coeff(s[size_t(j)], a[size_t(j)])) *
                     pow_count(phi, a[size_t(j)]) *
                     pow_count(P(1) - phi, s[size_t(j)] - a[size_t(j)]);
            branch[size_t(j) + 1] = branch[size_t(j)] * pr_a;
            ++j;
          }
        }
      });
    }
  }
  return out;
}

template <class P>
std::vector<P> expected_popularity(const StateDistributionT<P>& dist) {
  std::vector<P> e(size_t(dist.m), P(0));
  for (const auto& [d, pr] : dist.prob) {
    auto q = oracle_detail::popularity<P>(d, dist.m);
    for (int j = 0; j < dist.m; ++j) e[size_t(j)] += pr * q[size_t(j)];
  }
  return e;
}

// Exact Regret_N(T) by dynamic programming over the state distribution.
// The reward cross-term factorizes, E[Q_j^{t-1} R_j^t] = E[Q_j^{t-1}] eta_j,
// because rewards are independent of the past; the joint accumulation is kept
// and compared as a self-check of the enumeration bookkeeping.
template <class P>
P exact_regret(const ModelParams& p, int64_t n, int64_t t_max) {
  oracle_detail::check_size(p, n);
  if (t_max < 1 || t_max > kOracleMaxT)
    throw OracleSizeError("exact regret requires 1 <= T <= " +
                          std::to_string(kOracleMaxT));
  auto dist = initial_distribution<P>(p, n);
  P cum = 0;
  for (int64_t t = 1; t <= t_max; ++t) {
    std::vector<P> e_q = expected_popularity(dist);
    std::vector<P> joint;
    dist = exact_step(dist, p, &joint);
    for (int j = 0; j < p.m; ++j) {
      P expect = e_q[size_t(j)] * P(p.eta[size_t(j)]);
      P diff = joint[size_t(j)] - expect;
      if constexpr (std::is_floating_point_v<P>) {
        if (std::abs((long double)diff) > 1e-10L)
          throw std::logic_error("oracle factorization self-check failed");
      } else {
        if (diff != 0)
          throw std::logic_error("oracle factorization self-check failed");
      }
      cum += expect;
    }
  }
  return P(p.eta[0]) - cum / P(t_max);
}

// Total-variation distance between the oracle distribution and empirical
// counts (map from adopter vector to occurrences out of n_samples).
template <class P>
double tv_distance(const StateDistributionT<P>& dist,
                   const std::map<std::vector<int64_t>, int64_t>& counts,
                   int64_t n_samples) {
  long double tv = 0;
  for (const auto& [d, pr] : dist.prob) {
    auto it = counts.find(d);
    long double emp =
        it == counts.end() ? 0.0L : (long double)it->second / n_samples;
    tv += std::abs(emp - (long double)pr);
  }
  for (const auto& [d, c] : counts) {
    if (!dist.prob.count(d)) tv += (long double)c / n_samples;
  }
  return double(tv / 2);
}

}  // namespace sociallearn
