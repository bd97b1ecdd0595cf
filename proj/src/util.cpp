#include "sociallearn/util.hpp"

#include <algorithm>
#include <cstdio>

namespace sociallearn {

int64_t binomial_draw(Rng& rng, int64_t n, double p) {
  if (n <= 0) return 0;
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  std::binomial_distribution<int64_t> dist(n, p);
  return dist(rng);
}

std::vector<int64_t> multinomial_draw(Rng& rng, int64_t n,
                                      const std::vector<double>& p) {
  const size_t m = p.size();
  std::vector<int64_t> out(m, 0);
  int64_t left = n;
  double rem = 1.0;
  for (size_t j = 0; j + 1 < m; ++j) {
    if (left == 0) break;
    double q = rem > 0.0 ? p[j] / rem : 0.0;
    q = std::clamp(q, 0.0, 1.0);
    out[j] = binomial_draw(rng, left, q);
    left -= out[j];
    rem -= p[j];
  }
  if (m > 0) out[m - 1] = left;
  return out;
}

MeanSe mean_se(std::span<const double> xs) {
  MeanSe r;
  r.n = int64_t(xs.size());
  if (r.n == 0) return r;
  double sum = 0.0;
  for (double x : xs) sum += x;
  r.mean = sum / double(r.n);
  if (r.n > 1) {
    double ss = 0.0;
    for (double x : xs) {
      double d = x - r.mean;
      ss += d * d;
    }
    r.stddev = std::sqrt(ss / double(r.n - 1));
    r.se = r.stddev / std::sqrt(double(r.n));
  }
  return r;
}

double median(std::vector<double> xs) { return quantile(std::move(xs), 0.5); }

double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(xs.begin(), xs.end());
  double pos = q * double(xs.size() - 1);
  size_t lo = size_t(std::floor(pos));
  size_t hi = size_t(std::ceil(pos));
  double frac = pos - double(lo);
  return xs[lo] * (1.0 - frac) + xs[hi] * frac;
}

LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
  LinearFit f;
  f.n = int(x.size());
  if (x.size() != y.size() || x.size() < 2) return f;
  double xm = 0.0, ym = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= double(x.size());
  ym /= double(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  f.slope = sxy / sxx;
  f.intercept = ym - f.slope * xm;
  if (x.size() > 2) {
    double ss = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      double r = y[i] - (f.intercept + f.slope * x[i]);
      ss += r * r;
    }
    f.slope_se = std::sqrt(ss / double(x.size() - 2) / sxx);
  }
  return f;
}

uint64_t fnv1a(const void* data, size_t len, uint64_t h) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sociallearn
