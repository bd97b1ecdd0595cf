#include "sociallearn/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sociallearn/util.hpp"

namespace sociallearn {

double ModelParams::delta() const {
  if (beta >= 1.0) return std::numeric_limits<double>::infinity();
  return std::log(beta / (1.0 - beta));
}

double ModelParams::delta_alt() const {
  if (alpha <= 0.0) return std::numeric_limits<double>::infinity();
  return std::log(beta / alpha);
}

bool ModelParams::symmetric_adoption(double tol) const {
  return std::abs(alpha - (1.0 - beta)) <= tol;
}

ModelParams ModelParams::make(int m, std::vector<double> eta, double mu,
                              double beta) {
  ModelParams p;
  p.m = m;
  p.eta = std::move(eta);
  p.mu = mu;
  p.beta = beta;
  p.alpha = 1.0 - beta;
  return p;
}

double DerivedBounds::delta_t(int t) const {
  return std::pow(5.0, double(t)) * delta_pp;
}

double infinite_share_floor(const ModelParams& p) {
  if (p.beta <= 0.0) return 0.0;
  return p.mu * p.alpha / (double(p.m) * p.beta);
}

bool ValidationReport::all_preconditions_hold() const {
  for (const auto& c : preconditions)
    if (!c.holds) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "errors=" << errors.size() << " warnings=" << warnings.size();
  os << " failed_preconditions=";
  bool first = true;
  for (const auto& c : preconditions) {
    if (c.holds) continue;
    if (!first) os << "|";
    os << c.name;
    first = false;
  }
  if (first) os << "none";
  return os.str();
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ValidationReport validate(const ModelParams& p, int64_t n, int64_t t_max) {
  ValidationReport rep;

  if (p.m < 2) rep.errors.push_back("m must be at least 2");
  if (int(p.eta.size()) != p.m)
    rep.errors.push_back("eta must have exactly m entries");
  for (size_t j = 0; j < p.eta.size(); ++j) {
    if (p.eta[j] < 0.0 || p.eta[j] > 1.0) {
      rep.errors.push_back("eta[" + std::to_string(j) + "] outside [0,1]");
      break;
    }
  }
  for (size_t j = 0; j + 1 < p.eta.size(); ++j) {
    if (p.eta[j] < p.eta[j + 1]) {
      rep.errors.push_back("eta must be sorted descending");
      break;
    }
  }
  if (!(p.mu > 0.0 && p.mu <= 1.0))
    rep.errors.push_back("mu must lie in (0,1]");
  if (!(p.beta > 0.0 && p.beta <= 1.0))
    rep.errors.push_back("beta must lie in (0,1]");
  if (p.alpha > p.beta)
    rep.errors.push_back("alpha must not exceed beta");
  if (p.alpha <= 0.0)
    rep.warnings.push_back(
        "degenerate-adoption risk: alpha <= 0 can starve every option");

  const double d = p.delta();
  if (d == 0.0)
    rep.warnings.push_back("delta=0: all regret bounds vacuous");
  if (!p.symmetric_adoption())
    rep.warnings.push_back(
        "alpha != 1-beta: bounds apply with deviation scale ln(beta/alpha)");

  const double e_over = std::exp(1.0) / (std::exp(1.0) + 1.0);
  rep.preconditions.push_back(
      {"beta_range", p.beta > 0.5 && p.beta <= e_over,
       "need 1/2 < beta <= e/(e+1)=" + num(e_over) + ", beta=" + num(p.beta)});
  rep.preconditions.push_back(
      {"mu_small", 6.0 * p.mu <= d * d,
       "need 6*mu <= delta^2; 6*mu=" + num(6.0 * p.mu) +
           " delta^2=" + num(d * d)});

  const double t_min = d > 0.0 ? std::log(double(p.m)) / (d * d)
                               : std::numeric_limits<double>::infinity();
  rep.preconditions.push_back(
      {"t_lower", double(t_max) >= t_min,
       "need T >= ln(m)/delta^2=" + num(t_min) + ", T=" + num(double(t_max))});

  // Finite-population size conditions, evaluated in log space; the required N
  // is astronomically large at desk scale and is reported honestly as unmet.
  if (n >= 2 && d > 0.0 && p.mu > 0.0 && p.beta < 1.0) {
    const double ln_n = std::log(double(n));
    const double c = 240.0 * double(p.m) / ((1.0 - p.beta) * p.mu);
    const double dpp2 =
        60.0 * double(p.m) * ln_n / ((1.0 - p.beta) * p.mu * double(n));
    const double inv_zeta = 4.0 * double(p.m) / (p.mu * (1.0 - p.beta));
    // N/ln(N) >= c * (1/zeta)^(2 ln5 / delta^2) / delta_pp^2
    const double lhs1 = ln_n - std::log(ln_n);
    const double rhs1 = std::log(c) +
                        (2.0 * std::log(5.0) / (d * d)) * std::log(inv_zeta) -
                        std::log(dpp2);
    rep.preconditions.push_back(
        {"n_coupling", lhs1 >= rhs1,
         "log-space: ln(N/lnN)=" + num(lhs1) + " vs required " + num(rhs1)});
    // N^10 >= 24 m ln(m) / (mu (1-beta) delta^3)
    const double lhs2 = 10.0 * ln_n;
    const double rhs2 = std::log(24.0 * double(p.m)) +
                        std::log(std::log(double(p.m))) -
                        std::log(p.mu * (1.0 - p.beta) * d * d * d);
    rep.preconditions.push_back(
        {"n_epoch", lhs2 >= rhs2,
         "log-space: 10*ln(N)=" + num(lhs2) + " vs required " + num(rhs2)});
    // T <= N^10/(m delta)
    const double rhs3 = 10.0 * ln_n - std::log(double(p.m) * d);
    rep.preconditions.push_back(
        {"t_upper", t_max > 0 && std::log(double(t_max)) <= rhs3,
         "log-space: ln(T)=" + num(std::log(double(t_max))) +
             " vs cap " + num(rhs3)});
  }

  return rep;
}

DerivedBounds derived_bounds(const ModelParams& p, int64_t n,
                             double dpp_constant) {
  if (n < 2) throw std::invalid_argument("derived_bounds: n must be >= 2");
  DerivedBounds b;
  b.delta = p.delta();
  b.dpp_constant = dpp_constant;
  if (p.mu > 0.0 && p.beta < 1.0) {
    b.delta_pp = std::sqrt(dpp_constant * double(p.m) * std::log(double(n)) /
                           ((1.0 - p.beta) * p.mu * double(n)));
  } else {
    b.delta_pp = std::numeric_limits<double>::infinity();
  }
  b.zeta = p.mu * (1.0 - p.beta) / (4.0 * double(p.m));
  b.vacuous = !(b.delta > 0.0);
  if (!b.vacuous && b.zeta > 0.0) {
    b.epoch_len =
        int64_t(std::ceil(std::log(1.0 / b.zeta) / (b.delta * b.delta)));
    if (b.epoch_len < 1) b.epoch_len = 1;
  }
  b.regret_bound_inf = 3.0 * b.delta;
  b.regret_bound_fin = 6.0 * b.delta;
  if (p.eta.size() >= 2 && p.eta[0] > p.eta[1]) {
    b.share_lower_bound = 1.0 - 3.0 * b.delta / (p.eta[0] - p.eta[1]);
  } else {
    b.share_lower_bound = -std::numeric_limits<double>::infinity();
  }
  return b;
}

}  // namespace sociallearn
