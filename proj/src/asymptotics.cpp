#include "nrt/asymptotics.hpp"

#include "nrt/krawtchouk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nrt::asym {

namespace {

double logq(int q, double x) { return std::log(x) / std::log(static_cast<double>(q)); }

double A_of(int q, int r, double z) {
  double s = 0.0;
  double p = 1.0;
  for (int i = 1; i <= r; ++i) {
    p *= z;
    s += p;
  }
  return (q - 1.0) / q * s;
}

double L_of(int q, int r, int i) { return (std::pow(q, r - i + 1) - 1.0) / (std::pow(q, r) * (q - 1.0)); }

} // namespace

double delta_crit(int q, int r) {
  return 1.0 - (std::pow(q, r) - 1.0) / (r * std::pow(q, r) * (q - 1.0));
}

double h_q(int q, double x) {
  if (x <= 0.0) return 0.0;
  double out = -x * logq(q, x / (q - 1.0));
  if (x < 1.0) out -= (1.0 - x) * logq(q, 1.0 - x);
  return out;
}

double z0_solve(int q, int r, double x) {
  if (!(x > 0.0 && x < 1.0)) throw BracketError("z0_solve: need 0 < x < 1");
  auto g = [&](double z) {
    double s = 0.0;
    double p = 1.0;
    for (int i = 1; i <= r; ++i) {
      p *= z;
      s += i * p;
    }
    return (q - 1.0) / q * s - x * r * (1.0 + A_of(q, r, z));
  };
  double lo = 0.0;
  double hi = static_cast<double>(r);
  while (g(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) throw BracketError("z0_solve: no sign change");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

double H(int q, int r, double x) {
  if (x <= 0.0) return 0.0;
  const double z = z0_solve(q, r, x);
  return x * (1.0 - logq(q, z)) + logq(q, 1.0 + A_of(q, r, z)) / r;
}

double volume_exponent(int q, int r, double x) { return x >= delta_crit(q, r) ? 1.0 : H(q, r, x); }

double gv_curve(int q, int r, double delta) { return std::max(0.0, 1.0 - volume_exponent(q, r, delta)); }

double hamming_curve(int q, int r, double delta) {
  return std::max(0.0, 1.0 - volume_exponent(q, r, delta / 2.0));
}

double plotkin_curve(int q, int r, double delta) { return std::max(0.0, 1.0 - delta / delta_crit(q, r)); }

double be_curve(int q, int r, double delta) {
  const double dc = delta_crit(q, r);
  if (delta >= dc) return 0.0;
  return std::max(0.0, 1.0 - volume_exponent(q, r, dc * (1.0 - std::sqrt(1.0 - delta / dc))));
}

double lambda_of(int q, int r, const std::vector<double>& taus, LambdaDiagonal diagonal) {
  double tau = 0.0;
  for (double t : taus) tau += t;
  double total = 0.0;
  for (int i = 1; i <= r; ++i) {
    const double ti = taus[static_cast<std::size_t>(i - 1)];
    double term = 2.0 * std::sqrt(std::max(0.0, (1.0 - tau) * ti * (q - 1.0) * std::pow(q, i - 1)));
    double heavier = 0.0;
    if (diagonal == LambdaDiagonal::Full)
      for (int j = i + 1; j <= r; ++j) heavier += taus[static_cast<std::size_t>(j - 1)];
    term += std::pow(q, i - 1) * ((q - 2.0) * ti + (q - 1.0) * heavier);
    double cross = 0.0;
    for (int k = 1; k < i; ++k) cross += std::sqrt(taus[static_cast<std::size_t>(k - 1)] * ti * std::pow(q, i + k));
    term += 2.0 * (q - 1.0) / q * cross;
    total += L_of(q, r, i) * term;
  }
  return total;
}

LambdaMax lambda_asym(int q, int r, double tau, LambdaDiagonal diagonal) {
  LambdaMax best;
  best.argmax.assign(static_cast<std::size_t>(r), 0.0);
  if (tau <= 0.0) return best;
  best.argmax[0] = tau;
  best.value = lambda_of(q, r, best.argmax, diagonal);
  const int steps = 200;
  // all compositions of `steps` into r parts
  std::vector<int> parts(static_cast<std::size_t>(r), 0);
  std::vector<double> taus(static_cast<std::size_t>(r));
  auto visit = [&](auto&& self, int i, int left) -> void {
    if (i == r - 1) {
      parts[static_cast<std::size_t>(i)] = left;
      for (int k = 0; k < r; ++k) taus[static_cast<std::size_t>(k)] = tau * parts[static_cast<std::size_t>(k)] / steps;
      const double v = lambda_of(q, r, taus, diagonal);
      if (v > best.value) {
        best.value = v;
        best.argmax = taus;
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      parts[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  visit(visit, 0, steps);
  // pairwise transfers with a shrinking step
  double h = tau / steps;
  while (h > 1e-13 * std::max(1.0, tau)) {
    bool moved = false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        auto trial = best.argmax;
        const double amount = std::min(h, trial[static_cast<std::size_t>(j)]);
        if (amount <= 0.0) continue;
        trial[static_cast<std::size_t>(i)] += amount;
        trial[static_cast<std::size_t>(j)] -= amount;
        const double v = lambda_of(q, r, trial, diagonal);
        if (v > best.value) {
          best.value = v;
          best.argmax = trial;
          moved = true;
        }
      }
    if (!moved) h /= 2.0;
  }
  return best;
}

CurvePoint lp_point(int q, int r, double tau) {
  const auto lam = lambda_asym(q, r, tau);
  CurvePoint p;
  p.rate = (h_q(q, tau) + tau * logq(q, (std::pow(q, r) - 1.0) / (q - 1.0))) / r;
  p.delta = delta_crit(q, r) - lam.value / r;
  p.meta.push_back(tau);
  for (double t : lam.argmax) p.meta.push_back(t);
  return p;
}

double lp_tau_peak(int q, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, r});
    if (it != cache.end()) return it->second;
  }
  // golden-section maximization of max Lambda over tau in (0, 1)
  double a = 0.0;
  double b = 1.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = lambda_asym(q, r, c).value;
  double fd = lambda_asym(q, r, d).value;
  while (b - a > 1e-10) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = lambda_asym(q, r, d).value;
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = lambda_asym(q, r, c).value;
    }
  }
  return 0.5 * (a + b);
}

std::vector<CurvePoint> lp_curve(int q, int r, int points) {
  if (points < 1) throw std::invalid_argument("lp_curve: need at least one point");
  const double peak = lp_tau_peak(q, r);
  std::vector<CurvePoint> out;
  for (int k = 1; k <= points; ++k) out.push_back(lp_point(q, r, peak * k / points));
  std::sort(out.begin(), out.end(), [](const CurvePoint& x, const CurvePoint& y) { return x.delta < y.delta; });
  return out;
}

CurvePoint lp_point_at(int q, int r, double delta) {
  const double dc = delta_crit(q, r);
  if (delta >= dc) {
    CurvePoint p;
    p.delta = delta;
    p.meta.assign(static_cast<std::size_t>(r + 1), 0.0);
    return p;
  }
  const double peak = lp_tau_peak(q, r);
  auto at_peak = lp_point(q, r, peak);
  if (at_peak.delta > delta) {
    at_peak.delta = delta;
    at_peak.rate = 1.0;
    return at_peak;
  }
  double lo = 0.0;
  double hi = peak;
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lp_point(q, r, mid).delta > delta) lo = mid;
    else hi = mid;
  }
  auto p = lp_point(q, r, hi);
  p.delta = delta;
  p.rate = std::min(1.0, p.rate);
  return p;
}

double lp_curve_at(int q, int r, double delta) { return lp_point_at(q, r, delta).rate; }

namespace {

double phi_objective(int q, double t1, double t2) {
  return 0.5 * (t2 + h_q(q, t1) + (1.0 - t1) * h_q(q, t2 / (1.0 - t1)));
}

double phi_constraint(int q, double t1, double t2) {
  const double g2 = gamma_limit(q, t2);
  return g2 + (2.0 - g2) * (1.0 - t2) * gamma_limit(q, t1);
}

// Least feasible tau_1 for a given tau_2, or negative when none.
double min_tau1(int q, double t2, double delta) {
  const double t1max = (q - 1.0) / (q * q);
  const double rhs = 2.0 * delta + 1e-14;
  if (phi_constraint(q, 0.0, t2) <= rhs) return 0.0;
  if (phi_constraint(q, t1max, t2) > rhs) return -1.0;
  double lo = 0.0;
  double hi = t1max;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (phi_constraint(q, mid, t2) <= rhs) hi = mid;
    else lo = mid;
  }
  return hi;
}

} // namespace

PhiResult phi_r2(int q, double delta) {
  PhiResult best;
  const double t2max = (q - 1.0) / q;
  const int grid = 2000;
  auto consider = [&](double t2) {
    const double t1 = min_tau1(q, t2, delta);
    if (t1 < 0.0) return std::numeric_limits<double>::infinity();
    const double v = phi_objective(q, t1, t2);
    if (!best.feasible || v < best.value) {
      best.feasible = true;
      best.value = v;
      best.tau1 = t1;
      best.tau2 = t2;
    }
    return v;
  };
  for (int k = 0; k <= grid; ++k) consider(t2max * k / grid);
  if (!best.feasible) return best;
  // local refinement around the best grid cell
  double a = std::max(0.0, best.tau2 - t2max / grid);
  double b = std::min(t2max, best.tau2 + t2max / grid);
  for (int it = 0; it < 100 && b - a > 1e-13; ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (consider(m1) <= consider(m2)) b = m2;
    else a = m1;
  }
  best.value = std::min(best.value, 1.0);
  return best;
}

NetCurvePoint psi_nets(int q, double delta) {
  NetCurvePoint p;
  p.delta = delta;
  if (delta <= 0.0) {
    p.alpha = 1.0;
    p.rate = 0.0;
    return p;
  }
  const double b = (q - 1.0) * (delta + 1.0);
  p.alpha = 2.0 * (q - 1.0) / (b + std::sqrt(b * b + 4.0 * delta * (q - 1.0)));
  p.rate = delta - 1.0 + logq(q, (q - 1.0 + p.alpha) / p.alpha) - delta * logq(q, 1.0 - p.alpha);
  return p;
}

double nets_rao(int q, double delta) { return psi_nets(q, delta / 2.0).rate; }

bool is_net_curve(const std::string& name) { return name == "psi" || name == "psirao"; }

CurvePoint evaluate_curve(const std::string& name, int q, int r, double delta) {
  CurvePoint p;
  p.delta = delta;
  if (name == "gv") p.rate = gv_curve(q, r, delta);
  else if (name == "hamming") p.rate = hamming_curve(q, r, delta);
  else if (name == "plotkin") p.rate = plotkin_curve(q, r, delta);
  else if (name == "be") p.rate = be_curve(q, r, delta);
  else if (name == "lp") p = lp_point_at(q, r, delta);
  else if (name == "lp2") {
    if (r != 2) throw std::invalid_argument("curve lp2 needs r = 2");
    const auto phi = delta <= 0.0 ? PhiResult{} : phi_r2(q, delta);
    p.rate = phi.value;
    p.meta = {phi.tau1, phi.tau2};
  } else if (name == "psi") {
    const auto n = psi_nets(q, delta);
    p.rate = n.rate;
    p.meta = {n.alpha};
  } else if (name == "psirao") {
    const auto n = psi_nets(q, delta / 2.0);
    p.rate = n.rate;
    p.meta = {n.alpha};
  } else {
    throw std::invalid_argument("unknown curve: " + name);
  }
  return p;
}

std::vector<CurvePoint> curve_on_grid(const std::string& name, int q, int r, int points, double delta_max) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<CurvePoint> out;
  for (int k = 0; k < points; ++k) out.push_back(evaluate_curve(name, q, r, delta_max * k / (points - 1)));
  return out;
}

} // namespace nrt::asym
