#include "nrt/bounds.hpp"

#include "nrt/krawtchouk.hpp"
#include "nrt/scheme_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nrt {

std::string to_string(BoundSide side) {
  switch (side) {
  case BoundSide::UpperCode: return "upper-on-code-size";
  case BoundSide::LowerCode: return "lower-on-code-size";
  case BoundSide::LowerOoa: return "lower-on-ooa-size";
  }
  return "?";
}

double BoundResult::as_double() const {
  if (exact) return exact->get_d();
  if (approx) return *approx;
  return std::numeric_limits<double>::quiet_NaN();
}

std::optional<Integer> BoundResult::floor_value() const {
  if (!applicable) return std::nullopt;
  if (exact) return floor_of(*exact);
  if (approx && std::isfinite(*approx)) {
    Integer out;
    mpz_set_d(out.get_mpz_t(), std::floor(*approx));
    return out;
  }
  return std::nullopt;
}

namespace {

void check_distance(const SpaceParams& p, int d) {
  p.validate();
  if (d < 1 || d > p.length() + 1) throw std::invalid_argument("distance must satisfy 1 <= d <= rn + 1");
}

void check_strength(const SpaceParams& p, int t) {
  p.validate();
  if (t < 0 || t > p.length()) throw std::invalid_argument("strength must satisfy 0 <= t <= rn");
}

BoundResult exact_result(std::string name, BoundSide side, Rational value) {
  BoundResult out;
  out.name = std::move(name);
  out.side = side;
  out.applicable = true;
  value.canonicalize();
  out.exact = std::move(value);
  return out;
}

BoundResult inapplicable(std::string name, BoundSide side, std::string note) {
  BoundResult out;
  out.name = std::move(name);
  out.side = side;
  out.note = std::move(note);
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

Rational nr_delta(const SpaceParams& p) { return delta_crit(p.q, p.r) * p.length(); }

bool is_prime_power(int q) {
  for (int p = 2; p <= q; ++p)
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  return false;
}

} // namespace

BoundResult singleton(const SpaceParams& params, int d) {
  check_distance(params, d);
  auto out = exact_result("singleton", BoundSide::UpperCode,
                          Rational(ipow(params.q, static_cast<unsigned long>(params.length() - d + 1))));
  return out;
}

BoundResult plotkin(const SpaceParams& params, int d) {
  check_distance(params, d);
  const Rational thr = nr_delta(params);
  if (Rational(d) <= thr) return inapplicable("plotkin", BoundSide::UpperCode, "needs d > nr delta_crit");
  return exact_result("plotkin", BoundSide::UpperCode, Rational(d) / (Rational(d) - thr));
}

BoundResult dual_plotkin_ooa(const SpaceParams& params, int t) {
  check_strength(params, t);
  const Rational thr = nr_delta(params);
  if (Rational(t) < thr - 1) return inapplicable("dual_plotkin", BoundSide::LowerOoa, "needs t >= nr delta_crit - 1");
  auto out = exact_result("dual_plotkin", BoundSide::LowerOoa,
                          Rational(params.ambient_size()) * (1 - thr / Rational(t + 1)));
  out.witness["t"] = std::to_string(t);
  return out;
}

BoundResult hamming(const SpaceParams& params, int d) {
  check_distance(params, d);
  const int tau = (d - 1) / 2;
  auto out = exact_result("hamming", BoundSide::UpperCode,
                          Rational(params.ambient_size(), ball_size(params, tau)));
  out.witness["tau"] = std::to_string(tau);
  return out;
}

BoundResult rao(const SpaceParams& params, int t) {
  check_strength(params, t);
  const int tau = t / 2;
  auto out = exact_result("rao", BoundSide::LowerOoa, Rational(ball_size(params, tau)));
  out.witness["tau"] = std::to_string(tau);
  out.witness["t"] = std::to_string(t);
  return out;
}

std::optional<Rational> johnson(const SpaceParams& params, int d, int w) {
  params.validate();
  if (w < 0) return std::nullopt;
  const Rational nd = nr_delta(params);
  const Rational W(w);
  if (Rational(d) < 2 * W - W * W / nd) return std::nullopt;
  const Rational n(params.n);
  const Rational denom = Rational(d) * n - 2 * W * n + W * W / (delta_crit(params.q, params.r) * params.r);
  if (denom <= 0) return std::nullopt;
  Rational out = Rational(d) * n / denom;
  out.canonicalize();
  return out;
}

BoundResult bassalygo_elias(const SpaceParams& params, int d) {
  check_distance(params, d);
  const Rational nd = nr_delta(params);
  const int wmax = std::min(params.length(), static_cast<int>(floor_of(nd).get_si()));
  std::optional<Rational> best;
  int best_w = -1;
  for (int w = 0; w <= wmax; ++w) {
    const auto j = johnson(params, d, w);
    if (!j) continue;
    const Rational value = Rational(params.ambient_size()) / Rational(sphere_size(params, w)) * *j;
    if (!best || value < *best) {
      best = value;
      best_w = w;
    }
  }
  if (!best) return inapplicable("bassalygo_elias", BoundSide::UpperCode, "no admissible radius w");
  auto out = exact_result("bassalygo_elias", BoundSide::UpperCode, *best);
  out.witness["w"] = std::to_string(best_w);
  return out;
}

BoundResult gilbert(const SpaceParams& params, int d) {
  check_distance(params, d);
  const Integer ball = ball_size(params, d - 1);
  return exact_result("gilbert", BoundSide::LowerCode, Rational(ceil_of(Rational(params.ambient_size(), ball))));
}

int varshamov_m(const SpaceParams& params, int t) {
  check_strength(params, t);
  // sphere sizes of the (r, n - 1) space
  std::vector<Integer> S(static_cast<std::size_t>(params.length() + 1), 0);
  if (params.n == 1) {
    S[0] = 1;
  } else {
    const SpaceParams smaller{params.q, params.r, params.n - 1};
    for (int i = 0; i <= smaller.length(); ++i) S[static_cast<std::size_t>(i)] = sphere_size(smaller, i);
  }
  for (int m = t; m < params.length(); ++m) {
    bool ok = true;
    for (int tau = 1; tau <= t - 1 && ok; ++tau) {
      Integer sum = 0;
      for (int i = 0; i <= t - tau; ++i) sum += S[static_cast<std::size_t>(i)];
      ok = sum < ipow(params.q, static_cast<unsigned long>(m - tau + 1));
    }
    if (ok) return m;
  }
  return params.length();
}

BoundResult varshamov(const SpaceParams& params, int d) {
  check_distance(params, d);
  if (!is_prime_power(params.q)) return inapplicable("varshamov", BoundSide::LowerCode, "q must be a prime power");
  const int t = std::min(d - 1, params.length());
  const int m = varshamov_m(params, t);
  auto out = exact_result("varshamov", BoundSide::LowerCode,
                          Rational(ipow(params.q, static_cast<unsigned long>(params.length() - m))));
  out.witness["m"] = std::to_string(m);
  return out;
}

namespace {

struct SpectralPick {
  int kappa = 0;
  double value = 0.0;
  double tolerance = 0.0;
  SpectralEnclosure lambda;
  double lambda_prev = 0.0;
};

std::optional<SpectralPick> spectral_scan(const SpaceParams& p, int d, const SpectralScanOptions& opt,
                                          std::string& note) {
  const Rational nd = nr_delta(p);
  const double ndd = nd.get_d();
  const double thr = Rational(nd - d).get_d();
  SpectralOptions so{opt.relative_tolerance, opt.max_iterations};
  double prev_lower = 0.0; // lambda_0 = 0 exactly
  for (int kappa = 1; kappa < p.n; ++kappa) {
    const auto enc = spectral_radius(build_operator(p, kappa), so);
    if (prev_lower >= thr) {
      const double denom = ndd - enc.upper;
      if (denom <= 0.0) {
        note = "first admissible degree has nonpositive denominator";
        return std::nullopt;
      }
      Rational mult = 4 * Rational(p.r) * delta_crit(p.q, p.r) * (p.n - kappa) *
                      Rational(ipow(ipow(p.q, static_cast<unsigned long>(p.r)).get_si() - 1,
                                    static_cast<unsigned long>(kappa)) *
                               binomial(p.n, kappa));
      const double m = mult.get_d();
      SpectralPick pick;
      pick.kappa = kappa;
      pick.value = m / denom;
      pick.tolerance = pick.value - m / (ndd - enc.lower);
      pick.lambda = enc;
      pick.lambda_prev = prev_lower;
      return pick;
    }
    prev_lower = enc.lower;
  }
  note = "no degree kappa < n satisfies the eigenvalue hypothesis";
  return std::nullopt;
}

} // namespace

BoundResult spectral_bound(const SpaceParams& params, int d, const SpectralScanOptions& options) {
  check_distance(params, d);
  std::string note;
  std::optional<SpectralPick> pick;
  try {
    pick = spectral_scan(params, d, options, note);
  } catch (const SpectralNonConvergence& e) {
    return inapplicable("spectral", BoundSide::UpperCode, e.what());
  }
  if (!pick) return inapplicable("spectral", BoundSide::UpperCode, note);
  BoundResult out;
  out.name = "spectral";
  out.side = BoundSide::UpperCode;
  out.applicable = true;
  out.approx = pick->value;
  out.tolerance = pick->tolerance;
  out.witness["kappa"] = std::to_string(pick->kappa);
  out.witness["lambda_lower"] = fmt(pick->lambda.lower);
  out.witness["lambda_upper"] = fmt(pick->lambda.upper);
  out.witness["lambda_prev_lower"] = fmt(pick->lambda_prev);
  return out;
}

BoundResult spectral_bound_ooa(const SpaceParams& params, int t, const SpectralScanOptions& options) {
  check_strength(params, t);
  auto code = spectral_bound(params, t + 1, options);
  code.name = "spectral_ooa";
  code.side = BoundSide::LowerOoa;
  code.witness["t"] = std::to_string(t);
  if (!code.applicable) return code;
  const double N = params.ambient_size().get_d();
  const double v = *code.approx;
  code.approx = N / v;
  code.tolerance = N / (v - code.tolerance) - N / v;
  return code;
}

ApproxCheck check_certificate_approx(const ApproxCertificate& cert, double value_tol, double coeff_tol) {
  ApproxCheck out;
  KrawtchoukTable K(cert.params);
  const auto& idx = K.shapes();
  std::vector<double> values(idx.size(), cert.F0);
  for (const auto& [f, c] : cert.F) {
    const auto fi = idx.index_of(f);
    for (std::size_t e = 0; e < idx.size(); ++e) values[e] += c * K(fi, e).get_d();
  }
  for (double v : values) out.scale = std::max(out.scale, std::abs(v));
  out.min_coefficient = std::numeric_limits<double>::infinity();
  for (const auto& [f, c] : cert.F)
    if (!f.is_zero()) out.min_coefficient = std::min(out.min_coefficient, c);
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < idx.size(); ++e)
    if (!idx[e].is_zero() && idx[e].weight() >= cert.d) out.max_violation = std::max(out.max_violation, values[e]);
  out.code_bound = values[idx.index_of(Shape::zero(cert.params.r))] / cert.F0;
  if (!(cert.F0 > 0.0)) out.reason = "F0 is not positive";
  else if (out.min_coefficient < -coeff_tol * out.scale) out.reason = "negative coefficient beyond tolerance";
  else if (out.max_violation > value_tol * out.scale) out.reason = "F(e) > 0 beyond tolerance at |e|' >= d";
  out.accepted = out.reason.empty();
  return out;
}

namespace {

// W(x) = k_{s2+1}(nu, x) / k_{s2}(nu, x)
long double W(int q, long double nu, int s2, long double x) {
  return k_uni_ld(q, nu, s2 + 1, x) / k_uni_ld(q, nu, s2, x);
}

} // namespace

std::vector<R2Candidate> r2_candidates(const SpaceParams& params, int d) {
  check_distance(params, d);
  if (params.r != 2) throw std::invalid_argument("r2 bound needs r = 2");
  const int n = params.n;
  const int q = params.q;
  std::vector<R2Candidate> out;
  for (int s1 = 1; s1 <= n; ++s1)
    for (int s2 = 0; s1 + s2 <= n; ++s2) {
      R2Candidate c;
      c.s1 = s1;
      c.s2 = s2;
      try {
        c.beta = k_root_min(q, n - s2, s1);
        const double nu = n - c.beta;
        if (s2 == 0) {
          c.alpha = 2.0 * (q - 1) * nu / q;
        } else {
          const double lo = k_root_min(q, nu, s2 + 1);
          const double hi = k_root_min(q, nu, s2);
          if (!(lo < hi)) throw RootBracketError("roots do not interlace");
          const long double target = -W(q, nu, s2, 0.0L);
          long double a = lo + 1e-9 * (hi - lo);
          long double b = hi - 1e-9 * (hi - lo);
          if (!(W(q, nu, s2, a) > target && W(q, nu, s2, b) < target))
            throw RootBracketError("W(alpha) = -W(0) not bracketed");
          for (int it = 0; it < 200; ++it) {
            const long double mid = 0.5L * (a + b);
            if (W(q, nu, s2, mid) > target) a = mid;
            else b = mid;
          }
          c.alpha = static_cast<double>(0.5L * (a + b));
        }
      } catch (const RootBracketError& e) {
        c.note = e.what();
        out.push_back(c);
        continue;
      }
      if (!(c.alpha > 0.0 && c.beta > 0.0)) {
        c.note = "degenerate root";
      } else if (c.alpha + 2.0 * c.beta > d) {
        c.note = "alpha + 2 beta exceeds d";
      } else {
        c.admissible = true;
        const double vs = shape_count(params, Shape({s1 - 1, s2})).get_d();
        const double a = c.alpha;
        const double b = c.beta;
        const double t = n - s2 - s1 + 1;
        c.value = 4.0 * (n - b - s2) * t * t * std::pow(q - 1.0, 3) * (a + 2.0 * b) * vs /
                  (std::pow(q, 3.0) * a * a * b * b);
      }
      out.push_back(c);
    }
  return out;
}

ApproxCertificate r2_certificate(const SpaceParams& params, int d, const R2Candidate& c) {
  const int n = params.n;
  const int q = params.q;
  const std::vector<double> a{c.alpha, c.beta};
  // region L: f2 = 0..s2, f1 = 0..phi(f2)
  std::set<Shape> L;
  for (int f2 = 0; f2 <= c.s2; ++f2) {
    int phi = 0;
    while (phi + 1 + f2 <= n && k_root_min(q, n - f2, phi + 1) > c.beta) ++phi;
    for (int f1 = 0; f1 <= phi; ++f1) L.insert(Shape({f1, f2}));
  }
  ShapeIndex idx(params);
  KrawtchoukTable K(params);
  std::vector<long double> Ka;
  std::vector<long double> vf;
  for (const auto& f : L) {
    Ka.push_back(K_multi_real(params, f, a));
    vf.push_back(shape_count(params, f).get_d());
  }
  const long double Pa = P_eval_real(params, a);
  std::vector<long double> F(idx.size());
  for (std::size_t e = 0; e < idx.size(); ++e) {
    long double U = 0;
    std::size_t k = 0;
    for (const auto& f : L) {
      U += Ka[k] * K.at(f, idx[e]).get_d() / vf[k];
      ++k;
    }
    F[e] = (P_eval(params, idx[e]).get_d() - Pa) * U * U;
  }
  ApproxCertificate cert{params, d, 0.0, {}};
  const long double total = params.ambient_size().get_d();
  for (std::size_t h = 0; h < idx.size(); ++h) {
    long double acc = 0;
    for (std::size_t e = 0; e < idx.size(); ++e) acc += F[e] * K(h, e).get_d() * K.valency(e).get_d();
    const double coeff = static_cast<double>(acc / total / K.valency(h).get_d());
    if (idx[h].is_zero()) cert.F0 = coeff;
    else cert.F[idx[h]] = coeff;
  }
  return cert;
}

BoundResult r2_bound(const SpaceParams& params, int d) {
  check_distance(params, d);
  if (params.r != 2) return inapplicable("r2", BoundSide::UpperCode, "needs r = 2");
  const auto cands = r2_candidates(params, d);
  const R2Candidate* best = nullptr;
  for (const auto& c : cands) {
    if (!c.admissible) continue;
    if (!best || c.value < best->value ||
        (c.value == best->value && (c.s1 + c.s2 < best->s1 + best->s2)))
      best = &c;
  }
  if (!best) return inapplicable("r2", BoundSide::UpperCode, "no admissible (s1, s2)");
  BoundResult out;
  out.name = "r2";
  out.side = BoundSide::UpperCode;
  out.applicable = true;
  out.approx = best->value;
  out.tolerance = 1e-9 * best->value;
  out.witness["s1"] = std::to_string(best->s1);
  out.witness["s2"] = std::to_string(best->s2);
  out.witness["alpha"] = fmt(best->alpha);
  out.witness["beta"] = fmt(best->beta);
  const auto chk = check_certificate_approx(r2_certificate(params, d, *best));
  out.witness["certificate"] = chk.accepted ? "accepted" : "rejected: " + chk.reason;
  out.witness["certificate_bound"] = fmt(chk.code_bound);
  return out;
}

BoundResult r2_ooa_bound(const SpaceParams& params, int t) {
  check_strength(params, t);
  auto code = r2_bound(params, t + 1);
  code.name = "r2_ooa";
  code.side = BoundSide::LowerOoa;
  code.witness["t"] = std::to_string(t);
  if (!code.applicable) return code;
  const double N = params.ambient_size().get_d();
  code.approx = N / *code.approx;
  code.tolerance = 1e-9 * *code.approx;
  return code;
}

BoundTable best_bounds(const SpaceParams& params, int d) {
  check_distance(params, d);
  BoundTable table;
  table.params = params;
  table.d = d;
  const int t = std::min(d - 1, params.length());
  auto& b = table.bounds;
  b.push_back(singleton(params, d));
  b.push_back(plotkin(params, d));
  b.push_back(hamming(params, d));
  b.push_back(bassalygo_elias(params, d));
  b.push_back(spectral_bound(params, d));
  b.push_back(params.r == 2 ? r2_bound(params, d) : inapplicable("r2", BoundSide::UpperCode, "needs r = 2"));
  b.push_back(gilbert(params, d));
  b.push_back(varshamov(params, d));
  b.push_back(rao(params, t));
  b.push_back(dual_plotkin_ooa(params, t));
  b.push_back(spectral_bound_ooa(params, t));
  b.push_back(params.r == 2 ? r2_ooa_bound(params, t) : inapplicable("r2_ooa", BoundSide::LowerOoa, "needs r = 2"));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].applicable) continue;
    const double v = b[i].as_double();
    auto pick = [&](std::optional<std::size_t>& slot, bool lower_is_better) {
      if (!slot) {
        slot = i;
        return;
      }
      const auto& cur = b[*slot];
      bool better = false;
      if (b[i].exact && cur.exact) better = lower_is_better ? *b[i].exact < *cur.exact : *b[i].exact > *cur.exact;
      else better = lower_is_better ? v < cur.as_double() : v > cur.as_double();
      if (better) slot = i;
    };
    switch (b[i].side) {
    case BoundSide::UpperCode: pick(table.best_upper, true); break;
    case BoundSide::LowerCode: pick(table.best_lower, false); break;
    case BoundSide::LowerOoa: pick(table.best_lower_ooa, false); break;
    }
  }
  return table;
}

} // namespace nrt
