#include "nrt/delsarte_lp.hpp"

#include "nrt/scheme_ops.hpp"

#include <stdexcept>

namespace nrt {

Rational DualCertificate::evaluate(const Shape& e) const {
  Rational total = F0;
  for (const auto& [f, c] : F)
    if (c != 0) total += c * Rational(K_multi(params, f, e));
  total.canonicalize();
  return total;
}

CertificateCheck check_certificate(const DualCertificate& cert) {
  CertificateCheck out;
  cert.params.validate();
  if (cert.F0 <= 0) {
    out.reason = "F0 must be positive";
    return out;
  }
  for (const auto& [f, c] : cert.F) {
    if (!f.valid_for(cert.params)) throw std::invalid_argument("certificate shape outside Delta: " + f.key());
    if (f.is_zero()) {
      out.reason = "zero shape listed among F_e";
      out.witness = f;
      return out;
    }
    if (c < 0) {
      out.reason = "negative coefficient F_e";
      out.witness = f;
      return out;
    }
  }
  KrawtchoukTable K(cert.params);
  const auto& idx = K.shapes();
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  for (const auto& [f, c] : cert.F)
    if (c != 0) coeffs.emplace_back(idx.index_of(f), c);
  auto value_at = [&](std::size_t e) {
    Rational v = cert.F0;
    for (const auto& [f, c] : coeffs) v += c * Rational(K(f, e));
    return v;
  };
  for (std::size_t e = 0; e < idx.size(); ++e) {
    if (idx[e].weight() < cert.d || idx[e].is_zero()) continue;
    if (value_at(e) > 0) {
      out.reason = "F(e) > 0 at a shape with |e|' >= d";
      out.witness = idx[e];
      return out;
    }
  }
  const Rational at0 = value_at(idx.index_of(Shape::zero(cert.params.r)));
  out.accepted = true;
  out.code_bound = at0 / cert.F0;
  out.ooa_bound = Rational(cert.params.ambient_size()) * cert.F0 / at0;
  out.code_bound.canonicalize();
  out.ooa_bound.canonicalize();
  return out;
}

CodeLpResult solve_code_lp(const SpaceParams& params, int d) {
  params.validate();
  if (d < 1 || d > params.length() + 1) throw std::out_of_range("solve_code_lp: need 1 <= d <= rn + 1");
  KrawtchoukTable K(params);
  const auto& idx = K.shapes();
  std::vector<std::size_t> vars;
  for (std::size_t e = 0; e < idx.size(); ++e)
    if (!idx[e].is_zero() && idx[e].weight() >= d) vars.push_back(e);

  LinearProgram lp;
  lp.objective.assign(vars.size(), Rational(1));
  for (std::size_t f = 0; f < idx.size(); ++f) {
    std::vector<Rational> row(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) row[j] = -Rational(K(f, vars[j]));
    lp.add_row(std::move(row), Sense::LessEqual, Rational(K.valency(f)));
  }
  const auto sol = simplex_solve(lp);
  if (sol.status != LpStatus::Optimal) throw LpFailure("program I is not optimal; constraint assembly is wrong");

  CodeLpResult out;
  out.pivots = sol.pivots;
  out.bound = 1 + sol.value;
  out.distribution[Shape::zero(params.r)] = 1;
  for (std::size_t j = 0; j < vars.size(); ++j)
    if (sol.x[j] != 0) out.distribution[idx[vars[j]]] = sol.x[j];
  out.certificate.params = params;
  out.certificate.d = d;
  out.certificate.F0 = 1;
  for (std::size_t f = 0; f < idx.size(); ++f) {
    if (sol.duals[f] == 0) continue;
    if (idx[f].is_zero()) out.certificate.F0 += sol.duals[f];
    else out.certificate.F[idx[f]] = sol.duals[f];
  }
  return out;
}

OoaLpResult solve_ooa_lp(const SpaceParams& params, int t) {
  params.validate();
  if (t < 0 || t > params.length()) throw std::out_of_range("solve_ooa_lp: need 0 <= t <= rn");
  KrawtchoukTable K(params);
  const auto& idx = K.shapes();
  std::vector<std::size_t> vars;
  for (std::size_t e = 0; e < idx.size(); ++e)
    if (!idx[e].is_zero()) vars.push_back(e);

  LinearProgram lp;
  lp.objective.assign(vars.size(), Rational(-1));
  for (std::size_t f = 0; f < idx.size(); ++f) {
    if (idx[f].is_zero()) continue;
    std::vector<Rational> row(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) row[j] = Rational(K(f, vars[j]));
    const Sense sense = idx[f].weight() <= t ? Sense::Equal : Sense::GreaterEqual;
    lp.add_row(std::move(row), sense, -Rational(K.valency(f)));
  }
  const auto sol = simplex_solve(lp);
  if (sol.status != LpStatus::Optimal) throw LpFailure("program II is not optimal; constraint assembly is wrong");
  OoaLpResult out;
  out.pivots = sol.pivots;
  out.bound = 1 - sol.value;
  out.distribution[Shape::zero(params.r)] = 1;
  for (std::size_t j = 0; j < vars.size(); ++j)
    if (sol.x[j] != 0) out.distribution[idx[vars[j]]] = sol.x[j];
  return out;
}

DualCertificate plotkin_certificate(const SpaceParams& params, int d) {
  params.validate();
  const Rational threshold = delta_crit(params.q, params.r) * params.length();
  if (Rational(d) <= threshold) throw std::invalid_argument("plotkin_certificate: need d > nr delta_crit");
  DualCertificate cert{params, d, Rational(d) - threshold, {}};
  for (int i = 1; i <= params.r; ++i) cert.F[Shape::unit(params.r, i)] = L_coefficient(params.q, params.r, i);
  return cert;
}

DualCertificate universal_certificate(const SpaceParams& params, int d) {
  DualCertificate cert{params, d, Rational(1), {}};
  for (const auto& f : enumerate_shapes(params.r, params.n))
    if (!f.is_zero()) cert.F[f] = 1;
  return cert;
}

} // namespace nrt
