#pragma once

// Delsarte linear programs for ordered codes (program I) and ordered
// orthogonal arrays (program II), and the dual polynomial certificates.

#include "nrt/krawtchouk.hpp"
#include "nrt/numeric.hpp"
#include "nrt/ordered_space.hpp"
#include "nrt/simplex.hpp"

#include <map>
#include <optional>
#include <string>

namespace nrt {

/// F(x) = F0 + sum_{e != 0} F[e] K_e(x), claimed valid for distance d.
struct DualCertificate {
  SpaceParams params;
  int d = 1;
  Rational F0;
  std::map<Shape, Rational> F; ///< zero shape never stored

  /// F(e) exactly.
  [[nodiscard]] Rational evaluate(const Shape& e) const;
};

struct CertificateCheck {
  bool accepted = false;
  std::string reason;           ///< empty when accepted
  std::optional<Shape> witness; ///< offending shape
  Rational code_bound;          ///< F(0)/F0
  Rational ooa_bound;           ///< q^{nr} F0 / F(0)
};

CertificateCheck check_certificate(const DualCertificate& cert);

struct CodeLpResult {
  Rational bound; ///< 1 + max sum_{e != 0} A_e
  std::map<Shape, Rational> distribution;
  DualCertificate certificate;
  long pivots = 0;
};

/// Program I. Requires 1 <= d <= rn + 1.
CodeLpResult solve_code_lp(const SpaceParams& params, int d);

struct OoaLpResult {
  Rational bound; ///< 1 + min sum_{e != 0} A_e
  std::map<Shape, Rational> distribution;
  long pivots = 0;
};

/// Program II. Requires 0 <= t <= rn.
OoaLpResult solve_ooa_lp(const SpaceParams& params, int t);

/// Affine certificate (d - nr delta_crit) + sum_i L_i K_{F_i}. Requires d > nr delta_crit.
DualCertificate plotkin_certificate(const SpaceParams& params, int d);

/// sum_f K_f = q^{rn} [x = 0]; valid for every d.
DualCertificate universal_certificate(const SpaceParams& params, int d);

class LpFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace nrt
