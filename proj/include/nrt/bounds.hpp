#pragma once

// Finite-length bounds on ordered codes and ordered orthogonal arrays.

#include "nrt/numeric.hpp"
#include "nrt/ordered_space.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nrt {

enum class BoundSide { UpperCode, LowerCode, LowerOoa };

std::string to_string(BoundSide side);

struct BoundResult {
  std::string name;
  BoundSide side = BoundSide::UpperCode;
  bool applicable = false;
  std::optional<Rational> exact;
  std::optional<double> approx;
  double tolerance = 0.0; ///< absolute error bar on approx
  std::map<std::string, std::string> witness;
  std::string note; ///< reason when inapplicable

  [[nodiscard]] double as_double() const;
  /// floor of the value; empty when inapplicable
  [[nodiscard]] std::optional<Integer> floor_value() const;
};

BoundResult singleton(const SpaceParams& params, int d);
BoundResult plotkin(const SpaceParams& params, int d);
BoundResult dual_plotkin_ooa(const SpaceParams& params, int t);
BoundResult hamming(const SpaceParams& params, int d);
BoundResult rao(const SpaceParams& params, int t);

/// dn / (dn - 2wn + w^2/(r delta_crit)) when d >= 2w - w^2/(nr delta_crit) and
/// the denominator is positive; empty otherwise.
std::optional<Rational> johnson(const SpaceParams& params, int d, int w);
BoundResult bassalygo_elias(const SpaceParams& params, int d);

/// ceil(q^{nr} / ball(d - 1)): a code of at least this size exists.
BoundResult gilbert(const SpaceParams& params, int d);
/// Least m >= t meeting every condition for tau = 1..t-1.
int varshamov_m(const SpaceParams& params, int t);
/// Existence of an [nr, nr - m] code of distance >= d, reported as q^{nr-m}.
BoundResult varshamov(const SpaceParams& params, int d);

struct SpectralScanOptions {
  double relative_tolerance = 1e-10;
  long max_iterations = 1'000'000;
};

BoundResult spectral_bound(const SpaceParams& params, int d, const SpectralScanOptions& options = {});
/// Lower bound on OOAs of strength t, from the same polynomial with d = t + 1.
BoundResult spectral_bound_ooa(const SpaceParams& params, int t, const SpectralScanOptions& options = {});

/// Floating-point dual polynomial F = F0 + sum F[h] K_h.
struct ApproxCertificate {
  SpaceParams params;
  int d = 1;
  double F0 = 0.0;
  std::map<Shape, double> F;
};

struct ApproxCheck {
  bool accepted = false;
  double scale = 0.0;         ///< max |F(e)|
  double min_coefficient = 0; ///< min over e != 0 of F_e
  double max_violation = 0;   ///< max F(e) over |e|' >= d
  double code_bound = 0;      ///< F(0)/F0
  std::string reason;
};

/// Accepts when F0 > 0, F_e >= -coeff_tol*scale and F(e) <= value_tol*scale for |e|' >= d.
ApproxCheck check_certificate_approx(const ApproxCertificate& cert, double value_tol = 1e-8,
                                     double coeff_tol = 1e-12);

struct R2Candidate {
  int s1 = 1;
  int s2 = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double value = 0.0;
  bool admissible = false;
  std::string note;
};

/// Every candidate s with s1 >= 1, s2 >= 0, s1 + s2 <= n, in lexicographic order.
std::vector<R2Candidate> r2_candidates(const SpaceParams& params, int d);

/// F(e) = (P(e) - P(a)) U_L(a, e)^2 expanded in the K basis, for one candidate.
ApproxCertificate r2_certificate(const SpaceParams& params, int d, const R2Candidate& c);

BoundResult r2_bound(const SpaceParams& params, int d);
BoundResult r2_ooa_bound(const SpaceParams& params, int t);

struct BoundTable {
  SpaceParams params;
  int d = 1;
  std::vector<BoundResult> bounds;
  std::optional<std::size_t> best_upper;      ///< index into bounds
  std::optional<std::size_t> best_lower;      ///< codes
  std::optional<std::size_t> best_lower_ooa;  ///< OOAs of strength d - 1
};

/// Every closed-form and spectral bound for (params, d). The exact LP is not
/// part of the table.
BoundTable best_bounds(const SpaceParams& params, int d);

} // namespace nrt
