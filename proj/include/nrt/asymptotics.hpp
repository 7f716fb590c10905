#pragma once

// Asymptotic rate-distance curves for ordered codes, OOAs and digital nets.
// Everything here is double precision.

#include <stdexcept>
#include <string>
#include <vector>

namespace nrt::asym {

struct CurvePoint {
  double delta = 0.0;
  double rate = 0.0;
  std::vector<double> meta; ///< parameter that produced the point
};

struct NetCurvePoint {
  double delta = 0.0;
  double rate = 0.0;
  double alpha = 0.0;
};

class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

double delta_crit(int q, int r);
double h_q(int q, double x);

/// Positive root of x r (1 + A(z)) = ((q-1)/q) sum_i i z^i, 0 < x < 1.
double z0_solve(int q, int r, double x);
/// H_{q,r}(x); H(0) = 0.
double H(int q, int r, double x);
/// Volume exponent: H below delta_crit, 1 above.
double volume_exponent(int q, int r, double x);

double gv_curve(int q, int r, double delta);
double hamming_curve(int q, int r, double delta);
double plotkin_curve(int q, int r, double delta);
double be_curve(int q, int r, double delta);

/// Diagonal of the limiting three-term operator. Reduced keeps only blocks
/// that stay at their own depth; Full adds the heavier blocks as well and is
/// the exact limit of lambda/n. Both are lower bounds on that limit.
enum class LambdaDiagonal { Reduced, Full };

/// Lambda(tau_1..tau_r).
double lambda_of(int q, int r, const std::vector<double>& taus, LambdaDiagonal diagonal = LambdaDiagonal::Reduced);

struct LambdaMax {
  double value = 0.0;
  std::vector<double> argmax;
};
/// Max of Lambda over tau_i >= 0, sum tau_i = tau.
LambdaMax lambda_asym(int q, int r, double tau, LambdaDiagonal diagonal = LambdaDiagonal::Reduced);

/// One point of the parametric LP curve; meta = (tau, argmax...).
CurvePoint lp_point(int q, int r, double tau);
/// tau at which delta(tau) is smallest; the useful branch is (0, tau_peak].
double lp_tau_peak(int q, int r);
/// Points for tau = tau_peak * k / N, k = 1..N, sorted by delta.
std::vector<CurvePoint> lp_curve(int q, int r, int points);
/// Point of the decreasing branch at delta; rate 1 when no tau reaches delta.
CurvePoint lp_point_at(int q, int r, double delta);
/// R_LP(delta) read off the decreasing branch; 1 when no tau reaches delta.
double lp_curve_at(int q, int r, double delta);

struct PhiResult {
  double value = 1.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  bool feasible = false;
};
/// Rate bound for r = 2; value 1 when the constraint set is empty.
PhiResult phi_r2(int q, double delta);

NetCurvePoint psi_nets(int q, double delta);
double nets_rao(int q, double delta);

/// Named curve at one delta: gv, hamming, plotkin, be, lp, lp2, psi, psirao.
CurvePoint evaluate_curve(const std::string& name, int q, int r, double delta);
/// delta_k = delta_max * k / (points - 1), k = 0..points-1.
std::vector<CurvePoint> curve_on_grid(const std::string& name, int q, int r, int points, double delta_max);
bool is_net_curve(const std::string& name);

} // namespace nrt::asym
