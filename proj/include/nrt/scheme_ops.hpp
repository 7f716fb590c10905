#pragma once

// Operators of the ordered Hamming scheme: intersection numbers, the
// block-tridiagonal three-term matrices, the truncated multiplication
// operator S_kappa and its spectral radius, Christoffel-Darboux kernels.

#include "nrt/krawtchouk.hpp"
#include "nrt/numeric.hpp"
#include "nrt/ordered_space.hpp"

#include <Eigen/Dense>

#include <set>
#include <vector>

namespace nrt {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// p^h_{F_i,f}: number of z of shape f with shape(z - x) = F_i for a fixed x
/// of shape h.
Integer intersection_Fi(const SpaceParams& params, const Shape& f, int i, const Shape& h);

/// p^h_{f,g} by exhaustive count. Throws BudgetExceeded when q^{rn} > 2^12.
Integer intersection_general(const SpaceParams& params, const Shape& f, const Shape& g, const Shape& h);

/// L_i = (q^{r-i+1} - 1) / (q^r (q-1))
Rational L_coefficient(int q, int r, int i);

/// P(e) = delta_crit * r * n - |e|'
Rational P_eval(const SpaceParams& params, const Shape& e);
double P_eval_real(const SpaceParams& params, const std::vector<double>& x);

struct ThreeTermBlocks {
  int kappa = 0;
  std::vector<Shape> lower;  ///< |h| = kappa - 1
  std::vector<Shape> middle; ///< |f| = kappa
  std::vector<Shape> upper;  ///< |h| = kappa + 1
  RationalMatrix a;          ///< middle x upper
  RationalMatrix b;          ///< middle x middle
  RationalMatrix c;          ///< middle x lower
  Eigen::MatrixXd A;         ///< orthonormal-basis versions
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;
};

/// Throws std::out_of_range when kappa > n.
ThreeTermBlocks build_blocks(const SpaceParams& params, int kappa);

/// Matrix of multiplication by P in the {K_f} basis over all of Delta_{r,n}:
/// P K_f = sum_h S[f][h] K_h. Indexed like ShapeIndex.
RationalMatrix multiplication_matrix(const SpaceParams& params);

/// Orthonormal-basis matrix of S_kappa, shapes ordered by length then
/// lexicographically.
struct OperatorS {
  int kappa = 0;
  std::vector<Shape> basis;
  Eigen::MatrixXd matrix;
};

OperatorS build_operator(const SpaceParams& params, int kappa);

struct SpectralOptions {
  double relative_tolerance = 1e-10;
  long max_iterations = 1'000'000;
};

struct SpectralEnclosure {
  double lower = 0.0;
  double upper = 0.0;
  double rayleigh = 0.0;
  long iterations = 0;
  Eigen::VectorXd vector; ///< final positive iterate
};

class SpectralNonConvergence : public std::runtime_error {
public:
  SpectralNonConvergence(const std::string& what, SpectralEnclosure partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  [[nodiscard]] const SpectralEnclosure& partial() const { return partial_; }

private:
  SpectralEnclosure partial_;
};

/// Perron root of the nonnegative symmetric operator matrix: shifted power
/// iteration from the all-ones vector with Collatz-Wielandt bounds.
SpectralEnclosure spectral_radius(const OperatorS& op, const SpectralOptions& options = {});

/// U_L(a, e) = sum_{f in L} K_f(a) K_f(e) / v_f
Rational cd_kernel(const SpaceParams& params, const std::set<Shape>& L, const Shape& a, const Shape& e);

/// Both sides of the Christoffel-Darboux identity for L = {|f| <= kappa}.
struct CdSides {
  Rational lhs;
  Rational rhs;
};
CdSides cd_sides(const SpaceParams& params, int kappa, const Shape& a, const Shape& e);
bool cd_check(const SpaceParams& params, int kappa, const Shape& a, const Shape& e);

/// Same identity for an arbitrary region L, using the full multiplication matrix.
CdSides cd_sides_region(const SpaceParams& params, const std::set<Shape>& L, const Shape& a, const Shape& e);

} // namespace nrt
