#pragma once

// Univariate Krawtchouk polynomials k_s(nu, x) (real or rational arguments)
// and the multivariate family K_f(e) that gives the eigenvalues of the
// ordered Hamming scheme.

#include "nrt/numeric.hpp"
#include "nrt/ordered_space.hpp"

#include <vector>

namespace nrt {

/// k_s(nu, x) = sum_l (-1)^l (q-1)^(s-l) C(x, l) C(nu - x, s - l), exact.
Rational k_uni(int q, const Rational& nu, int s, const Rational& x);
/// Same sum in floating point; nu and x may be any reals.
double k_uni(int q, double nu, int s, double x);
long double k_uni_ld(int q, long double nu, int s, long double x);

/// k_s(nu,x) == k_s(nu-1,x) + (q-1) k_{s-1}(nu-1,x), evaluated exactly.
bool uni_recurrence_check(int q, const Rational& nu, int s, const Rational& x);

/// K_f(e) through the product of univariate polynomials. Exact.
Integer K_multi(const SpaceParams& params, const Shape& f, const Shape& e);

/// K_f evaluated at a real point x = (x_1..x_r); x_0 is taken as n - sum x_i.
double K_multi_real(const SpaceParams& params, const Shape& f, const std::vector<double>& x);

/// Vector whose left-reading shape is e: one 1 per contributing block.
OrderedVector canonical_bar_representative(const SpaceParams& params, const Shape& e);

struct FourierValue {
  Integer value;          ///< rounded integer
  double imag_magnitude;  ///< |Im| of the complex sum (0 for q = 2)
};

/// sum over z of shape f of omega^(x.z), with shape_bar(x) = e.
/// Throws BudgetExceeded when q^{rn} > 2^16.
FourierValue K_fourier_oracle(const SpaceParams& params, const Shape& f, const Shape& e);
FourierValue K_fourier_oracle(const SpaceParams& params, const Shape& f, const OrderedVector& x);

/// Affine form c + sum_i a_i x_i over the variables x_1..x_r.
struct AffineForm {
  Integer constant;
  std::vector<Integer> coeffs; ///< coeffs[i-1] multiplies x_i

  [[nodiscard]] Integer evaluate(const Shape& e) const;
};

/// K_{F_i} as an affine form, 1 <= i <= r.
AffineForm linear_K(const SpaceParams& params, int i);

/// Real-valued function on Delta_{r,n}, values in lexicographic shape order.
struct DiscreteFunction {
  SpaceParams params;
  std::vector<Rational> values;

  static DiscreteFunction constant(const SpaceParams& params, const Rational& c);
  static DiscreteFunction coordinate(const SpaceParams& params, int i);
  static DiscreteFunction krawtchouk(const SpaceParams& params, const Shape& f);
};

/// <u1,u2> = sum_e u1(e) u2(e) v_e / q^{nr}.
Rational inner_product(const DiscreteFunction& u1, const DiscreteFunction& u2);

/// Table of every K_f(e) for one parameter set; rows f, columns e, both in
/// lexicographic order. Immutable after construction.
class KrawtchoukTable {
public:
  explicit KrawtchoukTable(const SpaceParams& params);

  [[nodiscard]] const ShapeIndex& shapes() const { return index_; }
  [[nodiscard]] const SpaceParams& params() const { return index_.params(); }
  [[nodiscard]] std::size_t size() const { return index_.size(); }
  [[nodiscard]] const Integer& operator()(std::size_t f, std::size_t e) const {
    return values_[f * index_.size() + e];
  }
  [[nodiscard]] const Integer& at(const Shape& f, const Shape& e) const {
    return (*this)(index_.index_of(f), index_.index_of(e));
  }
  /// v_f for each shape.
  [[nodiscard]] const Integer& valency(std::size_t f) const { return valency_[f]; }

private:
  ShapeIndex index_;
  std::vector<Integer> values_;
  std::vector<Integer> valency_;
};

class RootBracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Smallest root of k_s(nu, .): grid scan over (0, nu] with ceil(nu)*8 cells,
/// then 60 bisection steps. Throws RootBracketError if no sign change is seen.
double k_root_min(int q, double nu, int s);

/// Limit of x_1(n, yn)/n.
double gamma_limit(int q, double y);

} // namespace nrt
