#include "nrt/krawtchouk.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace nrt {

Rational k_uni(int q, const Rational& nu, int s, const Rational& x) {
  if (s < 0) throw std::invalid_argument("degree must be nonnegative");
  Rational total = 0;
  for (int l = 0; l <= s; ++l) {
    Rational term = binomial_real(x, l) * binomial_real(nu - x, s - l) *
                    Rational(ipow(q - 1, static_cast<unsigned long>(s - l)));
    if (l % 2) total -= term;
    else total += term;
  }
  total.canonicalize();
  return total;
}

long double k_uni_ld(int q, long double nu, int s, long double x) {
  if (s < 0) throw std::invalid_argument("degree must be nonnegative");
  // C(x, l) and C(nu - x, s - l) built incrementally.
  std::vector<long double> bx(static_cast<std::size_t>(s + 1));
  std::vector<long double> by(static_cast<std::size_t>(s + 1));
  bx[0] = by[0] = 1.0L;
  for (int l = 1; l <= s; ++l) {
    bx[static_cast<std::size_t>(l)] = bx[static_cast<std::size_t>(l - 1)] * (x - (l - 1)) / l;
    by[static_cast<std::size_t>(l)] = by[static_cast<std::size_t>(l - 1)] * (nu - x - (l - 1)) / l;
  }
  long double total = 0.0L;
  for (int l = 0; l <= s; ++l) {
    long double term = bx[static_cast<std::size_t>(l)] * by[static_cast<std::size_t>(s - l)] *
                       std::pow(static_cast<long double>(q - 1), s - l);
    total += (l % 2) ? -term : term;
  }
  return total;
}

double k_uni(int q, double nu, int s, double x) {
  return static_cast<double>(k_uni_ld(q, nu, s, x));
}

bool uni_recurrence_check(int q, const Rational& nu, int s, const Rational& x) {
  if (s < 1) throw std::invalid_argument("recurrence needs s >= 1");
  return k_uni(q, nu, s, x) == k_uni(q, nu - 1, s, x) + (q - 1) * k_uni(q, nu - 1, s - 1, x);
}

Integer K_multi(const SpaceParams& params, const Shape& f, const Shape& e) {
  params.validate();
  if (!f.valid_for(params) || !e.valid_for(params)) throw std::invalid_argument("K_multi: invalid shape");
  const int r = params.r;
  // x_j for j = 0..r with x_0 = n - |e|
  std::vector<int> x(static_cast<std::size_t>(r + 1));
  x[0] = e.zeros(params.n);
  for (int j = 1; j <= r; ++j) x[static_cast<std::size_t>(j)] = e[j];

  Rational product(ipow(params.q, static_cast<unsigned long>(f.weight() - f.length())));
  for (int i = 1; i <= r; ++i) {
    int ni = 0;
    for (int j = 0; j <= r - i + 1; ++j) ni += x[static_cast<std::size_t>(j)];
    for (int j = i + 1; j <= r; ++j) ni -= f[j];
    product *= k_uni(params.q, Rational(ni), f[i], Rational(x[static_cast<std::size_t>(r - i + 1)]));
    if (product == 0) return 0;
  }
  if (!is_integer(product)) throw std::logic_error("K_multi produced a non-integer");
  return product.get_num();
}

double K_multi_real(const SpaceParams& params, const Shape& f, const std::vector<double>& x_in) {
  const int r = params.r;
  if (static_cast<int>(x_in.size()) != r) throw std::invalid_argument("K_multi_real: need r coordinates");
  std::vector<long double> x(static_cast<std::size_t>(r + 1));
  long double sum = 0;
  for (int j = 1; j <= r; ++j) {
    x[static_cast<std::size_t>(j)] = x_in[static_cast<std::size_t>(j - 1)];
    sum += x[static_cast<std::size_t>(j)];
  }
  x[0] = params.n - sum;
  long double product = std::pow(static_cast<long double>(params.q), f.weight() - f.length());
  for (int i = 1; i <= r; ++i) {
    long double ni = 0;
    for (int j = 0; j <= r - i + 1; ++j) ni += x[static_cast<std::size_t>(j)];
    for (int j = i + 1; j <= r; ++j) ni -= f[j];
    product *= k_uni_ld(params.q, ni, f[i], x[static_cast<std::size_t>(r - i + 1)]);
  }
  return static_cast<double>(product);
}

OrderedVector canonical_bar_representative(const SpaceParams& params, const Shape& e) {
  if (!e.valid_for(params)) throw std::invalid_argument("invalid shape");
  std::vector<int> sym(static_cast<std::size_t>(params.length()), 0);
  int block = 0;
  for (int j = 1; j <= params.r; ++j) {
    // leading nonzero at in-block position r - j + 1
    for (int c = 0; c < e[j]; ++c, ++block)
      sym[static_cast<std::size_t>(block * params.r + (params.r - j))] = 1;
  }
  return OrderedVector(params, std::move(sym));
}

FourierValue K_fourier_oracle(const SpaceParams& params, const Shape& f, const OrderedVector& x) {
  params.validate();
  if (!f.valid_for(params)) throw std::invalid_argument("invalid shape");
  Integer total = params.ambient_size();
  if (total > (std::uint64_t{1} << 16)) throw BudgetExceeded("Fourier oracle capped at 2^16 summands");
  const std::uint64_t count = total.get_ui();
  std::vector<std::uint64_t> residues(static_cast<std::size_t>(params.q), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto z = OrderedVector::from_index(params, idx);
    if (!(shape_of(z) == f)) continue;
    long dot = 0;
    for (std::size_t j = 0; j < z.symbols().size(); ++j) dot += x.symbols()[j] * z.symbols()[j];
    ++residues[static_cast<std::size_t>(dot % params.q)];
  }
  FourierValue out;
  if (params.q == 2) {
    out.value = Integer(static_cast<unsigned long>(residues[0])) - Integer(static_cast<unsigned long>(residues[1]));
    out.imag_magnitude = 0.0;
    return out;
  }
  std::complex<double> sum = 0.0;
  for (int k = 0; k < params.q; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / params.q;
    sum += static_cast<double>(residues[static_cast<std::size_t>(k)]) * std::polar(1.0, angle);
  }
  out.value = Integer(static_cast<long>(std::lround(sum.real())));
  out.imag_magnitude = std::abs(sum.imag());
  return out;
}

FourierValue K_fourier_oracle(const SpaceParams& params, const Shape& f, const Shape& e) {
  return K_fourier_oracle(params, f, canonical_bar_representative(params, e));
}

Integer AffineForm::evaluate(const Shape& e) const {
  Integer out = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * e.parts()[i];
  return out;
}

AffineForm linear_K(const SpaceParams& params, int i) {
  params.validate();
  if (i < 1 || i > params.r) throw std::out_of_range("linear_K: index out of range");
  const int r = params.r;
  const Integer lead = ipow(params.q, static_cast<unsigned long>(i - 1)) * (params.q - 1);
  AffineForm form;
  form.constant = lead * params.n;
  form.coeffs.assign(static_cast<std::size_t>(r), 0);
  // - lead * (x_r + ... + x_{r-i+2})
  for (int j = r - i + 2; j <= r; ++j) form.coeffs[static_cast<std::size_t>(j - 1)] -= lead;
  form.coeffs[static_cast<std::size_t>(r - i)] -= ipow(params.q, static_cast<unsigned long>(i));
  return form;
}

DiscreteFunction DiscreteFunction::constant(const SpaceParams& params, const Rational& c) {
  ShapeIndex idx(params);
  return {params, std::vector<Rational>(idx.size(), c)};
}

DiscreteFunction DiscreteFunction::coordinate(const SpaceParams& params, int i) {
  ShapeIndex idx(params);
  DiscreteFunction out{params, {}};
  for (const auto& e : idx.shapes()) out.values.emplace_back(e[i]);
  return out;
}

DiscreteFunction DiscreteFunction::krawtchouk(const SpaceParams& params, const Shape& f) {
  ShapeIndex idx(params);
  DiscreteFunction out{params, {}};
  for (const auto& e : idx.shapes()) out.values.emplace_back(K_multi(params, f, e));
  return out;
}

Rational inner_product(const DiscreteFunction& u1, const DiscreteFunction& u2) {
  if (!(u1.params == u2.params)) throw std::invalid_argument("inner_product: parameter mismatch");
  ShapeIndex idx(u1.params);
  if (u1.values.size() != idx.size() || u2.values.size() != idx.size())
    throw std::invalid_argument("inner_product: domain mismatch");
  Rational total = 0;
  for (std::size_t k = 0; k < idx.size(); ++k)
    total += u1.values[k] * u2.values[k] * Rational(shape_count(u1.params, idx[k]));
  total /= Rational(u1.params.ambient_size());
  total.canonicalize();
  return total;
}

KrawtchoukTable::KrawtchoukTable(const SpaceParams& params) : index_(params) {
  const std::size_t m = index_.size();
  values_.resize(m * m);
  valency_.resize(m);
  for (std::size_t f = 0; f < m; ++f) {
    valency_[f] = shape_count(params, index_[f]);
    for (std::size_t e = 0; e < m; ++e) values_[f * m + e] = K_multi(params, index_[f], index_[e]);
  }
}

double k_root_min(int q, double nu, int s) {
  if (s < 1) throw std::invalid_argument("k_root_min: degree must be at least 1");
  if (!(nu > 0.0)) throw std::invalid_argument("k_root_min: nu must be positive");
  const long double lnu = nu;
  const int cells = static_cast<int>(std::ceil(nu)) * 8;
  auto k = [&](long double x) { return k_uni_ld(q, lnu, s, x); };

  long double lo = 0.0L;
  long double flo = k(lo);
  if (flo == 0.0L) return 0.0;
  for (int j = 1; j <= cells; ++j) {
    long double hi = lnu * j / cells;
    const long double fhi = k(hi);
    if (fhi == 0.0L) return static_cast<double>(hi);
    if ((flo > 0) != (fhi > 0)) {
      for (int it = 0; it < 60; ++it) {
        const long double mid = 0.5L * (lo + hi);
        const long double fmid = k(mid);
        if (fmid == 0.0L) return static_cast<double>(mid);
        if ((fmid > 0) == (flo > 0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      return static_cast<double>(0.5L * (lo + hi));
    }
    lo = hi;
    flo = fhi;
  }
  throw RootBracketError("k_root_min: no sign change of k_" + std::to_string(s) + " on (0, " +
                         std::to_string(nu) + "]");
}

double gamma_limit(int q, double y) {
  const double qd = q;
  const double prod = std::max(0.0, (qd - 1.0) * y * (1.0 - y));
  return (qd - 1.0) / qd - (qd - 2.0) / qd * y - 2.0 / qd * std::sqrt(prod);
}

} // namespace nrt
