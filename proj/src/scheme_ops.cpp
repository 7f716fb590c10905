#include "nrt/scheme_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace nrt {

namespace {

/// Difference h - f as a sparse list of (depth, delta) pairs.
std::vector<std::pair<int, int>> difference(const Shape& f, const Shape& h) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= f.depth(); ++j)
    if (h[j] != f[j]) out.emplace_back(j, h[j] - f[j]);
  return out;
}

} // namespace

Integer intersection_Fi(const SpaceParams& params, const Shape& f, int i, const Shape& h) {
  params.validate();
  if (i < 1 || i > params.r) throw std::out_of_range("intersection_Fi: depth out of range");
  if (!f.valid_for(params) || !h.valid_for(params)) throw std::invalid_argument("intersection_Fi: invalid shape");
  const int q = params.q;
  const Integer qi1 = ipow(q, static_cast<unsigned long>(i - 1));
  const auto diff = difference(f, h);
  const int dl = h.length() - f.length();

  if (dl == 1) {
    // one weight-i block of x is cancelled
    if (diff.size() == 1 && diff[0] == std::pair{i, 1}) return f[i] + 1;
    return 0;
  }
  if (dl == -1) {
    // a weight-i block is placed in one of the zero blocks of x
    if (diff.size() == 1 && diff[0] == std::pair{i, -1})
      return Integer(params.n - f.length() + 1) * qi1 * (q - 1);
    return 0;
  }
  if (dl != 0) return 0;

  if (diff.empty()) {
    // Weight-i blocks of x that stay at weight i, plus heavier blocks of x,
    // which absorb any weight-i increment unchanged.
    int heavier = 0;
    for (int j = i + 1; j <= params.r; ++j) heavier += f[j];
    return Integer(f[i]) * (q - 2) * qi1 + Integer(heavier) * (q - 1) * qi1;
  }
  if (diff.size() != 2) return 0;
  // h = f + e_k - e_i or h = f - e_k + e_i with k < i
  const auto [j1, d1] = diff[0];
  const auto [j2, d2] = diff[1];
  if (j2 != i || j1 >= i) return 0;
  const int k = j1;
  if (d1 == 1 && d2 == -1) return Integer(f[k] + 1) * (q - 1) * qi1;
  if (d1 == -1 && d2 == 1)
    return Integer(f[i] + 1) * (q - 1) * ipow(q, static_cast<unsigned long>(k - 1));
  return 0;
}

namespace {

OrderedVector canonical_right_representative(const SpaceParams& params, const Shape& h) {
  std::vector<int> sym(static_cast<std::size_t>(params.length()), 0);
  int block = 0;
  for (int j = 1; j <= params.r; ++j)
    for (int c = 0; c < h[j]; ++c, ++block) sym[static_cast<std::size_t>(block * params.r + (j - 1))] = 1;
  return OrderedVector(params, std::move(sym));
}

} // namespace

Integer intersection_general(const SpaceParams& params, const Shape& f, const Shape& g, const Shape& h) {
  params.validate();
  if (!f.valid_for(params) || !g.valid_for(params) || !h.valid_for(params))
    throw std::invalid_argument("intersection_general: invalid shape");
  Integer total = params.ambient_size();
  if (total > (std::uint64_t{1} << 12)) throw BudgetExceeded("intersection_general capped at 2^12 vectors");
  const auto x = canonical_right_representative(params, h);
  Integer count = 0;
  for (std::uint64_t idx = 0; idx < total.get_ui(); ++idx) {
    auto z = OrderedVector::from_index(params, idx);
    if (shape_of(z) == g && shape_of(z - x) == f) ++count;
  }
  return count;
}

Rational L_coefficient(int q, int r, int i) {
  if (i < 1 || i > r) throw std::out_of_range("L_coefficient: index out of range");
  Rational out(ipow(q, static_cast<unsigned long>(r - i + 1)) - 1,
               ipow(q, static_cast<unsigned long>(r)) * (q - 1));
  out.canonicalize();
  return out;
}

Rational P_eval(const SpaceParams& params, const Shape& e) {
  Rational out = delta_crit(params.q, params.r) * params.r * params.n - e.weight();
  out.canonicalize();
  return out;
}

double P_eval_real(const SpaceParams& params, const std::vector<double>& x) {
  double w = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) w += static_cast<double>(i + 1) * x[i];
  return Rational(delta_crit(params.q, params.r) * params.r * params.n).get_d() - w;
}

namespace {

Rational multiplier(const SpaceParams& params, const std::vector<Rational>& L, const Shape& f, const Shape& h) {
  Rational total = 0;
  for (int i = 1; i <= params.r; ++i) {
    Integer p = intersection_Fi(params, f, i, h);
    if (p != 0) total += L[static_cast<std::size_t>(i - 1)] * Rational(p);
  }
  total.canonicalize();
  return total;
}

std::vector<Rational> all_L(const SpaceParams& params) {
  std::vector<Rational> L;
  for (int i = 1; i <= params.r; ++i) L.push_back(L_coefficient(params.q, params.r, i));
  return L;
}

RationalMatrix block(const SpaceParams& params, const std::vector<Rational>& L, const std::vector<Shape>& rows,
                     const std::vector<Shape>& cols) {
  RationalMatrix m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m[a][b] = multiplier(params, L, rows[a], cols[b]);
  return m;
}

class ValencyCache {
public:
  explicit ValencyCache(const SpaceParams& params) : params_(params) {}
  const Integer& operator()(const Shape& s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) it = cache_.emplace(s, shape_count(params_, s)).first;
    return it->second;
  }

private:
  SpaceParams params_;
  std::map<Shape, Integer> cache_;
};

Eigen::MatrixXd normalize(const RationalMatrix& raw, const std::vector<Shape>& rows, const std::vector<Shape>& cols,
                          ValencyCache& v) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (raw[a][b] == 0) continue;
      Rational ratio(v(cols[b]), v(rows[a]));
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          raw[a][b].get_d() * std::sqrt(ratio.get_d());
    }
  return out;
}

} // namespace

ThreeTermBlocks build_blocks(const SpaceParams& params, int kappa) {
  params.validate();
  if (kappa < 0 || kappa > params.n) throw std::out_of_range("build_blocks: need 0 <= kappa <= n");
  const auto L = all_L(params);
  ThreeTermBlocks out;
  out.kappa = kappa;
  if (kappa >= 1) out.lower = shapes_of_length(params.r, kappa - 1);
  out.middle = shapes_of_length(params.r, kappa);
  if (kappa + 1 <= params.n) out.upper = shapes_of_length(params.r, kappa + 1);
  out.a = block(params, L, out.middle, out.upper);
  out.b = block(params, L, out.middle, out.middle);
  out.c = block(params, L, out.middle, out.lower);
  ValencyCache v(params);
  out.A = normalize(out.a, out.middle, out.upper, v);
  out.B = normalize(out.b, out.middle, out.middle, v);
  out.C = normalize(out.c, out.middle, out.lower, v);
  return out;
}

RationalMatrix multiplication_matrix(const SpaceParams& params) {
  ShapeIndex idx(params);
  return block(params, all_L(params), idx.shapes(), idx.shapes());
}

OperatorS build_operator(const SpaceParams& params, int kappa) {
  params.validate();
  if (kappa < 0 || kappa > params.n) throw std::out_of_range("build_operator: need 0 <= kappa <= n");
  OperatorS op;
  op.kappa = kappa;
  std::vector<Eigen::Index> offset;
  std::vector<ThreeTermBlocks> blocks;
  for (int mu = 0; mu <= kappa; ++mu) {
    offset.push_back(static_cast<Eigen::Index>(op.basis.size()));
    blocks.push_back(build_blocks(params, mu));
    for (const auto& s : blocks.back().middle) op.basis.push_back(s);
  }
  const auto dim = static_cast<Eigen::Index>(op.basis.size());
  op.matrix = Eigen::MatrixXd::Zero(dim, dim);
  for (int mu = 0; mu <= kappa; ++mu) {
    const auto& blk = blocks[static_cast<std::size_t>(mu)];
    const auto o = offset[static_cast<std::size_t>(mu)];
    op.matrix.block(o, o, blk.B.rows(), blk.B.cols()) = blk.B;
    if (mu < kappa) {
      const auto o1 = offset[static_cast<std::size_t>(mu + 1)];
      op.matrix.block(o, o1, blk.A.rows(), blk.A.cols()) = blk.A;
      op.matrix.block(o1, o, blk.A.cols(), blk.A.rows()) = blk.A.transpose();
    }
  }
  return op;
}

SpectralEnclosure spectral_radius(const OperatorS& op, const SpectralOptions& options) {
  const Eigen::Index dim = op.matrix.rows();
  SpectralEnclosure out;
  if (dim == 0) throw std::invalid_argument("spectral_radius: empty operator");

  // sparse row lists; the operator is block tridiagonal with few nonzeros per row
  std::vector<std::vector<std::pair<Eigen::Index, double>>> rows(static_cast<std::size_t>(dim));
  double max_row_sum = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double v = op.matrix(i, j);
      if (v < 0.0) throw std::invalid_argument("spectral_radius: operator has a negative entry");
      if (v != 0.0) {
        rows[static_cast<std::size_t>(i)].emplace_back(j, v);
        sum += v;
      }
    }
    max_row_sum = std::max(max_row_sum, sum);
  }
  const double shift = max_row_sum + 1.0;

  Eigen::VectorXd x = Eigen::VectorXd::Ones(dim);
  Eigen::VectorXd sx(dim);
  for (long it = 1; it <= options.max_iterations; ++it) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (const auto& [j, v] : rows[static_cast<std::size_t>(i)]) acc += v * x(j);
      sx(i) = acc;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double ratio = sx(i) / x(i);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double rq = x.dot(sx) / x.squaredNorm();
    // Rayleigh quotient bounds the top eigenvalue from below; Collatz-Wielandt
    // brackets the Perron root of the nonnegative matrix.
    constexpr double rounding = 8.0 * std::numeric_limits<double>::epsilon();
    out.rayleigh = rq;
    out.lower = std::max(lo, rq) - rounding * std::max(1.0, std::abs(rq)) * static_cast<double>(dim);
    out.upper = hi + rounding * std::max(1.0, std::abs(hi)) * static_cast<double>(dim);
    out.iterations = it;
    if (out.upper - out.lower <= options.relative_tolerance * std::max(1.0, out.upper)) {
      out.vector = x / x.maxCoeff();
      return out;
    }
    Eigen::VectorXd next = sx + shift * x;
    x = next / next.maxCoeff();
  }
  out.vector = x;
  throw SpectralNonConvergence("spectral_radius: no convergence within iteration cap", out);
}

Rational cd_kernel(const SpaceParams& params, const std::set<Shape>& L, const Shape& a, const Shape& e) {
  Rational total = 0;
  for (const auto& f : L)
    total += Rational(K_multi(params, f, a) * K_multi(params, f, e), shape_count(params, f));
  total.canonicalize();
  return total;
}

CdSides cd_sides(const SpaceParams& params, int kappa, const Shape& a, const Shape& e) {
  std::set<Shape> L;
  for (const auto& f : enumerate_shapes(params.r, params.n))
    if (f.length() <= kappa) L.insert(f);
  CdSides out;
  out.lhs = (P_eval(params, e) - P_eval(params, a)) * cd_kernel(params, L, a, e);
  out.rhs = 0;
  if (kappa < params.n) {
    const auto blk = build_blocks(params, kappa);
    for (std::size_t fi = 0; fi < blk.middle.size(); ++fi) {
      const auto& f = blk.middle[fi];
      const Integer kfa = K_multi(params, f, a);
      const Integer kfe = K_multi(params, f, e);
      const Integer vf = shape_count(params, f);
      for (std::size_t hi = 0; hi < blk.upper.size(); ++hi) {
        if (blk.a[fi][hi] == 0) continue;
        const auto& h = blk.upper[hi];
        Integer cross = K_multi(params, h, e) * kfa - K_multi(params, h, a) * kfe;
        out.rhs += blk.a[fi][hi] * Rational(cross, vf);
      }
    }
  }
  out.lhs.canonicalize();
  out.rhs.canonicalize();
  return out;
}

bool cd_check(const SpaceParams& params, int kappa, const Shape& a, const Shape& e) {
  const auto sides = cd_sides(params, kappa, a, e);
  return sides.lhs == sides.rhs;
}

CdSides cd_sides_region(const SpaceParams& params, const std::set<Shape>& L, const Shape& a, const Shape& e) {
  ShapeIndex idx(params);
  const auto S = multiplication_matrix(params);
  CdSides out;
  out.lhs = (P_eval(params, e) - P_eval(params, a)) * cd_kernel(params, L, a, e);
  out.rhs = 0;
  for (const auto& f : L) {
    const auto fi = idx.index_of(f);
    const Integer kfa = K_multi(params, f, a);
    const Integer kfe = K_multi(params, f, e);
    const Integer vf = shape_count(params, f);
    for (std::size_t hi = 0; hi < idx.size(); ++hi) {
      const auto& h = idx[hi];
      if (L.count(h) || S[fi][hi] == 0) continue;
      Integer cross = K_multi(params, h, e) * kfa - K_multi(params, h, a) * kfe;
      out.rhs += S[fi][hi] * Rational(cross, vf);
    }
  }
  out.lhs.canonicalize();
  out.rhs.canonicalize();
  return out;
}

} // namespace nrt
