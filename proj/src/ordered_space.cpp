#include "nrt/ordered_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nrt {

void SpaceParams::validate() const {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

// ---------------------------------------------------------------- Shape

Shape Shape::unit(int r, int i) {
  if (i < 1 || i > r) throw std::out_of_range("unit shape index out of range");
  Shape s = zero(r);
  s.at(i) = 1;
  return s;
}

int Shape::length() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Shape::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) w += static_cast<int>(i + 1) * parts_[i];
  return w;
}

bool Shape::valid_for(const SpaceParams& p) const {
  if (depth() != p.r) return false;
  if (std::any_of(parts_.begin(), parts_.end(), [](int x) { return x < 0; })) return false;
  return length() <= p.n;
}

std::string Shape::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Shape Shape::parse_key(const std::string& key) {
  std::vector<int> parts;
  std::istringstream is(key);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos)
      throw std::invalid_argument("bad shape key: " + key);
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty shape key");
  return Shape(std::move(parts));
}

namespace {

void fill_shapes(std::vector<int>& cur, int pos, int remaining, std::vector<Shape>& out) {
  if (pos == static_cast<int>(cur.size())) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    fill_shapes(cur, pos + 1, remaining - v, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

std::vector<Shape> enumerate_shapes(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("enumerate_shapes: bad parameters");
  std::vector<Shape> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  fill_shapes(cur, 0, n, out);
  return out;
}

std::vector<Shape> shapes_of_length(int r, int length) {
  std::vector<Shape> out;
  for (auto& s : enumerate_shapes(r, length))
    if (s.length() == length) out.push_back(std::move(s));
  return out;
}

ShapeIndex::ShapeIndex(const SpaceParams& params) : params_(params) {
  params.validate();
  shapes_ = enumerate_shapes(params.r, params.n);
  for (std::size_t i = 0; i < shapes_.size(); ++i) lookup_.emplace(shapes_[i], i);
}

std::size_t ShapeIndex::index_of(const Shape& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) throw std::out_of_range("shape " + e.key() + " not in Delta_{r,n}");
  return it->second;
}

// ---------------------------------------------------------------- vectors

OrderedVector::OrderedVector(const SpaceParams& params, std::vector<int> symbols)
    : params_(params), symbols_(std::move(symbols)) {
  params.validate();
  if (static_cast<int>(symbols_.size()) != params.length())
    throw std::invalid_argument("vector length must equal r*n");
  for (int s : symbols_)
    if (s < 0 || s >= params.q) throw std::invalid_argument("symbol out of range [0, q)");
}

OrderedVector OrderedVector::zero(const SpaceParams& params) {
  return OrderedVector(params, std::vector<int>(static_cast<std::size_t>(params.length()), 0));
}

OrderedVector OrderedVector::from_index(const SpaceParams& params, std::uint64_t index) {
  std::vector<int> sym(static_cast<std::size_t>(params.length()));
  const auto q = static_cast<std::uint64_t>(params.q);
  for (auto& s : sym) {
    s = static_cast<int>(index % q);
    index /= q;
  }
  return OrderedVector(params, std::move(sym));
}

int OrderedVector::at(int block, int position) const {
  return symbols_.at(static_cast<std::size_t>((block - 1) * params_.r + (position - 1)));
}

std::uint64_t OrderedVector::to_index() const {
  std::uint64_t idx = 0;
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it)
    idx = idx * static_cast<std::uint64_t>(params_.q) + static_cast<std::uint64_t>(*it);
  return idx;
}

OrderedVector OrderedVector::operator-(const OrderedVector& other) const {
  if (!(params_ == other.params_)) throw std::invalid_argument("parameter mismatch");
  std::vector<int> out(symbols_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ((symbols_[i] - other.symbols_[i]) % params_.q + params_.q) % params_.q;
  return OrderedVector(params_, std::move(out));
}

OrderedVector OrderedVector::operator+(const OrderedVector& other) const {
  if (!(params_ == other.params_)) throw std::invalid_argument("parameter mismatch");
  std::vector<int> out(symbols_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (symbols_[i] + other.symbols_[i]) % params_.q;
  return OrderedVector(params_, std::move(out));
}

OrderedVector OrderedVector::reversed_blocks() const {
  std::vector<int> out(symbols_);
  for (int b = 0; b < params_.n; ++b) {
    auto first = out.begin() + b * params_.r;
    std::reverse(first, first + params_.r);
  }
  return OrderedVector(params_, std::move(out));
}

Shape shape_of(const OrderedVector& v) {
  const auto& p = v.params();
  Shape e = Shape::zero(p.r);
  for (int b = 1; b <= p.n; ++b) {
    for (int pos = p.r; pos >= 1; --pos) {
      if (v.at(b, pos) != 0) {
        ++e.at(pos);
        break;
      }
    }
  }
  return e;
}

Shape shape_bar_of(const OrderedVector& v) {
  const auto& p = v.params();
  Shape e = Shape::zero(p.r);
  for (int b = 1; b <= p.n; ++b) {
    for (int pos = 1; pos <= p.r; ++pos) {
      if (v.at(b, pos) != 0) {
        ++e.at(p.r - pos + 1);
        break;
      }
    }
  }
  return e;
}

int ordered_weight(const OrderedVector& v) { return shape_of(v).weight(); }

int ordered_distance(const OrderedVector& u, const OrderedVector& v) {
  return ordered_weight(u - v);
}

// ---------------------------------------------------------------- counting

Integer shape_count(const SpaceParams& params, const Shape& e) {
  params.validate();
  if (!e.valid_for(params)) throw std::invalid_argument("shape " + e.key() + " invalid for parameters");
  // multinomial(n; e_0, ..., e_r)
  Integer multinomial = factorial(static_cast<unsigned long>(params.n));
  multinomial /= factorial(static_cast<unsigned long>(e.zeros(params.n)));
  for (int i = 1; i <= params.r; ++i) multinomial /= factorial(static_cast<unsigned long>(e[i]));
  return multinomial * ipow(params.q - 1, static_cast<unsigned long>(e.length())) *
         ipow(params.q, static_cast<unsigned long>(e.weight() - e.length()));
}

Integer sphere_size(const SpaceParams& params, int d) {
  params.validate();
  if (d < 0 || d > params.length()) throw std::out_of_range("sphere radius out of range");
  Integer total = 0;
  for (const auto& e : enumerate_shapes(params.r, params.n))
    if (e.weight() == d) total += shape_count(params, e);
  return total;
}

Integer ball_size(const SpaceParams& params, int d) {
  params.validate();
  if (d < 0 || d > params.length()) throw std::out_of_range("ball radius out of range");
  Integer total = 0;
  for (const auto& e : enumerate_shapes(params.r, params.n))
    if (e.weight() <= d) total += shape_count(params, e);
  return total;
}

Rational delta_crit(int q, int r) {
  if (q < 2 || r < 1) throw std::invalid_argument("delta_crit: need q >= 2, r >= 1");
  Rational qr(ipow(q, static_cast<unsigned long>(r)));
  Rational out = 1 - (qr - 1) / (Rational(r) * qr * Rational(q - 1));
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------- OOAs

void ArrayTable::add(OrderedVector v) {
  if (!(v.params() == params)) throw std::invalid_argument("row parameters differ from table");
  rows.push_back(std::move(v));
}

namespace {

bool compositions(const SpaceParams& p, int block, int remaining, std::vector<int>& cur,
                  const std::function<bool(std::span<const int>)>& visit) {
  if (block == p.n) {
    if (remaining != 0) return true;
    return visit(cur);
  }
  const int blocks_left = p.n - block - 1;
  for (int v = 0; v <= std::min(p.r, remaining); ++v) {
    if (remaining - v > blocks_left * p.r) continue;
    cur[static_cast<std::size_t>(block)] = v;
    if (!compositions(p, block + 1, remaining - v, cur, visit)) return false;
  }
  cur[static_cast<std::size_t>(block)] = 0;
  return true;
}

} // namespace

void for_each_left_adjusted(const SpaceParams& params, int t,
                            const std::function<bool(std::span<const int>)>& visit) {
  if (t < 0 || t > params.length()) return;
  std::vector<int> cur(static_cast<std::size_t>(params.n), 0);
  compositions(params, 0, t, cur, visit);
}

bool has_strength(const ArrayTable& table, int t) {
  const auto& p = table.params;
  const auto rows = table.rows.size();
  if (rows == 0) throw std::invalid_argument("empty array");
  if (t == 0) return true;
  if (t > p.length()) return false;
  Integer patterns = ipow(p.q, static_cast<unsigned long>(t));
  if (Integer(static_cast<unsigned long>(rows)) % patterns != 0) return false;
  const std::size_t npat = patterns.get_ui();
  const std::size_t theta = rows / npat;

  bool ok = true;
  std::vector<std::size_t> counts(npat);
  for_each_left_adjusted(p, t, [&](std::span<const int> prefix) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& row : table.rows) {
      std::size_t idx = 0;
      for (int b = 0; b < p.n; ++b)
        for (int pos = 1; pos <= prefix[static_cast<std::size_t>(b)]; ++pos)
          idx = idx * static_cast<std::size_t>(p.q) + static_cast<std::size_t>(row.at(b + 1, pos));
      if (++counts[idx] > theta) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

StrengthReport ooa_strength(const ArrayTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("empty array");
  StrengthReport report;
  for (int t = 1; t <= table.params.length(); ++t) {
    if (!has_strength(table, t)) break;
    report.strength = t;
  }
  if (report.strength >= 1)
    report.index = Integer(static_cast<unsigned long>(table.rows.size())) /
                   ipow(table.params.q, static_cast<unsigned long>(report.strength));
  return report;
}

OoaParams net_to_ooa(const NetParams& net) {
  if (net.q < 2) throw std::invalid_argument("q must be at least 2");
  if (net.s < 1) throw std::invalid_argument("s must be at least 1");
  if (net.t < 0 || net.t > net.m) throw std::invalid_argument("need 0 <= t <= m");
  OoaParams out;
  out.strength = net.m - net.t;
  out.space = SpaceParams{net.q, net.m - net.t, net.s};
  out.index = ipow(net.q, static_cast<unsigned long>(net.t));
  out.size = ipow(net.q, static_cast<unsigned long>(net.m));
  return out;
}

NetParams ooa_to_net(const OoaParams& ooa) {
  if (ooa.strength != ooa.space.r)
    throw std::invalid_argument("net correspondence needs strength equal to block depth");
  const int q = ooa.space.q;
  int t = 0;
  Integer idx = ooa.index;
  while (idx > 1) {
    if (idx % q != 0) throw std::invalid_argument("index is not a power of q");
    idx /= q;
    ++t;
  }
  if (idx != 1) throw std::invalid_argument("index must be positive");
  NetParams net{t, t + ooa.strength, ooa.space.n, q};
  if (ipow(q, static_cast<unsigned long>(net.m)) != ooa.size)
    throw std::invalid_argument("size must equal q^m");
  return net;
}

// ---------------------------------------------------------------- linear codes

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace {

int inverse_mod(int a, int p) {
  // p is prime: a^(p-2)
  long result = 1;
  long base = a % p;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

} // namespace

int rank_mod_p(const std::vector<OrderedVector>& rows, int q) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().symbols().size();
  std::vector<std::vector<int>> m;
  for (const auto& r : rows) m.emplace_back(r.symbols().begin(), r.symbols().end());
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    auto pivot = std::find_if(m.begin() + rank, m.end(), [&](const auto& row) { return row[c] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    auto& prow = m[static_cast<std::size_t>(rank)];
    const int inv = inverse_mod(prow[c], q);
    for (auto& x : prow) x = x * inv % q;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == rank || m[i][c] == 0) continue;
      const int f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * prow[j]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

LinearCode::LinearCode(const SpaceParams& params, std::vector<OrderedVector> generators)
    : params_(params), generators_(std::move(generators)) {
  params.validate();
  if (!is_prime(params.q)) throw std::invalid_argument("linear codes require prime q");
  for (const auto& g : generators_)
    if (!(g.params() == params)) throw std::invalid_argument("generator parameters differ");
  if (rank_mod_p(generators_, params.q) != static_cast<int>(generators_.size()))
    throw std::invalid_argument("generator rows are linearly dependent");
}

ArrayTable enumerate_code(const LinearCode& code) {
  const auto& p = code.params();
  const int k = code.dimension();
  Integer total = ipow(p.q, static_cast<unsigned long>(k));
  if (total > kMaxEnumeratedVectors) throw BudgetExceeded("code too large to enumerate");
  ArrayTable out{p, {}};
  const std::uint64_t count = total.get_ui();
  std::vector<int> coeff(static_cast<std::size_t>(k), 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t x = c;
    for (auto& a : coeff) {
      a = static_cast<int>(x % static_cast<std::uint64_t>(p.q));
      x /= static_cast<std::uint64_t>(p.q);
    }
    std::vector<int> sym(static_cast<std::size_t>(p.length()), 0);
    for (int g = 0; g < k; ++g) {
      const auto gs = code.generators()[static_cast<std::size_t>(g)].symbols();
      for (std::size_t j = 0; j < sym.size(); ++j)
        sym[j] = (sym[j] + coeff[static_cast<std::size_t>(g)] * gs[j]) % p.q;
    }
    out.rows.emplace_back(p, std::move(sym));
  }
  return out;
}

ArrayTable dual_code(const LinearCode& code) {
  const auto& p = code.params();
  Integer total = p.ambient_size();
  if (total > kMaxEnumeratedVectors) throw BudgetExceeded("ambient space too large to scan");
  ArrayTable out{p, {}};
  const std::uint64_t count = total.get_ui();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto y = OrderedVector::from_index(p, idx);
    bool orthogonal = true;
    for (const auto& g : code.generators()) {
      long dot = 0;
      for (std::size_t j = 0; j < y.symbols().size(); ++j) dot += g.symbols()[j] * y.symbols()[j];
      if (dot % p.q != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) out.rows.push_back(std::move(y));
  }
  return out;
}

int minimum_distance(const LinearCode& code) {
  int best = code.params().length() + 1;
  for (const auto& c : enumerate_code(code).rows) {
    int w = ordered_weight(c);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

} // namespace nrt
