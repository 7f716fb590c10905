#pragma once

// Combinatorics of the ordered Hamming (NRT) space Q^{r,n}: shapes, weights,
// sphere sizes, ordered orthogonal array strength, net <-> OOA parameters, and
// small prime-field linear codes.

#include "nrt/numeric.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nrt {

struct SpaceParams {
  int q = 2; ///< alphabet size
  int r = 1; ///< block depth
  int n = 1; ///< number of blocks

  /// Throws std::invalid_argument unless q >= 2, r >= 1, n >= 1.
  void validate() const;
  [[nodiscard]] int length() const { return r * n; }
  [[nodiscard]] Integer ambient_size() const { return ipow(q, static_cast<unsigned long>(r * n)); }

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// Partition e = (e_1..e_r) with |e| <= n. parts[i-1] holds e_i.
class Shape {
public:
  Shape() = default;
  explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {}
  static Shape zero(int r) { return Shape(std::vector<int>(static_cast<std::size_t>(r), 0)); }
  /// F_i: a single part at depth i (1-based).
  static Shape unit(int r, int i);

  [[nodiscard]] int depth() const { return static_cast<int>(parts_.size()); }
  /// e_i for 1 <= i <= r.
  [[nodiscard]] int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] int& at(int i) { return parts_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

  /// |e| = sum e_i
  [[nodiscard]] int length() const;
  /// |e|' = sum i * e_i
  [[nodiscard]] int weight() const;
  /// e_0 = n - |e|
  [[nodiscard]] int zeros(int n) const { return n - length(); }
  [[nodiscard]] bool is_zero() const { return length() == 0; }
  [[nodiscard]] bool valid_for(const SpaceParams& p) const;

  /// "e1,e2,...,er", the key format used in every file format.
  [[nodiscard]] std::string key() const;
  static Shape parse_key(const std::string& key);

  friend auto operator<=>(const Shape&, const Shape&) = default;
  friend bool operator==(const Shape&, const Shape&) = default;

private:
  std::vector<int> parts_;
};

/// Every shape of Delta_{r,n} in lexicographic order; the zero shape first.
std::vector<Shape> enumerate_shapes(int r, int n);
/// All shapes with |e| == length, lexicographic.
std::vector<Shape> shapes_of_length(int r, int length);

/// Lexicographically ordered Delta_{r,n} with O(log) lookup.
class ShapeIndex {
public:
  explicit ShapeIndex(const SpaceParams& params);
  [[nodiscard]] const SpaceParams& params() const { return params_; }
  [[nodiscard]] std::size_t size() const { return shapes_.size(); }
  [[nodiscard]] const Shape& operator[](std::size_t i) const { return shapes_[i]; }
  [[nodiscard]] const std::vector<Shape>& shapes() const { return shapes_; }
  /// Throws std::out_of_range for shapes outside Delta_{r,n}.
  [[nodiscard]] std::size_t index_of(const Shape& e) const;
  [[nodiscard]] bool contains(const Shape& e) const { return lookup_.count(e) != 0; }

private:
  SpaceParams params_;
  std::vector<Shape> shapes_;
  std::map<Shape, std::size_t> lookup_;
};

class OrderedVector {
public:
  OrderedVector(const SpaceParams& params, std::vector<int> symbols);
  static OrderedVector zero(const SpaceParams& params);
  /// Base-q digits of `index`, first coordinate least significant.
  static OrderedVector from_index(const SpaceParams& params, std::uint64_t index);

  [[nodiscard]] const SpaceParams& params() const { return params_; }
  [[nodiscard]] std::span<const int> symbols() const { return symbols_; }
  /// Symbol at (block, position), both 1-based.
  [[nodiscard]] int at(int block, int position) const;
  [[nodiscard]] std::uint64_t to_index() const;

  [[nodiscard]] OrderedVector operator-(const OrderedVector& other) const;
  [[nodiscard]] OrderedVector operator+(const OrderedVector& other) const;
  /// Each block read back to front.
  [[nodiscard]] OrderedVector reversed_blocks() const;

  friend bool operator==(const OrderedVector&, const OrderedVector&) = default;

private:
  SpaceParams params_;
  std::vector<int> symbols_;
};

Shape shape_of(const OrderedVector& v);
Shape shape_bar_of(const OrderedVector& v);
int ordered_weight(const OrderedVector& v);
/// Throws std::invalid_argument on parameter mismatch.
int ordered_distance(const OrderedVector& u, const OrderedVector& v);

/// Number of vectors of shape e (the valency v_e).
Integer shape_count(const SpaceParams& params, const Shape& e);
/// Number of vectors of ordered weight exactly d.
Integer sphere_size(const SpaceParams& params, int d);
/// Number of vectors of ordered weight at most d.
Integer ball_size(const SpaceParams& params, int d);

Rational delta_crit(int q, int r);

/// Row multiset over one space. Duplicate rows are allowed.
struct ArrayTable {
  SpaceParams params;
  std::vector<OrderedVector> rows;

  void add(OrderedVector v);
  [[nodiscard]] std::size_t size() const { return rows.size(); }
};

struct StrengthReport {
  int strength = 0;
  /// |A| / q^t, present when strength >= 1.
  std::optional<Integer> index;
};

/// Calls visit(t_1..t_n) for every composition of t with 0 <= t_i <= r, in
/// lexicographic order. Returning false from visit stops the walk.
void for_each_left_adjusted(const SpaceParams& params, int t,
                            const std::function<bool(std::span<const int>)>& visit);

/// Whether every left-adjusted projection of size t is balanced.
bool has_strength(const ArrayTable& table, int t);
StrengthReport ooa_strength(const ArrayTable& table);

struct NetParams {
  int t = 0;
  int m = 0;
  int s = 1;
  int q = 2;
  friend bool operator==(const NetParams&, const NetParams&) = default;
};

struct OoaParams {
  int strength = 0;
  SpaceParams space; ///< n = s, r = m - t
  Integer index;     ///< q^t
  Integer size;      ///< q^m
  friend bool operator==(const OoaParams&, const OoaParams&) = default;
};

/// A (t,m,s)-net over Z_q corresponds to an (m-t, s, m-t, q) OOA of index q^t.
OoaParams net_to_ooa(const NetParams& net);
NetParams ooa_to_net(const OoaParams& ooa);

/// Linear code over the prime field Z_q given by generator rows.
class LinearCode {
public:
  /// Throws std::invalid_argument if q is not prime or the rows are dependent.
  LinearCode(const SpaceParams& params, std::vector<OrderedVector> generators);

  [[nodiscard]] const SpaceParams& params() const { return params_; }
  [[nodiscard]] const std::vector<OrderedVector>& generators() const { return generators_; }
  [[nodiscard]] int dimension() const { return static_cast<int>(generators_.size()); }

private:
  SpaceParams params_;
  std::vector<OrderedVector> generators_;
};

bool is_prime(int q);
/// Rank of the rows over Z_q (q prime).
int rank_mod_p(const std::vector<OrderedVector>& rows, int q);

/// Hard cap on exhaustive enumeration over the ambient space.
inline constexpr std::uint64_t kMaxEnumeratedVectors = std::uint64_t{1} << 20;

/// All q^k codewords.
ArrayTable enumerate_code(const LinearCode& code);
/// All y with sum x_i y_i = 0 (mod q) for every generator, by exhaustive scan.
ArrayTable dual_code(const LinearCode& code);
/// Minimum ordered weight over nonzero codewords; rn + 1 for the zero code.
int minimum_distance(const LinearCode& code);

} // namespace nrt
