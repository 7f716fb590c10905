#include "doctest.h"

#include "nrt/ordered_space.hpp"

#include <random>

using namespace nrt;

namespace {

OrderedVector vec(const SpaceParams& p, std::vector<int> s) { return OrderedVector(p, std::move(s)); }

ArrayTable table_of(const SpaceParams& p, const std::vector<std::vector<int>>& rows) {
  ArrayTable t{p, {}};
  for (const auto& r : rows) t.add(vec(p, r));
  return t;
}

// Rightmost nonzero position per block, computed without the library.
std::vector<int> naive_shape(const SpaceParams& p, std::uint64_t idx) {
  std::vector<int> e(static_cast<std::size_t>(p.r), 0);
  for (int b = 0; b < p.n; ++b) {
    int top = 0;
    for (int j = 1; j <= p.r; ++j) {
      if (idx % static_cast<std::uint64_t>(p.q) != 0) top = j;
      idx /= static_cast<std::uint64_t>(p.q);
    }
    if (top) ++e[static_cast<std::size_t>(top - 1)];
  }
  return e;
}

} // namespace

TEST_CASE("shape readings") {
  const SpaceParams p22{2, 2, 2};
  const SpaceParams p21{2, 2, 1};
  CHECK(shape_of(OrderedVector::zero(p22)) == Shape::zero(2));
  CHECK(shape_of(vec(p21, {1, 1})) == Shape({0, 1}));
  CHECK(shape_of(vec(p22, {1, 0, 0, 1})) == Shape({1, 1}));
  CHECK(shape_bar_of(vec(p21, {1, 0})) == Shape({0, 1}));
  CHECK(shape_bar_of(vec(p21, {0, 1})) == Shape({1, 0}));
  CHECK(shape_bar_of(OrderedVector::zero(p22)) == Shape::zero(2));
  const SpaceParams p{3, 3, 2};
  for (std::uint64_t i = 0; i < 729; ++i) {
    const auto v = OrderedVector::from_index(p, i);
    CHECK(shape_bar_of(v) == shape_of(v.reversed_blocks()));
    CHECK(OrderedVector::from_index(p, v.to_index()) == v);
  }
}

TEST_CASE("weights and distances") {
  const SpaceParams p21{2, 2, 1};
  const SpaceParams p22{2, 2, 2};
  CHECK(ordered_weight(OrderedVector::zero(p22)) == 0);
  CHECK(ordered_weight(vec(p21, {1, 1})) == 2);
  CHECK(ordered_distance(vec(p22, {1, 0, 0, 0}), vec(p22, {0, 0, 0, 1})) == 3);
  CHECK_THROWS_AS(ordered_distance(vec(p21, {1, 1}), vec(p22, {1, 0, 0, 0})), std::invalid_argument);

  for (const SpaceParams& p : {SpaceParams{2, 2, 2}, SpaceParams{3, 1, 3}, SpaceParams{2, 3, 1}}) {
    const auto N = p.ambient_size().get_ui();
    for (std::uint64_t a = 0; a < N; ++a)
      for (std::uint64_t b = 0; b < N; ++b) {
        const auto u = OrderedVector::from_index(p, a);
        const auto v = OrderedVector::from_index(p, b);
        const int duv = ordered_distance(u, v);
        REQUIRE(duv == ordered_distance(v, u));
        REQUIRE((duv == 0) == (a == b));
        for (std::uint64_t c = 0; c < N; c += 3) {
          const auto w = OrderedVector::from_index(p, c);
          REQUIRE(duv <= ordered_distance(u, w) + ordered_distance(w, v));
        }
      }
  }
}

TEST_CASE("shape counts and spheres") {
  const SpaceParams p{2, 2, 2};
  CHECK(shape_count(p, Shape::zero(2)) == 1);
  CHECK(shape_count(p, Shape({1, 0})) == 2);
  CHECK(shape_count(p, Shape({1, 1})) == 4);
  CHECK(sphere_size(p, 0) == 1);
  CHECK(sphere_size(p, 1) == 2);
  CHECK(sphere_size(p, 2) == 5);
  CHECK(sphere_size(p, 3) == 4);
  CHECK(sphere_size(p, 4) == 4);
  CHECK(ball_size(p, 4) == 16);
  CHECK_THROWS(sphere_size(p, 5));

  for (int q = 2; q <= 5; ++q)
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 6; ++n) {
        const SpaceParams s{q, r, n};
        Integer total = 0;
        for (const auto& e : enumerate_shapes(r, n)) total += shape_count(s, e);
        CHECK(total == s.ambient_size());
      }

  for (const SpaceParams& s : {SpaceParams{2, 2, 3}, SpaceParams{3, 2, 2}, SpaceParams{2, 4, 2}, SpaceParams{4, 2, 2},
                               SpaceParams{2, 1, 8}, SpaceParams{3, 3, 1}}) {
    std::map<std::vector<int>, Integer> counts;
    for (std::uint64_t i = 0; i < s.ambient_size().get_ui(); ++i) ++counts[naive_shape(s, i)];
    for (const auto& e : enumerate_shapes(s.r, s.n)) CHECK(counts[e.parts()] == shape_count(s, e));
  }
}

TEST_CASE("delta_crit") {
  CHECK(delta_crit(2, 1) == Rational(1, 2));
  CHECK(delta_crit(2, 2) == Rational(5, 8));
  CHECK(delta_crit(3, 1) == Rational(2, 3));
  // mean normalized weight
  const SpaceParams p{3, 2, 2};
  Rational mean = 0;
  for (const auto& e : enumerate_shapes(2, 2)) mean += Rational(shape_count(p, e) * e.weight());
  mean /= Rational(p.ambient_size() * p.length());
  CHECK(mean == delta_crit(3, 2));
}

TEST_CASE("shape enumeration") {
  CHECK(enumerate_shapes(1, 3).size() == 4);
  CHECK(enumerate_shapes(2, 2).size() == 6);
  CHECK(enumerate_shapes(3, 4).front().is_zero());
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 5; ++n) {
      const auto s = enumerate_shapes(r, n);
      CHECK(Integer(static_cast<unsigned long>(s.size())) == binomial(n + r, r));
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
  CHECK(Shape::parse_key("1,0,2") == Shape({1, 0, 2}));
  CHECK(Shape({3, 1}).key() == "3,1");
}

TEST_CASE("OOA strength") {
  const SpaceParams p21{2, 2, 1};
  const auto full = table_of(p21, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto rep = ooa_strength(full);
  CHECK(rep.strength == 2);
  CHECK(*rep.index == 1);
  rep = ooa_strength(table_of(p21, {{0, 0}, {1, 1}}));
  CHECK(rep.strength == 1);
  CHECK(*rep.index == 1);
  rep = ooa_strength(table_of(p21, {{0, 0}}));
  CHECK(rep.strength == 0);
  CHECK_FALSE(rep.index.has_value());
  // second coordinate balanced alone is not left-adjusted
  CHECK(ooa_strength(table_of(p21, {{0, 0}, {0, 1}})).strength == 0);
  CHECK_THROWS(ooa_strength(ArrayTable{p21, {}}));
}

TEST_CASE("linear codes and duality with OOAs") {
  const SpaceParams p21{2, 2, 1};
  LinearCode c(p21, {vec(p21, {1, 1})});
  CHECK(enumerate_code(c).size() == 2);
  const auto d = dual_code(c);
  CHECK(d.size() == 2);
  LinearCode zero(p21, {});
  CHECK(dual_code(zero).size() == 4);
  CHECK_THROWS_AS(LinearCode(SpaceParams{4, 1, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LinearCode(p21, {vec(p21, {1, 1}), vec(p21, {1, 1})}), std::invalid_argument);

  std::mt19937 rng(7);
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      const SpaceParams p{q, 2, n};
      for (int trial = 0; trial < 20; ++trial) {
        const int k = static_cast<int>(rng() % static_cast<unsigned>(p.length() + 1));
        std::vector<OrderedVector> gens;
        while (static_cast<int>(gens.size()) < k) {
          std::vector<int> s(static_cast<std::size_t>(p.length()));
          for (auto& x : s) x = static_cast<int>(rng() % static_cast<unsigned>(q));
          auto cand = gens;
          cand.emplace_back(p, s);
          if (rank_mod_p(cand, q) == static_cast<int>(cand.size())) gens = cand;
        }
        LinearCode code(p, gens);
        const auto words = enumerate_code(code);
        const auto dual = dual_code(code);
        CHECK(Integer(static_cast<unsigned long>(words.size() * dual.size())) == p.ambient_size());
        // the dual is an OOA of strength d - 1
        CHECK(ooa_strength(dual).strength == std::min(minimum_distance(code) - 1, p.length()));
      }
    }
}

TEST_CASE("net and OOA parameters") {
  const auto o = net_to_ooa(NetParams{0, 2, 2, 2});
  CHECK(o.strength == 2);
  CHECK(o.space == SpaceParams{2, 2, 2});
  CHECK(o.size == 4);
  CHECK(o.index == 1);
  const auto o2 = net_to_ooa(NetParams{1, 3, 2, 2});
  CHECK(o2.strength == 2);
  CHECK(o2.space == SpaceParams{2, 2, 2});
  CHECK(o2.size == 8);
  CHECK(o2.index == 2);
  for (int t = 0; t <= 3; ++t)
    for (int m = std::max(t, 1); m <= 5; ++m)
      if (m > t) CHECK(ooa_to_net(net_to_ooa(NetParams{t, m, 3, 3})) == NetParams{t, m, 3, 3});
  CHECK_THROWS(net_to_ooa(NetParams{3, 2, 2, 2}));
}
