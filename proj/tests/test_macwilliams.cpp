#include "doctest.h"

#include "nrt/krawtchouk.hpp"
#include "nrt/macwilliams.hpp"

#include <random>

using namespace nrt;

namespace {

LinearCode random_code(const SpaceParams& p, std::mt19937& rng) {
  for (;;) {
    const int k = static_cast<int>(rng() % static_cast<unsigned>(p.length() + 1));
    std::vector<OrderedVector> gens;
    for (int i = 0; i < k; ++i) {
      std::vector<int> s(static_cast<std::size_t>(p.length()));
      for (auto& x : s) x = static_cast<int>(rng() % static_cast<unsigned>(p.q));
      gens.emplace_back(p, s);
    }
    if (rank_mod_p(gens, p.q) == k) return LinearCode(p, gens);
  }
}

WeightEnumerator full_space(const SpaceParams& p) {
  WeightEnumerator A;
  A.params = p;
  for (const auto& e : enumerate_shapes(p.r, p.n)) A.coeffs[e] = Rational(shape_count(p, e));
  return A;
}

} // namespace

TEST_CASE("enumerators of small codes") {
  const SpaceParams p{2, 2, 1};
  const LinearCode zero(p, {});
  const auto z = enumerator_of(zero, Reading::Right);
  CHECK(z.coeffs.size() == 1);
  CHECK(z.at(Shape::zero(2)) == 1);

  const LinearCode c(p, {OrderedVector(p, {1, 1})});
  const auto A = enumerator_of(c, Reading::Right);
  CHECK(A.at(Shape({0, 0})) == 1);
  CHECK(A.at(Shape({0, 1})) == 1);
  CHECK(A.total() == 2);
  const auto Abar = enumerator_of(c, Reading::Left);
  CHECK(Abar.at(Shape({0, 1})) == 1);

  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto code = random_code(SpaceParams{3, 2, 2}, rng);
    CHECK(enumerator_of(code, Reading::Right).total() == Rational(ipow(3, static_cast<unsigned long>(code.dimension()))));
  }
}

TEST_CASE("transform examples") {
  const SpaceParams p{2, 2, 1};
  WeightEnumerator A;
  A.params = p;
  A.coeffs[Shape({0, 0})] = 1;
  A.coeffs[Shape({0, 1})] = 1;
  const auto B = transform(A, 2);
  CHECK(B.reading == Reading::Left);
  CHECK(B.coeffs == A.coeffs);

  for (int q : {2, 3})
    for (int r : {1, 2, 3})
      for (int n : {1, 2, 3}) {
        const SpaceParams s{q, r, n};
        const auto T = transform(full_space(s), s.ambient_size());
        CHECK(T.coeffs.size() == 1);
        CHECK(T.at(Shape::zero(r)) == 1);
      }
}

TEST_CASE("double transform recovers the enumerator") {
  std::mt19937 rng(5);
  for (int q : {2, 3})
    for (int n : {2, 3}) {
      const SpaceParams p{q, 2, n};
      for (int i = 0; i < 10; ++i) {
        const auto code = random_code(p, rng);
        const auto A = enumerator_of(code, Reading::Right);
        const Integer size = ipow(q, static_cast<unsigned long>(code.dimension()));
        const auto B = transform(A, size);
        const auto back = transform(B, p.ambient_size() / size);
        CHECK(back.coeffs == A.coeffs);
        CHECK(back.reading == Reading::Right);
      }
    }
}

TEST_CASE("duality on random codes") {
  std::mt19937 rng(7);
  for (int q : {2, 3})
    for (int n : {2, 3}) {
      const SpaceParams p{q, 2, n};
      for (int i = 0; i < 50; ++i) {
        const auto code = random_code(p, rng);
        const auto rep = check_duality(code);
        CHECK(rep.holds);
        // integer, nonnegative coefficients
        for (const auto& [e, c] : rep.predicted.coeffs) {
          CHECK(is_integer(c));
          CHECK(c > 0);
        }
        // same map via the eigenvalues
        const auto words = enumerate_code(code);
        CHECK(krawtchouk_transform(enumerator_of(words, Reading::Right),
                                   Integer(static_cast<unsigned long>(words.size()))) == rep.actual);
      }
    }
}

TEST_CASE("zero code is dual to the whole space") {
  const SpaceParams p{3, 2, 2};
  const LinearCode zero(p, {});
  const auto rep = check_duality(zero);
  CHECK(rep.holds);
  CHECK(rep.actual.coeffs == full_space(p).coeffs);
}

TEST_CASE("transform is linear") {
  const SpaceParams p{3, 2, 2};
  std::mt19937 rng(11);
  WeightEnumerator A, B, S;
  A.params = B.params = S.params = p;
  for (const auto& e : enumerate_shapes(2, 2)) {
    A.coeffs[e] = Rational(static_cast<long>(rng() % 7));
    B.coeffs[e] = Rational(static_cast<long>(rng() % 5));
    S.coeffs[e] = A.coeffs[e] * 2 + B.coeffs[e] * 3;
  }
  const auto TA = transform(A, 1);
  const auto TB = transform(B, 1);
  const auto TS = transform(S, 1);
  for (const auto& e : enumerate_shapes(2, 2)) CHECK(TS.at(e) == TA.at(e) * 2 + TB.at(e) * 3);
}

TEST_CASE("reading names") {
  CHECK(parse_reading("left") == Reading::Left);
  CHECK(to_string(Reading::Right) == "right");
  CHECK_THROWS_AS(parse_reading("up"), std::invalid_argument);
}
