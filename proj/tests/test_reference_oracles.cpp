#include "doctest.h"

#include "nrt/ordered_space.hpp"
#include "nrt/reference_oracles.hpp"

using namespace nrt;

TEST_CASE("oracle weights agree with the library") {
  for (const SpaceParams& p : {SpaceParams{2, 2, 3}, SpaceParams{3, 2, 2}, SpaceParams{2, 3, 2}})
    for (std::uint64_t i = 0; i < p.ambient_size().get_ui(); ++i)
      CHECK(oracle::weight_of_index(p, i) == ordered_weight(OrderedVector::from_index(p, i)));
}

TEST_CASE("maximum codes") {
  CHECK(oracle::brute_force_max_code({2, 2, 2}, 1) == 16);
  CHECK(oracle::brute_force_max_code({2, 1, 3}, 3) == 2);
  CHECK(oracle::brute_force_max_code({2, 2, 1}, 2) == 2);
  CHECK(oracle::brute_force_max_code({2, 1, 3}, 2) == 4);
  CHECK(oracle::brute_force_max_code({2, 1, 4}, 2) == 8);
  CHECK_THROWS_AS(oracle::brute_force_max_code({2, 2, 7}, 3), BudgetExceeded);
  oracle::SearchBudget tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(oracle::brute_force_max_code({2, 2, 3}, 2, tiny), BudgetExceeded);
}

TEST_CASE("minimum OOAs") {
  CHECK(oracle::brute_force_min_ooa({2, 2, 2}, 0) == 1);
  CHECK(oracle::brute_force_min_ooa({2, 1, 3}, 2) == 4);
  CHECK(oracle::brute_force_min_ooa({2, 2, 1}, 1) == 2);
  CHECK(oracle::brute_force_min_ooa({2, 1, 3}, 3) == 8);
  CHECK_THROWS_AS(oracle::brute_force_min_ooa({2, 3, 3}, 2), BudgetExceeded);
}

TEST_CASE("constant-weight codes") {
  CHECK(oracle::constant_weight_max({2, 2, 2}, 3, 0) == 1);
  // weight-1 sphere of q=2,r=2,n=2 has 2 vectors at mutual distance 2
  CHECK(oracle::constant_weight_max({2, 2, 2}, 2, 1) == 2);
  CHECK(oracle::constant_weight_max({2, 2, 2}, 3, 1) == 1);
  CHECK(oracle::constant_weight_max({2, 1, 4}, 4, 2) == 2);
}

TEST_CASE("oracles are deterministic") {
  CHECK(oracle::brute_force_max_code({3, 1, 3}, 2) == oracle::brute_force_max_code({3, 1, 3}, 2));
  CHECK(oracle::brute_force_max_code({3, 1, 3}, 2) == 9);
}
