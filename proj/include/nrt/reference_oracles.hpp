#pragma once

// Brute-force ground truth for tests. Shapes and weights are recomputed here
// from raw digits; nothing from the modules under test is reused beyond
// SpaceParams and the big-integer types.

#include "nrt/numeric.hpp"
#include "nrt/ordered_space.hpp"

#include <cstdint>

namespace nrt::oracle {

struct SearchBudget {
  std::uint64_t max_ambient = std::uint64_t{1} << 12;
  std::uint64_t max_nodes = 200'000'000;
  double max_seconds = 120.0;
};

/// Ordered weight of the vector with base-q index idx (first coordinate least significant).
int weight_of_index(const SpaceParams& params, std::uint64_t idx);
int distance_of_indices(const SpaceParams& params, std::uint64_t a, std::uint64_t b);

/// A_q(nr, d) in the ordered metric. Throws BudgetExceeded.
Integer brute_force_max_code(const SpaceParams& params, int d, const SearchBudget& budget = {});

/// Fewest rows of an OOA of strength t (repeats allowed). Default cap q^{rn} <= 2^8.
Integer brute_force_min_ooa(const SpaceParams& params, int t,
                            const SearchBudget& budget = {std::uint64_t{1} << 8, 200'000'000, 120.0});

/// Largest code of minimum distance d inside the sphere of weight w.
Integer constant_weight_max(const SpaceParams& params, int d, int w, const SearchBudget& budget = {});

} // namespace nrt::oracle
