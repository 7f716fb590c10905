#pragma once

// Exact rational two-phase simplex with Bland's anti-cycling rule.

#include "nrt/numeric.hpp"

#include <vector>

namespace nrt {

enum class Sense { LessEqual, GreaterEqual, Equal };

/// maximize objective . x  subject to  rows[i] . x (sense) rhs[i],  x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  [[nodiscard]] std::size_t variables() const { return objective.size(); }
  void add_row(std::vector<Rational> coeffs, Sense sense, Rational value);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;               ///< optimum when Optimal
  std::vector<Rational> x;      ///< primal solution (Optimal) or feasible base point (Unbounded)
  std::vector<Rational> duals;  ///< one per row; objective = duals . rhs at optimum
  std::vector<Rational> ray;    ///< improving direction when Unbounded
  long pivots = 0;
};

LpSolution simplex_solve(const LinearProgram& lp);

} // namespace nrt
