#pragma once

// Shape enumerators of linear codes and the NRT MacWilliams transform.

#include "nrt/ordered_space.hpp"

#include <map>
#include <string>

namespace nrt {

enum class Reading { Right, Left };

std::string to_string(Reading reading);
/// Accepts "right" or "left"; throws std::invalid_argument otherwise.
Reading parse_reading(const std::string& text);

struct WeightEnumerator {
  SpaceParams params;
  Reading reading = Reading::Right;
  std::map<Shape, Rational> coeffs; ///< zero coefficients omitted

  [[nodiscard]] Rational total() const;
  [[nodiscard]] Rational at(const Shape& e) const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Counts codewords by shape_of (right) or shape_bar_of (left).
WeightEnumerator enumerator_of(const ArrayTable& words, Reading reading);
WeightEnumerator enumerator_of(const LinearCode& code, Reading reading);

/// (1/codesize) A(u_0, ..., u_r); the result carries the opposite reading.
WeightEnumerator transform(const WeightEnumerator& A, const Integer& codesize);

/// (1/|C|) sum_e A_e K_f(e) for every f.
WeightEnumerator krawtchouk_transform(const WeightEnumerator& A, const Integer& codesize);

struct DualityReport {
  bool holds = false;
  WeightEnumerator predicted; ///< transform of the right enumerator of C
  WeightEnumerator actual;    ///< left enumerator of the dual code
};

DualityReport check_duality(const LinearCode& code);
bool verify_duality(const LinearCode& code);

} // namespace nrt
