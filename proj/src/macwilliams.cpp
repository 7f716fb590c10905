#include "nrt/macwilliams.hpp"

#include "nrt/krawtchouk.hpp"

#include <stdexcept>
#include <vector>

namespace nrt {

std::string to_string(Reading reading) { return reading == Reading::Right ? "right" : "left"; }

Reading parse_reading(const std::string& text) {
  if (text == "right") return Reading::Right;
  if (text == "left") return Reading::Left;
  throw std::invalid_argument("reading must be right or left: " + text);
}

Rational WeightEnumerator::total() const {
  Rational s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

Rational WeightEnumerator::at(const Shape& e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Rational(0) : it->second;
}

WeightEnumerator enumerator_of(const ArrayTable& words, Reading reading) {
  WeightEnumerator out;
  out.params = words.params;
  out.reading = reading;
  for (const auto& w : words.rows) out.coeffs[reading == Reading::Right ? shape_of(w) : shape_bar_of(w)] += 1;
  return out;
}

WeightEnumerator enumerator_of(const LinearCode& code, Reading reading) {
  return enumerator_of(enumerate_code(code), reading);
}

namespace {

// Homogeneous polynomial in z_0..z_r keyed by the exponents of z_1..z_r.
using Poly = std::map<Shape, Rational>;

Poly multiply_linear(const Poly& p, const std::vector<Rational>& form, int r) {
  Poly out;
  for (const auto& [e, c] : p)
    for (int k = 0; k <= r; ++k) {
      if (form[static_cast<std::size_t>(k)] == 0) continue;
      Shape h = e;
      if (k > 0) h.at(k) += 1;
      out[h] += c * form[static_cast<std::size_t>(k)];
    }
  return out;
}

std::vector<std::vector<Rational>> substitution(int q, int r) {
  std::vector<std::vector<Rational>> u(static_cast<std::size_t>(r + 1),
                                       std::vector<Rational>(static_cast<std::size_t>(r + 1), Rational(0)));
  u[0][0] = 1;
  for (int i = 1; i <= r; ++i) u[0][static_cast<std::size_t>(i)] = Rational(ipow(q, static_cast<unsigned long>(i - 1)) * (q - 1));
  for (int j = 1; j <= r; ++j) {
    auto& row = u[static_cast<std::size_t>(r - j + 1)];
    row[0] = 1;
    for (int k = 1; k < j; ++k) row[static_cast<std::size_t>(k)] = Rational(ipow(q, static_cast<unsigned long>(k - 1)) * (q - 1));
    row[static_cast<std::size_t>(j)] = Rational(-ipow(q, static_cast<unsigned long>(j - 1)));
  }
  return u;
}

} // namespace

WeightEnumerator transform(const WeightEnumerator& A, const Integer& codesize) {
  const auto& p = A.params;
  const auto u = substitution(p.q, p.r);
  WeightEnumerator out;
  out.params = p;
  out.reading = A.reading == Reading::Right ? Reading::Left : Reading::Right;
  Poly acc;
  for (const auto& [e, c] : A.coeffs) {
    Poly term{{Shape::zero(p.r), c}};
    for (int k = 0; k < e.zeros(p.n); ++k) term = multiply_linear(term, u[0], p.r);
    for (int i = 1; i <= p.r; ++i)
      for (int k = 0; k < e[i]; ++k) term = multiply_linear(term, u[static_cast<std::size_t>(i)], p.r);
    for (const auto& [h, v] : term) acc[h] += v;
  }
  const Rational scale = Rational(1) / Rational(codesize);
  for (const auto& [h, v] : acc)
    if (v != 0) out.coeffs[h] = v * scale;
  return out;
}

WeightEnumerator krawtchouk_transform(const WeightEnumerator& A, const Integer& codesize) {
  WeightEnumerator out;
  out.params = A.params;
  out.reading = A.reading == Reading::Right ? Reading::Left : Reading::Right;
  for (const auto& f : enumerate_shapes(A.params.r, A.params.n)) {
    Rational s = 0;
    for (const auto& [e, c] : A.coeffs) s += c * Rational(K_multi(A.params, f, e));
    if (s != 0) out.coeffs[f] = s / Rational(codesize);
  }
  return out;
}

DualityReport check_duality(const LinearCode& code) {
  DualityReport rep;
  const auto words = enumerate_code(code);
  rep.predicted = transform(enumerator_of(words, Reading::Right), Integer(static_cast<unsigned long>(words.size())));
  rep.actual = enumerator_of(dual_code(code), Reading::Left);
  rep.holds = rep.predicted == rep.actual;
  return rep;
}

bool verify_duality(const LinearCode& code) { return check_duality(code).holds; }

} // namespace nrt
