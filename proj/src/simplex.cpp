#include "nrt/simplex.hpp"

#include <stdexcept>

namespace nrt {

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense sense, Rational value) {
  if (coeffs.size() != objective.size()) throw std::invalid_argument("add_row: width mismatch");
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
}

namespace {

// Column layout: [original | slack/surplus | artificial], one artificial per row.
class Tableau {
public:
  explicit Tableau(const LinearProgram& lp) : m_(lp.rows.size()), nvars_(lp.variables()) {
    for (std::size_t i = 0; i < m_; ++i)
      if (lp.senses[i] != Sense::Equal) slack_of_.push_back(i);
    nslack_ = slack_of_.size();
    width_ = nvars_ + nslack_ + m_;
    t_.assign(m_, std::vector<Rational>(width_ + 1, Rational(0)));
    sign_.assign(m_, 1);
    std::size_t s = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.rows[i].size() != nvars_) throw std::invalid_argument("simplex: row width mismatch");
      int sg = lp.rhs[i] < 0 ? -1 : 1;
      sign_[i] = sg;
      for (std::size_t j = 0; j < nvars_; ++j) t_[i][j] = sg * lp.rows[i][j];
      if (lp.senses[i] != Sense::Equal) {
        t_[i][nvars_ + s] = (lp.senses[i] == Sense::LessEqual ? 1 : -1) * sg;
        ++s;
      }
      t_[i][art(i)] = 1;
      t_[i][width_] = sg * lp.rhs[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = art(i);
  }

  [[nodiscard]] std::size_t art(std::size_t i) const { return nvars_ + nslack_ + i; }
  [[nodiscard]] bool is_art(std::size_t j) const { return j >= nvars_ + nslack_; }

  // Maximize cost . x over the current tableau. Returns false when unbounded,
  // leaving the offending column in `unbounded_col`.
  bool optimize(const std::vector<Rational>& cost, bool allow_artificial, long& pivots) {
    for (;;) {
      // reduced cost c_j - c_B B^{-1} a_j
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_ && enter == width_; ++j) {
        if (!allow_artificial && is_art(j)) continue;
        if (in_basis(j)) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (t_[i][j] != 0) rc -= cost[basis_[i]] * t_[i][j];
        if (rc > 0) enter = j;
      }
      if (enter == width_) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][width_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) {
        unbounded_col = enter;
        return false;
      }
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) if (v != 0) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rational factor = t_[i][col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (t_[row][j] != 0) t_[i][j] -= factor * t_[row][j];
    }
    basis_[row] = col;
  }

  // Pivot zero-level artificials out wherever a structural column allows.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_art(basis_[i])) continue;
      for (std::size_t j = 0; j < nvars_ + nslack_; ++j)
        if (t_[i][j] != 0 && !in_basis(j)) {
          pivot(i, j);
          break;
        }
    }
  }

  [[nodiscard]] bool in_basis(std::size_t j) const {
    for (auto b : basis_) if (b == j) return true;
    return false;
  }

  [[nodiscard]] std::vector<Rational> primal() const {
    std::vector<Rational> x(nvars_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < nvars_) x[basis_[i]] = t_[i][width_];
    return x;
  }

  // y = c_B B^{-1}; the artificial columns hold B^{-1}.
  [[nodiscard]] std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_, Rational(0));
    for (std::size_t k = 0; k < m_; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < m_; ++i)
        if (t_[i][art(k)] != 0) acc += cost[basis_[i]] * t_[i][art(k)];
      y[k] = sign_[k] * acc;
    }
    return y;
  }

  [[nodiscard]] std::vector<Rational> ray(std::size_t col) const {
    std::vector<Rational> d(nvars_, Rational(0));
    if (col < nvars_) d[col] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < nvars_) d[basis_[i]] = -t_[i][col];
    return d;
  }

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::size_t nvars() const { return nvars_; }

  std::size_t unbounded_col = 0;

private:
  std::size_t m_;
  std::size_t nvars_;
  std::size_t nslack_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> slack_of_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
};

} // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
  if (lp.senses.size() != lp.rows.size() || lp.rhs.size() != lp.rows.size())
    throw std::invalid_argument("simplex: inconsistent program");
  Tableau tab(lp);
  LpSolution out;

  std::vector<Rational> phase1(tab.width(), Rational(0));
  for (std::size_t i = 0; i < lp.rows.size(); ++i) phase1[tab.art(i)] = -1;
  tab.optimize(phase1, true, out.pivots);
  tab.purge_artificials();

  std::vector<Rational> cost(tab.width(), Rational(0));
  for (std::size_t j = 0; j < lp.variables(); ++j) cost[j] = lp.objective[j];

  // feasibility: every row must hold at the phase-one point
  const auto x0 = tab.primal();
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x0.size(); ++j)
      if (lp.rows[i][j] != 0) lhs += lp.rows[i][j] * x0[j];
    const bool ok = lp.senses[i] == Sense::LessEqual      ? lhs <= lp.rhs[i]
                    : lp.senses[i] == Sense::GreaterEqual ? lhs >= lp.rhs[i]
                                                          : lhs == lp.rhs[i];
    if (!ok) {
      out.status = LpStatus::Infeasible;
      return out;
    }
  }

  if (!tab.optimize(cost, false, out.pivots)) {
    out.status = LpStatus::Unbounded;
    out.x = tab.primal();
    out.ray = tab.ray(tab.unbounded_col);
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x = tab.primal();
  out.duals = tab.duals(cost);
  out.value = 0;
  for (std::size_t j = 0; j < out.x.size(); ++j) out.value += lp.objective[j] * out.x[j];
  out.value.canonicalize();
  return out;
}

} // namespace nrt
