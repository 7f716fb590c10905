#include "doctest.h"

#include "nrt/delsarte_lp.hpp"
#include "nrt/reference_oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>

using namespace nrt;

namespace {

// Floating LP by vertex enumeration: every basis of the <= system with slacks.
// Only for tiny dense problems max c.x, A x <= b, x >= 0.
double vertex_enumeration(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                          const std::vector<double>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  // constraints as hyperplanes: rows of A, and x_j = 0
  std::vector<std::vector<double>> H;
  std::vector<double> h;
  for (std::size_t i = 0; i < m; ++i) {
    H.push_back(A[i]);
    h.push_back(b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    H.push_back(e);
    h.push_back(0.0);
  }
  double best = -INFINITY;
  const std::size_t total = H.size();
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t from) {
    if (k == n) {
      Eigen::MatrixXd M(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < n; ++j) M(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j)) = H[pick[a]][j];
        rhs(static_cast<Eigen::Index>(a)) = h[pick[a]];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
      if (lu.rank() < static_cast<Eigen::Index>(n)) return;
      Eigen::VectorXd x = lu.solve(rhs);
      for (std::size_t j = 0; j < n; ++j)
        if (x(static_cast<Eigen::Index>(j)) < -1e-9) return;
      for (std::size_t i = 0; i < m; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < n; ++j) s += A[i][j] * x(static_cast<Eigen::Index>(j));
        if (s > b[i] + 1e-9) return;
      }
      double v = 0;
      for (std::size_t j = 0; j < n; ++j) v += c[j] * x(static_cast<Eigen::Index>(j));
      best = std::max(best, v);
      return;
    }
    for (std::size_t i = from; i < total; ++i) {
      pick[k] = i;
      rec(k + 1, i + 1);
    }
  };
  rec(0, 0);
  return best;
}

} // namespace

TEST_CASE("simplex toy problems") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.add_row({Rational(1)}, Sense::LessEqual, Rational(1));
  auto s = simplex_solve(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == 1);
  CHECK(s.duals[0] == 1);

  // degenerate tie: max x + y, x + y <= 1, x <= 1, y <= 1
  LinearProgram tie;
  tie.objective = {Rational(1), Rational(1)};
  tie.add_row({Rational(1), Rational(1)}, Sense::LessEqual, Rational(1));
  tie.add_row({Rational(1), Rational(0)}, Sense::LessEqual, Rational(1));
  tie.add_row({Rational(0), Rational(1)}, Sense::LessEqual, Rational(1));
  s = simplex_solve(tie);
  CHECK(s.value == 1);
  tie.objective = {Rational(1), Rational(1)};
  std::swap(tie.rows[1], tie.rows[2]);
  CHECK(simplex_solve(tie).value == 1);

  // unbounded with ray
  LinearProgram un;
  un.objective = {Rational(1), Rational(0)};
  un.add_row({Rational(-1), Rational(1)}, Sense::LessEqual, Rational(2));
  s = simplex_solve(un);
  REQUIRE(s.status == LpStatus::Unbounded);
  CHECK(s.ray[0] > 0);
  CHECK(-s.ray[0] + s.ray[1] <= 0);

  // infeasible
  LinearProgram inf;
  inf.objective = {Rational(1)};
  inf.add_row({Rational(1)}, Sense::GreaterEqual, Rational(3));
  inf.add_row({Rational(1)}, Sense::LessEqual, Rational(2));
  CHECK(simplex_solve(inf).status == LpStatus::Infeasible);

  // equality and >= rows, negative right-hand sides
  LinearProgram mix;
  mix.objective = {Rational(-1), Rational(-2)};
  mix.add_row({Rational(1), Rational(1)}, Sense::Equal, Rational(3));
  mix.add_row({Rational(-1), Rational(0)}, Sense::LessEqual, Rational(-1));
  s = simplex_solve(mix);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == -3);
  // strong duality
  Rational dual_obj = s.duals[0] * 3 + s.duals[1] * -1;
  CHECK(dual_obj == s.value);
}

TEST_CASE("simplex matches floating vertex enumeration") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = 2 + rng() % 3;
    LinearProgram lp;
    std::vector<std::vector<double>> A(m, std::vector<double>(n));
    std::vector<double> b(m);
    std::vector<double> c(n);
    for (std::size_t j = 0; j < n; ++j) {
      const int v = static_cast<int>(rng() % 9) - 2;
      lp.objective.emplace_back(v);
      c[j] = v;
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        const int v = static_cast<int>(rng() % 7) - 1;
        row.emplace_back(v);
        A[i][j] = v;
      }
      const int rhs = static_cast<int>(rng() % 10);
      b[i] = rhs;
      lp.add_row(row, Sense::LessEqual, Rational(rhs));
    }
    // box keeps every instance bounded
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(n, Rational(0));
      row[j] = 1;
      lp.add_row(row, Sense::LessEqual, Rational(5));
      std::vector<double> drow(n, 0.0);
      drow[j] = 1.0;
      A.push_back(drow);
      b.push_back(5.0);
    }
    const auto s = simplex_solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value.get_d() == doctest::Approx(vertex_enumeration(A, b, c)).epsilon(1e-6));
    Rational dual_obj = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      CHECK(s.duals[i] >= 0);
      dual_obj += s.duals[i] * lp.rhs[i];
    }
    CHECK(dual_obj == s.value);
  }
}

TEST_CASE("code LP pinned values") {
  CHECK(solve_code_lp({2, 1, 3}, 3).bound == 2);
  CHECK(solve_code_lp({2, 2, 1}, 2).bound == 2);
  for (const SpaceParams& p : {SpaceParams{2, 2, 2}, SpaceParams{3, 1, 2}, SpaceParams{2, 1, 4}})
    CHECK(solve_code_lp(p, 1).bound == Rational(p.ambient_size()));
  CHECK_THROWS_AS(solve_code_lp({2, 2, 2}, 0), std::out_of_range);
  CHECK(solve_code_lp({2, 2, 2}, 5).bound == 1);
}

TEST_CASE("OOA LP pinned values") {
  CHECK(solve_ooa_lp({2, 1, 3}, 2).bound == 4);
  for (const SpaceParams& p : {SpaceParams{2, 2, 2}, SpaceParams{3, 1, 2}, SpaceParams{2, 1, 3}}) {
    CHECK(solve_ooa_lp(p, 0).bound == 1);
    CHECK(solve_ooa_lp(p, p.length()).bound == Rational(p.ambient_size()));
  }
}

TEST_CASE("LP certificates are accepted and certify the LP value") {
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n) {
      const SpaceParams p{2, r, n};
      for (int d = 1; d <= p.length() + 1; ++d) {
        const auto res = solve_code_lp(p, d);
        const auto chk = check_certificate(res.certificate);
        CAPTURE(r);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(chk.accepted);
        CHECK(chk.code_bound == res.bound);
        CHECK(chk.ooa_bound == Rational(p.ambient_size()) / res.bound);
        // the primal distribution is a feasible Delsarte distribution
        for (const auto& f : enumerate_shapes(r, n)) {
          Rational s = 0;
          for (const auto& [e, a] : res.distribution) s += a * Rational(K_multi(p, f, e));
          CHECK(s >= 0);
        }
      }
    }
}

TEST_CASE("certificate rejection names a witness") {
  const SpaceParams p{2, 2, 2};
  DualCertificate bad{p, 2, Rational(1), {{Shape({1, 0}), Rational(1)}}};
  auto chk = check_certificate(bad);
  CHECK_FALSE(chk.accepted);
  REQUIRE(chk.witness.has_value());
  CHECK(chk.witness->weight() >= 2);

  DualCertificate neg{p, 2, Rational(1), {{Shape({1, 0}), Rational(-1)}}};
  chk = check_certificate(neg);
  CHECK_FALSE(chk.accepted);
  CHECK(*chk.witness == Shape({1, 0}));

  DualCertificate zero_f0{p, 2, Rational(0), {}};
  CHECK_FALSE(check_certificate(zero_f0).accepted);
}

TEST_CASE("universal and affine certificates") {
  for (const SpaceParams& p : {SpaceParams{2, 2, 2}, SpaceParams{3, 2, 2}, SpaceParams{2, 3, 2}})
    for (int d = 1; d <= p.length(); ++d) {
      const auto chk = check_certificate(universal_certificate(p, d));
      CHECK(chk.accepted);
      CHECK(chk.code_bound == Rational(p.ambient_size()));
      const Rational thr = delta_crit(p.q, p.r) * p.length();
      if (Rational(d) > thr) {
        const auto pc = check_certificate(plotkin_certificate(p, d));
        CHECK(pc.accepted);
        CHECK(pc.code_bound == Rational(d) / (Rational(d) - thr));
        CHECK(pc.code_bound >= solve_code_lp(p, d).bound);
      } else {
        CHECK_THROWS(plotkin_certificate(p, d));
      }
    }
}

TEST_CASE("sandwich against brute force") {
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n) {
      const SpaceParams p{2, r, n};
      for (int d = 1; d <= p.length() + 1; ++d) {
        const auto lp = solve_code_lp(p, d);
        CHECK(Rational(oracle::brute_force_max_code(p, d)) <= lp.bound);
      }
      for (int t = 0; t <= p.length(); ++t) {
        const auto lp = solve_ooa_lp(p, t);
        CHECK(lp.bound <= Rational(oracle::brute_force_min_ooa(p, t)));
      }
    }
}

TEST_CASE("determinism") {
  const auto a = solve_code_lp({2, 2, 3}, 3);
  const auto b = solve_code_lp({2, 2, 3}, 3);
  CHECK(a.bound == b.bound);
  CHECK(a.certificate.F == b.certificate.F);
  CHECK(a.distribution == b.distribution);
}
