#include "nrt/reference_oracles.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

namespace nrt::oracle {

namespace {

std::vector<int> digits(const SpaceParams& p, std::uint64_t idx) {
  std::vector<int> d(static_cast<std::size_t>(p.r * p.n));
  for (auto& x : d) {
    x = static_cast<int>(idx % static_cast<std::uint64_t>(p.q));
    idx /= static_cast<std::uint64_t>(p.q);
  }
  return d;
}

std::uint64_t ambient(const SpaceParams& p, const SearchBudget& budget) {
  p.validate();
  const Integer size = p.ambient_size();
  if (size > budget.max_ambient) throw BudgetExceeded("oracle: ambient space exceeds the search budget");
  return size.get_ui();
}

class Clock {
public:
  explicit Clock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void tick() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("oracle: node budget exhausted");
    if ((nodes_ & 0xfffff) == 0) {
      const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > budget_.max_seconds) throw BudgetExceeded("oracle: time budget exhausted");
    }
  }

private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

// Maximum clique among `verts` with adjacency adj (bitsets).
class CliqueSearch {
public:
  CliqueSearch(std::vector<std::vector<std::uint64_t>> adj, Clock& clock) : adj_(std::move(adj)), clock_(clock) {}

  std::size_t run(const std::vector<std::size_t>& cand) {
    expand(0, cand);
    return best_;
  }

private:
  void expand(std::size_t size, const std::vector<std::size_t>& cand) {
    clock_.tick();
    if (cand.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (size + (cand.size() - k) <= best_) return;
      const std::size_t v = cand[k];
      std::vector<std::size_t> next;
      for (std::size_t j = k + 1; j < cand.size(); ++j)
        if (adj_[v][cand[j] / 64] >> (cand[j] % 64) & 1U) next.push_back(cand[j]);
      expand(size + 1, next);
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  Clock& clock_;
  std::size_t best_ = 0;
};

std::vector<std::vector<std::uint64_t>> far_graph(const SpaceParams& p, const std::vector<std::uint64_t>& verts, int d) {
  const std::size_t m = verts.size();
  std::vector<std::vector<std::uint64_t>> adj(m, std::vector<std::uint64_t>((m + 63) / 64, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (distance_of_indices(p, verts[a], verts[b]) >= d) {
        adj[a][b / 64] |= std::uint64_t{1} << (b % 64);
        adj[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
  return adj;
}

} // namespace

int weight_of_index(const SpaceParams& p, std::uint64_t idx) {
  const auto d = digits(p, idx);
  int w = 0;
  for (int b = 0; b < p.n; ++b)
    for (int j = p.r; j >= 1; --j)
      if (d[static_cast<std::size_t>(b * p.r + j - 1)] != 0) {
        w += j;
        break;
      }
  return w;
}

int distance_of_indices(const SpaceParams& p, std::uint64_t a, std::uint64_t b) {
  const auto da = digits(p, a);
  const auto db = digits(p, b);
  std::uint64_t diff = 0;
  for (std::size_t k = da.size(); k-- > 0;)
    diff = diff * static_cast<std::uint64_t>(p.q) + static_cast<std::uint64_t>((da[k] - db[k] + p.q) % p.q);
  return weight_of_index(p, diff);
}

Integer brute_force_max_code(const SpaceParams& params, int d, const SearchBudget& budget) {
  const std::uint64_t N = ambient(params, budget);
  if (d <= 1) return Integer(static_cast<unsigned long>(N));
  // codes are translated so that they contain 0
  std::vector<std::uint64_t> verts;
  for (std::uint64_t v = 1; v < N; ++v)
    if (weight_of_index(params, v) >= d) verts.push_back(v);
  Clock clock(budget);
  CliqueSearch search(far_graph(params, verts, d), clock);
  std::vector<std::size_t> cand(verts.size());
  for (std::size_t k = 0; k < cand.size(); ++k) cand[k] = k;
  return Integer(static_cast<unsigned long>(1 + search.run(cand)));
}

Integer constant_weight_max(const SpaceParams& params, int d, int w, const SearchBudget& budget) {
  const std::uint64_t N = ambient(params, budget);
  std::vector<std::uint64_t> verts;
  for (std::uint64_t v = 0; v < N; ++v)
    if (weight_of_index(params, v) == w) verts.push_back(v);
  if (verts.empty()) return 0;
  Clock clock(budget);
  CliqueSearch search(far_graph(params, verts, d), clock);
  std::vector<std::size_t> cand(verts.size());
  for (std::size_t k = 0; k < cand.size(); ++k) cand[k] = k;
  return Integer(static_cast<unsigned long>(search.run(cand)));
}

namespace {

class OoaSearch {
public:
  OoaSearch(const SpaceParams& p, int t, std::uint64_t N, Clock& clock) : p_(p), N_(N), clock_(clock) {
    // every composition (t_1..t_n) with 0 <= t_i <= r, sum t
    std::vector<int> comp(static_cast<std::size_t>(p.n), 0);
    build(comp, 0, t);
    patterns_ = 1;
    for (int k = 0; k < t; ++k) patterns_ *= static_cast<std::uint64_t>(p.q);
    code_.assign(projections_.size(), std::vector<std::uint64_t>(N));
    for (std::size_t s = 0; s < projections_.size(); ++s)
      for (std::uint64_t v = 0; v < N; ++v) {
        const auto d = digits(p, v);
        std::uint64_t c = 0;
        for (int pos : projections_[s]) c = c * static_cast<std::uint64_t>(p.q) + static_cast<std::uint64_t>(d[static_cast<std::size_t>(pos)]);
        code_[s][v] = c;
      }
  }

  bool exists(std::uint64_t rows) {
    if (rows % patterns_ != 0) return false;
    theta_ = rows / patterns_;
    rows_ = rows;
    counts_.assign(projections_.size(), std::vector<std::uint64_t>(patterns_, 0));
    // translation invariance: the array may be assumed to contain 0
    if (!add(0)) return false;
    const bool ok = dfs(1, 0);
    return ok;
  }

private:
  void build(std::vector<int>& comp, int block, int left) {
    if (block == p_.n) {
      if (left == 0) {
        std::vector<int> pos;
        for (int b = 0; b < p_.n; ++b)
          for (int j = 0; j < comp[static_cast<std::size_t>(b)]; ++j) pos.push_back(b * p_.r + j);
        projections_.push_back(pos);
      }
      return;
    }
    for (int k = 0; k <= std::min(p_.r, left); ++k) {
      comp[static_cast<std::size_t>(block)] = k;
      build(comp, block + 1, left - k);
    }
  }

  bool add(std::uint64_t v) {
    bool ok = true;
    for (std::size_t s = 0; s < projections_.size(); ++s)
      if (++counts_[s][code_[s][v]] > theta_) ok = false;
    return ok;
  }
  void remove(std::uint64_t v) {
    for (std::size_t s = 0; s < projections_.size(); ++s) --counts_[s][code_[s][v]];
  }

  bool dfs(std::uint64_t placed, std::uint64_t from) {
    clock_.tick();
    if (placed == rows_) return true;
    for (std::uint64_t v = from; v < N_; ++v) {
      const bool ok = add(v);
      if (ok && dfs(placed + 1, v)) return true;
      remove(v);
    }
    return false;
  }

  SpaceParams p_;
  std::uint64_t N_;
  Clock& clock_;
  std::vector<std::vector<int>> projections_;
  std::vector<std::vector<std::uint64_t>> code_;
  std::vector<std::vector<std::uint64_t>> counts_;
  std::uint64_t patterns_ = 1;
  std::uint64_t theta_ = 1;
  std::uint64_t rows_ = 1;
};

} // namespace

Integer brute_force_min_ooa(const SpaceParams& params, int t, const SearchBudget& budget) {
  const std::uint64_t N = ambient(params, budget);
  if (t < 0 || t > params.length()) throw std::out_of_range("brute_force_min_ooa: need 0 <= t <= rn");
  if (t == 0) return 1;
  Clock clock(budget);
  OoaSearch search(params, t, N, clock);
  std::uint64_t qt = 1;
  for (int k = 0; k < t; ++k) qt *= static_cast<std::uint64_t>(params.q);
  for (std::uint64_t rows = qt;; rows += qt)
    if (search.exists(rows)) return Integer(static_cast<unsigned long>(rows));
}

} // namespace nrt::oracle
