#pragma once

/**
 * @file oracles.hpp
 * @brief Slow, independent reference computations and random generators used
 *        only by the tests. Nothing here calls the library algorithm it is
 *        meant to check.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Determinant of the tridiagonal matrix with diagonal ys and ones beside it,
/// by Gaussian elimination over the rationals.
inline Int tridiagonal_det(const std::vector<long>& ys) {
  const std::size_t n = ys.size();
  if (n == 0) return 1;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = ys[i];
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = 1;
  }
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rat factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return boost::multiprecision::numerator(det);
}

/// C_n from C_{k+1} = sum C_i C_{k-i}.
inline Int catalan(int n) {
  std::vector<Int> c{1};
  for (int k = 0; k < n; ++k) {
    Int next = 0;
    for (int i = 0; i <= k; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
    c.push_back(next);
  }
  return c[static_cast<std::size_t>(n)];
}

using Diag = std::pair<int, int>;

inline bool crosses(const Diag& x, const Diag& y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

/// Every set of m-3 pairwise non-crossing inner diagonals, as sorted lists.
inline std::vector<std::vector<Diag>> triangulations_by_subsets(int m) {
  std::vector<Diag> inner;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      if (!(i == 1 && j == m)) inner.emplace_back(i, j);
    }
  }
  std::vector<std::vector<Diag>> out;
  std::vector<Diag> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == m - 3) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t k = from; k < inner.size(); ++k) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && !crosses(c, inner[k]);
      if (!ok) continue;
      chosen.push_back(inner[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline bool is_arc(int i, int j, int m, const std::set<Diag>& diags) {
  if (i > j) std::swap(i, j);
  return j - i == 1 || (i == 1 && j == m) || diags.count({i, j}) != 0;
}

/// Triangles as label triples i < j < k whose three sides are arcs.
inline std::vector<std::vector<int>> triangles(int m, const std::vector<Diag>& diagonals) {
  const std::set<Diag> diags(diagonals.begin(), diagonals.end());
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        if (is_arc(i, j, m, diags) && is_arc(j, k, m, diags) && is_arc(i, k, m, diags)) out.push_back({i, j, k});
  return out;
}

/// Per-vertex triangle counts from the triangle list.
inline std::vector<std::int64_t> recount_quiddity(int m, const std::vector<Diag>& diagonals) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(m), 0);
  for (const auto& t : triangles(m, diagonals))
    for (int v : t) ++q[static_cast<std::size_t>(v - 1)];
  return q;
}

/// Quiddity of the sub-polygon spanned by `labels`: triangles with all three
/// vertices among them, counted per vertex in the order of `labels`.
inline std::vector<std::int64_t> recount_piece(int m, const std::vector<Diag>& diagonals, const std::vector<int>& labels) {
  const std::set<int> keep(labels.begin(), labels.end());
  std::map<int, std::int64_t> count;
  for (const auto& t : triangles(m, diagonals)) {
    if (keep.count(t[0]) && keep.count(t[1]) && keep.count(t[2]))
      for (int v : t) ++count[v];
  }
  std::vector<std::int64_t> out;
  for (int v : labels) out.push_back(count[v]);
  return out;
}

/// All labeled quiddities of (n+2)-gons, grown by inserting ears: a 1 between
/// two neighbors, both of which gain a triangle.
inline std::set<std::vector<int>> quiddities_by_ear_insertion(int m) {
  std::set<std::vector<int>> level{{1, 1, 1}};
  for (int size = 3; size < m; ++size) {
    std::set<std::vector<int>> next;
    for (const auto& q : level) {
      for (int gap = 0; gap < size; ++gap) {
        std::vector<int> grown;
        for (int k = 0; k < size; ++k) {
          grown.push_back(q[static_cast<std::size_t>(k)]);
          if (k == gap) grown.push_back(1);
        }
        // neighbors of the inserted 1 at index gap+1
        const std::size_t at = static_cast<std::size_t>(gap + 1);
        ++grown[at - 1];
        ++grown[(at + 1) % grown.size()];
        next.insert(grown);
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Chains a_2..a_{n+1} of the (n+2)-gon quiddities, counted up to reversal.
inline std::size_t chain_classes(int n) {
  std::set<std::vector<int>> classes;
  for (const auto& q : quiddities_by_ear_insertion(n + 2)) {
    std::vector<int> chain(q.begin() + 1, q.end() - 1);
    std::vector<int> rev(chain.rbegin(), chain.rend());
    classes.insert(std::min(chain, rev));
  }
  return classes.size();
}

using Exp = std::pair<std::int64_t, std::int64_t>;
using TermMap = std::map<Exp, Int>;

inline TermMap multiply(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Compact Newton edges by brute force: pairs of support points such that
/// every support point lies on or above the line through them, the pair has
/// negative slope, and no third support point lies strictly between them on
/// the line with both being extreme.
inline std::set<std::pair<Exp, Exp>> newton_edges(const std::vector<Exp>& support) {
  std::set<std::pair<Exp, Exp>> out;
  for (const auto& p : support) {
    for (const auto& q : support) {
      if (!(p.first < q.first && p.second > q.second)) continue;
      // normal (a, b) = (p.y - q.y, q.x - p.x) with a, b > 0; line value a x + b y
      const Int a = p.second - q.second;
      const Int b = q.first - p.first;
      const Int level = a * p.first + b * p.second;
      bool below = false;
      bool beyond = false;
      for (const auto& r : support) {
        const Int v = a * r.first + b * r.second;
        if (v < level) below = true;
        if (v == level && (r.first < p.first || r.first > q.first)) beyond = true;
      }
      if (!below && !beyond) out.insert({p, q});
    }
  }
  return out;
}

/// Uniformly seeded generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<long> ints(std::size_t n, long lo, long hi) {
    std::vector<long> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(std::uniform_int_distribution<long>(lo, hi)(rng_));
    return out;
  }

  /// Random triangulation of the m-gon: pick the apex over [1,m], recurse.
  std::vector<Diag> triangulation(int m) {
    std::vector<Diag> out;
    auto rec = [&](auto&& self, int lo, int hi) -> void {
      if (hi - lo < 2) return;
      const int k = uniform(lo + 1, hi - 1);
      if (k - lo >= 2) out.emplace_back(lo, k);
      if (hi - k >= 2) out.emplace_back(k, hi);
      self(self, lo, k);
      self(self, k, hi);
    };
    rec(rec, 1, m);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Sparse polynomial with small exponents and coefficients.
  TermMap poly(int terms, int max_exp, int max_coef) {
    TermMap out;
    for (int t = 0; t < terms; ++t) {
      const Exp e{uniform(0, max_exp), uniform(0, max_exp)};
      int c = 0;
      while (c == 0) c = uniform(-max_coef, max_coef);
      out[e] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
