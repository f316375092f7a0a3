#pragma once

/**
 * @file polygon.hpp
 * @brief Triangulated convex polygons, quiddity sequences, flips and the
 *        enumeration of all triangulations of an m-gon.
 *
 * Vertices are labeled 1..m clockwise. A diagonal is stored as a sorted pair
 * (i, j) with i < j. Crossing and adjacency are decided by cyclic order
 * alone; no coordinates are involved.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/contfrac.hpp"
#include "lotusfrieze/errors.hpp"

namespace lotusfrieze {

using Diagonal = std::pair<int, int>;
using Triangle = std::array<int, 3>;

inline Diagonal make_diagonal(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

inline std::string to_string(const Diagonal& d) {
  return "[" + std::to_string(d.first) + "," + std::to_string(d.second) + "]";
}

/// True if [i,j] is a side of the m-gon.
inline bool is_polygon_edge(int i, int j, int m) {
  const Diagonal d = make_diagonal(i, j);
  return d.second - d.first == 1 || (d.first == 1 && d.second == m);
}

/// Endpoints strictly interleave in cyclic order. Shared endpoints do not cross.
inline bool diagonals_cross(const Diagonal& d1, const Diagonal& d2, int m) {
  const auto [a, b] = make_diagonal(d1.first, d1.second);
  const auto [c, d] = make_diagonal(d2.first, d2.second);
  for (int v : {a, b, c, d}) {
    if (v < 1 || v > m) throw DomainError("diagonals_cross: vertex out of range 1.." + std::to_string(m));
  }
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

/// Per-vertex triangle counts a_1..a_m of a triangulated m-gon.
///
/// values()[0] belongs to vertex 1. Construction checks the necessary
/// conditions (a_i >= 1, two entries equal to 1, sum 3(m-2)); whether the
/// sequence is realized by a triangulation is checked by
/// triangulation_of_quiddity and by Frieze.
class Quiddity {
 public:
  explicit Quiddity(std::vector<std::int64_t> values) : values_(std::move(values)) {
    const auto m = static_cast<std::int64_t>(values_.size());
    if (m < 3) throw DomainError("quiddity: needs at least 3 entries");
    int ones = 0;
    BigInt sum = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 1) {
        throw DomainError("quiddity: entry " + std::to_string(i + 1) + " must be >= 1");
      }
      if (values_[i] == 1) ++ones;
      sum += values_[i];
    }
    if (ones < 2) throw DomainError("quiddity: a triangulation has at least two ears (entries equal to 1)");
    if (sum != 3 * (m - 2)) {
      throw DomainError("quiddity: entries must sum to 3(m-2) = " + std::to_string(3 * (m - 2)) +
                        ", got " + sum.str());
    }
  }

  Quiddity(std::initializer_list<std::int64_t> values)
      : Quiddity(std::vector<std::int64_t>(values)) {}

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  /// Entry at vertex label 1..m.
  std::int64_t at_label(int label) const { return values_.at(static_cast<std::size_t>(label - 1)); }

  /// Coxeter-indexed entry a_t: the value at vertex (t mod m) + 1.
  std::int64_t coxeter(std::int64_t t) const {
    const std::int64_t m = size();
    return values_[static_cast<std::size_t>(((t % m) + m) % m)];
  }

  /// The same cyclic sequence read starting at vertex `start` (1-based).
  Quiddity rotated(int start) const {
    std::vector<std::int64_t> out(values_.size());
    const int m = size();
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = at_label(((start - 1 + i) % m + m) % m + 1);
    return Quiddity(std::move(out));
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(values_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Quiddity&, const Quiddity&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// True if `b` is a cyclic rotation of `a`.
inline bool cyclically_equal(const Quiddity& a, const Quiddity& b) {
  if (a.size() != b.size()) return false;
  for (int s = 1; s <= a.size(); ++s) {
    if (a.rotated(s) == b) return true;
  }
  return false;
}

class TriangulatedPolygon {
 public:
  TriangulatedPolygon(int m, std::vector<Diagonal> diagonals) : m_(m), diagonals_(std::move(diagonals)) {
    if (m_ < 3) throw DomainError("polygon: needs at least 3 vertices");
    for (auto& d : diagonals_) {
      d = make_diagonal(d.first, d.second);
      if (d.first < 1 || d.second > m_) throw DomainError("polygon: diagonal " + to_string(d) + " out of range");
      if (d.first == d.second || is_polygon_edge(d.first, d.second, m_)) {
        throw DomainError("polygon: " + to_string(d) + " is not an inner diagonal");
      }
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
      throw DomainError("polygon: repeated diagonal");
    }
    if (static_cast<int>(diagonals_.size()) != m_ - 3) {
      throw DomainError("polygon: a triangulation of an m-gon has m-3 = " + std::to_string(m_ - 3) +
                        " diagonals, got " + std::to_string(diagonals_.size()));
    }
    for (std::size_t x = 0; x < diagonals_.size(); ++x) {
      for (std::size_t y = x + 1; y < diagonals_.size(); ++y) {
        if (diagonals_cross(diagonals_[x], diagonals_[y], m_)) {
          throw DomainError("polygon: diagonals " + to_string(diagonals_[x]) + " and " +
                            to_string(diagonals_[y]) + " cross");
        }
      }
    }
  }

  int size() const noexcept { return m_; }
  const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }

  bool has_diagonal(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), make_diagonal(d.first, d.second));
  }

  /// Side of the polygon or diagonal of the triangulation.
  bool is_arc(int i, int j) const {
    return i != j && (is_polygon_edge(i, j, m_) || has_diagonal({i, j}));
  }

  /// Neighbors of each vertex in clockwise order starting after it.
  std::vector<std::vector<int>> neighbors() const {
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(m_ + 1));
    auto link = [&](int a, int b) {
      nb[static_cast<std::size_t>(a)].push_back(b);
      nb[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int i = 1; i < m_; ++i) link(i, i + 1);
    link(m_, 1);
    for (const auto& d : diagonals_) link(d.first, d.second);
    for (int v = 1; v <= m_; ++v) {
      auto& list = nb[static_cast<std::size_t>(v)];
      auto offset = [&](int w) { return ((w - v) % m_ + m_) % m_; };
      std::sort(list.begin(), list.end(), [&](int a, int b) { return offset(a) < offset(b); });
    }
    return nb;
  }

  /// The m-2 triangles, each as a sorted label triple, in sorted order.
  std::vector<Triangle> triangles() const {
    const auto nb = neighbors();
    std::set<Triangle> out;
    for (int v = 1; v <= m_; ++v) {
      const auto& list = nb[static_cast<std::size_t>(v)];
      for (std::size_t k = 0; k + 1 < list.size(); ++k) {
        Triangle t{v, list[k], list[k + 1]};
        std::sort(t.begin(), t.end());
        out.insert(t);
      }
    }
    return {out.begin(), out.end()};
  }

  /// Vertices incident to exactly one triangle.
  std::vector<int> ears() const {
    std::vector<int> out;
    std::vector<int> degree(static_cast<std::size_t>(m_ + 1), 2);
    for (const auto& d : diagonals_) {
      ++degree[static_cast<std::size_t>(d.first)];
      ++degree[static_cast<std::size_t>(d.second)];
    }
    for (int v = 1; v <= m_; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 2) out.push_back(v);
    }
    return out;
  }

  std::string str() const {
    std::string out = std::to_string(m_) + "-gon {";
    for (std::size_t k = 0; k < diagonals_.size(); ++k) {
      if (k) out += ",";
      out += to_string(diagonals_[k]);
    }
    return out + "}";
  }

  friend bool operator==(const TriangulatedPolygon&, const TriangulatedPolygon&) = default;
  friend auto operator<=>(const TriangulatedPolygon&, const TriangulatedPolygon&) = default;

 private:
  struct Unchecked {};
  TriangulatedPolygon(Unchecked, int m, std::vector<Diagonal> sorted)
      : m_(m), diagonals_(std::move(sorted)) {}

  friend void for_each_triangulation(int, const std::function<void(const TriangulatedPolygon&)>&);

  int m_;
  std::vector<Diagonal> diagonals_;
};

inline Quiddity quiddity_of(const TriangulatedPolygon& p) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(p.size()), 1);
  for (const auto& d : p.diagonals()) {
    ++values[static_cast<std::size_t>(d.first - 1)];
    ++values[static_cast<std::size_t>(d.second - 1)];
  }
  return Quiddity(std::move(values));
}

/// Rebuilds the unique triangulation with quiddity q by cutting ears.
inline TriangulatedPolygon triangulation_of_quiddity(const Quiddity& q) {
  const int m = q.size();
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<std::int64_t> count = q.values();
  std::vector<Diagonal> diagonals;

  while (labels.size() > 3) {
    const std::size_t n = labels.size();
    std::size_t ear = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (count[k] == 1) {
        ear = k;
        break;
      }
    }
    if (ear == n) {
      throw DomainError("quiddity " + q.str() + " is not realized by a triangulation: no ear left with " +
                        std::to_string(n) + " vertices remaining");
    }
    const std::size_t before = (ear + n - 1) % n;
    const std::size_t after = (ear + 1) % n;
    if (--count[before] < 1 || --count[after] < 1) {
      throw DomainError("quiddity " + q.str() + " is not realized by a triangulation: cutting the ear at vertex " +
                        std::to_string(labels[ear]) + " leaves a neighbor without triangles");
    }
    diagonals.push_back(make_diagonal(labels[before], labels[after]));
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(ear));
    count.erase(count.begin() + static_cast<std::ptrdiff_t>(ear));
  }
  if (count[0] != 1 || count[1] != 1 || count[2] != 1) {
    throw DomainError("quiddity " + q.str() + " is not realized by a triangulation: last triangle does not close");
  }
  TriangulatedPolygon p(m, std::move(diagonals));
  if (quiddity_of(p) != q) {
    throw DomainError("quiddity " + q.str() + " is not realized by a triangulation");
  }
  return p;
}

/// Quiddity (1, b_1..b_r, 1, b'_s..b'_1) of the two-eared polygon of the
/// value n/q > 1 with expansion b and dual expansion b' of n/(n-q).
inline Quiddity quiddity_of_cf(const HJExpansion& e) {
  if (!e.exceeds_one()) throw DomainError("polygon_of_cf: expansion must have all terms >= 2 (value > 1)");
  const BigInt m = e.polygon_size();
  if (m > 100000) throw DomainError("polygon_of_cf: polygon with " + m.str() + " vertices is too large");
  const KidohDuality duality = kidoh_dual(hj_evaluate(e));
  std::vector<std::int64_t> values{1};
  for (const auto& b : e.terms()) values.push_back(static_cast<std::int64_t>(b));
  values.push_back(1);
  const auto& dual = duality.dual.terms();
  for (auto it = dual.rbegin(); it != dual.rend(); ++it) values.push_back(static_cast<std::int64_t>(*it));
  return Quiddity(std::move(values));
}

inline TriangulatedPolygon polygon_of_cf(const HJExpansion& e) {
  return triangulation_of_quiddity(quiddity_of_cf(e));
}

/// The diagonal that replaces d when flipping: it joins the two vertices
/// opposite d in the quadrilateral formed by the triangles on either side.
inline Diagonal opposite_diagonal(const TriangulatedPolygon& p, const Diagonal& d) {
  const Diagonal dd = make_diagonal(d.first, d.second);
  if (!p.has_diagonal(dd)) throw DomainError("flip: " + to_string(dd) + " is not a diagonal of the triangulation");
  std::vector<int> apex;
  for (const auto& t : p.triangles()) {
    const bool has_a = std::find(t.begin(), t.end(), dd.first) != t.end();
    const bool has_b = std::find(t.begin(), t.end(), dd.second) != t.end();
    if (has_a && has_b) {
      for (int v : t) {
        if (v != dd.first && v != dd.second) apex.push_back(v);
      }
    }
  }
  if (apex.size() != 2) throw DomainError("flip: diagonal " + to_string(dd) + " does not bound two triangles");
  return make_diagonal(apex[0], apex[1]);
}

inline TriangulatedPolygon flip(const TriangulatedPolygon& p, const Diagonal& d) {
  const Diagonal replacement = opposite_diagonal(p, d);
  std::vector<Diagonal> diagonals = p.diagonals();
  std::replace(diagonals.begin(), diagonals.end(), make_diagonal(d.first, d.second), replacement);
  return TriangulatedPolygon(p.size(), std::move(diagonals));
}

inline BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative");
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline constexpr int kMaxEnumerationSize = 16;

/// Visits every triangulation of the m-gon once. The edge [1,m] lies in
/// exactly one triangle (1,k,m); the two sub-polygons on either side of it
/// are triangulated independently.
inline void for_each_triangulation(int m, const std::function<void(const TriangulatedPolygon&)>& visit) {
  if (m < 3 || m > kMaxEnumerationSize) {
    throw DomainError("enumerate_triangulations: m must lie in 3.." + std::to_string(kMaxEnumerationSize));
  }
  std::vector<Diagonal> chosen;
  std::vector<Diagonal> pending{{1, m}};

  std::function<void()> step = [&]() {
    if (pending.empty()) {
      std::vector<Diagonal> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      visit(TriangulatedPolygon(TriangulatedPolygon::Unchecked{}, m, std::move(sorted)));
      return;
    }
    const Diagonal span = pending.back();
    pending.pop_back();
    if (span.second - span.first < 2) {
      step();
    } else {
      for (int k = span.first + 1; k < span.second; ++k) {
        const std::size_t chosen_mark = chosen.size();
        const std::size_t pending_mark = pending.size();
        if (k - span.first >= 2) {
          chosen.push_back({span.first, k});
          pending.push_back({span.first, k});
        }
        if (span.second - k >= 2) {
          chosen.push_back({k, span.second});
          pending.push_back({k, span.second});
        }
        step();
        chosen.resize(chosen_mark);
        pending.resize(pending_mark);
      }
    }
    pending.push_back(span);
  };
  step();
}

inline std::vector<TriangulatedPolygon> enumerate_triangulations(int m) {
  std::vector<TriangulatedPolygon> out;
  for_each_triangulation(m, [&](const TriangulatedPolygon& p) { out.push_back(p); });
  return out;
}

}  // namespace lotusfrieze
