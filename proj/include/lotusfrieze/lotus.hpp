#pragma once

/**
 * @file lotus.hpp
 * @brief Petals, Newton lotuses and the lattice embedding of triangulated
 *        polygons.
 *
 * A petal is the lattice triangle with vertices u, v, u + v for a basis
 * (u, v) of Z^2 with nonnegative coordinates and det(u, v) = 1. Its children
 * are (u, u + v) and (u + v, v). Every such basis descends to the base basis
 * (e1, e2) by repeatedly taking parents, so a finite set of petals closed
 * under parents is a triangulated polygon with sides [e1, e2] and a lateral
 * boundary running from e1 = (1,0) to e2 = (0,1).
 *
 * The ray of slope n/q is spanned by the primitive point (q, n); slope 0 is
 * e1 and slope infinity is e2.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/contfrac.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/polygon.hpp"

namespace lotusfrieze {

struct LatticePoint {
  BigInt x = 0;
  BigInt y = 0;

  LatticePoint() = default;
  LatticePoint(BigInt x_, BigInt y_) : x(std::move(x_)), y(std::move(y_)) {}
  LatticePoint(long x_, long y_) : x(x_), y(y_) {}

  bool nonnegative() const { return x >= 0 && y >= 0; }
  bool is_zero() const { return x == 0 && y == 0; }

  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticePoint operator*(const BigInt& k, const LatticePoint& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline const LatticePoint& e1() {
  static const LatticePoint p{1, 0};
  return p;
}
inline const LatticePoint& e2() {
  static const LatticePoint p{0, 1};
  return p;
}

inline BigInt det(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }

/// Primitive point on the ray of slope x; e1 for 0 and e2 for infinity.
inline LatticePoint primitive_point(const Rational& slope) {
  if (slope.is_infinite()) return e2();
  return {slope.den(), slope.num()};
}

/// Slope y/x of a nonzero point in the first quadrant.
inline Rational slope_of(const LatticePoint& p) {
  if (!p.nonnegative() || p.is_zero()) throw DomainError("slope_of: point " + p.str() + " is not in the first quadrant");
  if (p.x == 0) return Rational::infinity();
  return Rational(p.y, p.x);
}

class Petal {
 public:
  Petal(LatticePoint u, LatticePoint v) : u_(std::move(u)), v_(std::move(v)) {
    if (!u_.nonnegative() || !v_.nonnegative()) {
      throw DomainError("petal: basis " + u_.str() + "," + v_.str() + " leaves the first quadrant");
    }
    if (det(u_, v_) != 1) {
      throw DomainError("petal: det" + u_.str() + v_.str() + " = " + det(u_, v_).str() + ", must be 1");
    }
  }

  static Petal base() { return Petal(e1(), e2()); }

  const LatticePoint& u() const noexcept { return u_; }
  const LatticePoint& v() const noexcept { return v_; }
  LatticePoint apex() const { return u_ + v_; }

  bool is_base() const { return u_ == e1() && v_ == e2(); }

  Petal left_child() const { return Petal(u_, apex()); }
  Petal right_child() const { return Petal(apex(), v_); }

  Petal parent() const {
    if (is_base()) throw DomainError("petal: the base petal has no parent");
    const LatticePoint d = u_ - v_;
    if (d.nonnegative()) return Petal(d, v_);
    return Petal(u_, v_ - u_);
  }

  /// Vertices u, apex, v.
  std::vector<LatticePoint> vertices() const { return {u_, apex(), v_}; }

  bool has_vertex(const LatticePoint& p) const { return p == u_ || p == v_ || p == apex(); }

  std::string str() const { return "d(" + u_.str() + "," + v_.str() + ")"; }

  friend bool operator==(const Petal& a, const Petal& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  friend bool operator!=(const Petal& a, const Petal& b) { return !(a == b); }
  friend bool operator<(const Petal& a, const Petal& b) {
    return a.u_ < b.u_ || (a.u_ == b.u_ && a.v_ < b.v_);
  }

 private:
  LatticePoint u_;
  LatticePoint v_;
};

using Edge = std::pair<LatticePoint, LatticePoint>;

inline Edge make_edge(const LatticePoint& a, const LatticePoint& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Lotus {
 public:
  Lotus() = default;

  Lotus(std::set<Petal> petals, std::set<LatticePoint> marks = {})
      : petals_(std::move(petals)), marks_(std::move(marks)) {
    if (!petals_.empty() && !petals_.count(Petal::base())) {
      throw DomainError("lotus: a nonempty lotus contains the base petal d((1,0),(0,1))");
    }
    for (const auto& p : petals_) {
      if (!p.is_base() && !petals_.count(p.parent())) {
        throw DomainError("lotus: petal " + p.str() + " is present but its parent " + p.parent().str() + " is not");
      }
    }
    for (const auto& mark : marks_) {
      if (mark == e1() || mark == e2()) continue;
      const bool on_lotus = std::any_of(petals_.begin(), petals_.end(),
                                        [&](const Petal& p) { return p.has_vertex(mark); });
      if (!on_lotus) throw DomainError("lotus: mark " + mark.str() + " is not a vertex of the lotus");
    }
  }

  const std::set<Petal>& petals() const noexcept { return petals_; }
  const std::set<LatticePoint>& marks() const noexcept { return marks_; }

  /// No petals: the segment [e1, e2].
  bool degenerate() const noexcept { return petals_.empty(); }
  std::size_t size() const noexcept { return petals_.size(); }

  bool contains(const Petal& p) const { return petals_.count(p) != 0; }

  Lotus unmarked() const { return Lotus(petals_); }
  Lotus with_marks(std::set<LatticePoint> marks) const { return Lotus(petals_, std::move(marks)); }

  std::set<LatticePoint> vertices() const {
    std::set<LatticePoint> out{e1(), e2()};
    for (const auto& p : petals_) out.insert(p.apex());
    return out;
  }

  friend bool operator==(const Lotus& a, const Lotus& b) {
    return a.petals_ == b.petals_ && a.marks_ == b.marks_;
  }

 private:
  std::set<Petal> petals_;
  std::set<LatticePoint> marks_;
};

/// Petal chain met by the ray of slope x, marked at its primitive point.
inline Lotus lotus_of_slope(const Rational& slope) {
  if (slope.is_zero()) return Lotus({}, {e1()});
  if (slope.is_infinite()) return Lotus({}, {e2()});
  const BigInt& n = slope.num();
  const BigInt& q = slope.den();
  std::set<Petal> petals;
  Petal current = Petal::base();
  for (;;) {
    petals.insert(current);
    const LatticePoint w = current.apex();
    // compare n/q with w.y/w.x
    const BigInt lhs = n * w.x;
    const BigInt rhs = w.y * q;
    if (lhs == rhs) return Lotus(std::move(petals), {w});
    current = lhs < rhs ? current.left_child() : current.right_child();
  }
}

inline Lotus lotus_of_slopes(const std::vector<Rational>& slopes) {
  std::set<Petal> petals;
  std::set<LatticePoint> marks;
  for (const auto& s : slopes) {
    Lotus l = lotus_of_slope(s);
    petals.insert(l.petals().begin(), l.petals().end());
    marks.insert(l.marks().begin(), l.marks().end());
  }
  return Lotus(std::move(petals), std::move(marks));
}

/// Number of petals having p as a vertex.
inline std::size_t incident_petals(const Lotus& l, const LatticePoint& p) {
  return static_cast<std::size_t>(
      std::count_if(l.petals().begin(), l.petals().end(), [&](const Petal& petal) { return petal.has_vertex(p); }));
}

inline std::map<LatticePoint, std::size_t> incidence_counts(const Lotus& l) {
  std::map<LatticePoint, std::size_t> out;
  for (const auto& p : l.petals()) {
    for (const auto& v : p.vertices()) ++out[v];
  }
  return out;
}

/// Vertices of the boundary minus the open base segment, from e1 to e2.
inline std::vector<LatticePoint> lateral_boundary(const Lotus& l) {
  if (l.degenerate()) return {e1(), e2()};
  std::map<Edge, int> edge_use;
  for (const auto& p : l.petals()) {
    const auto vs = p.vertices();
    for (std::size_t k = 0; k < 3; ++k) ++edge_use[make_edge(vs[k], vs[(k + 1) % 3])];
  }
  const Edge base_edge = make_edge(e1(), e2());
  std::map<LatticePoint, std::vector<LatticePoint>> next;
  for (const auto& [edge, uses] : edge_use) {
    if (uses != 1 || edge == base_edge) continue;
    next[edge.first].push_back(edge.second);
    next[edge.second].push_back(edge.first);
  }
  std::vector<LatticePoint> path{e1()};
  LatticePoint previous = e2();  // forbids stepping back along the base edge
  while (path.back() != e2()) {
    const auto& options = next.at(path.back());
    const LatticePoint* step = nullptr;
    for (const auto& candidate : options) {
      if (candidate != previous) step = &candidate;
    }
    if (step == nullptr || path.size() > edge_use.size() + 1) {
      throw DomainError("lateral_boundary: boundary is not a simple path from e1 to e2");
    }
    previous = path.back();
    path.push_back(*step);
  }
  return path;
}

/// Non-basic vertices that belong to a single petal.
inline std::set<LatticePoint> pinching_points(const Lotus& l) {
  std::set<LatticePoint> out;
  for (const auto& [point, count] : incidence_counts(l)) {
    if (count == 1 && point != e1() && point != e2()) out.insert(point);
  }
  return out;
}

inline bool is_sublotus(const Lotus& a, const Lotus& b) {
  return std::includes(b.petals().begin(), b.petals().end(), a.petals().begin(), a.petals().end());
}

/// Vertices v_1..v_m of the unique embedding with v_1 = (0,1) and
/// v_2 = (1, a_k), from v_{l+1} = a_{k+l-1} v_l - v_{l-1} with v_0 = (-1,0).
inline std::vector<LatticePoint> embed_polygon(const Quiddity& q, std::int64_t k) {
  const Frieze check(q);  // rejects sequences that are not CC quiddities
  const int m = q.size();
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(m));
  LatticePoint before{-1, 0};
  LatticePoint current = e2();
  for (int l = 1; l <= m; ++l) {
    out.push_back(current);
    LatticePoint next = BigInt(q.coxeter(k + l - 1)) * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return out;
}

/// Index l (1..m) of the embedded vertex carrying polygon label L for anchor k.
inline int embedded_index(int label, std::int64_t k, int m) {
  const std::int64_t r = ((label - 1 - k) % m + m) % m;
  return static_cast<int>(r) + 1;
}

/// Petal spanned by three lattice points forming a unimodular triangle whose
/// apex is the sum of the other two.
inline Petal petal_of_triangle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const LatticePoint pts[3] = {a, b, c};
  for (int apex = 0; apex < 3; ++apex) {
    const LatticePoint& p = pts[(apex + 1) % 3];
    const LatticePoint& r = pts[(apex + 2) % 3];
    if (p + r != pts[apex]) continue;
    if (det(p, r) == 1) return Petal(p, r);
    if (det(r, p) == 1) return Petal(r, p);
  }
  throw DomainError("triangle " + a.str() + b.str() + c.str() + " is not a petal");
}

inline Lotus lotus_of_polygon(const TriangulatedPolygon& p, std::int64_t k) {
  const auto points = embed_polygon(quiddity_of(p), k);
  const int m = p.size();
  std::set<Petal> petals;
  for (const auto& t : p.triangles()) {
    auto at = [&](int label) -> const LatticePoint& {
      return points[static_cast<std::size_t>(embedded_index(label, k, m) - 1)];
    };
    petals.insert(petal_of_triangle(at(t[0]), at(t[1]), at(t[2])));
  }
  return Lotus(std::move(petals));
}

struct LotusPolygon {
  std::vector<LatticePoint> vertices;  ///< v_1 = (0,1), ..., v_m = (1,0)
  TriangulatedPolygon polygon;
};

/// The triangulated polygon underlying a lotus, labeled from v_1 = (0,1)
/// along the lateral boundary to v_m = (1,0).
inline LotusPolygon polygon_of_lotus(const Lotus& l) {
  if (l.degenerate()) throw DomainError("polygon_of_lotus: the segment lotus has no polygon");
  std::vector<LatticePoint> vertices = lateral_boundary(l);
  std::reverse(vertices.begin(), vertices.end());
  const int m = static_cast<int>(vertices.size());
  std::map<LatticePoint, int> label;
  for (int i = 0; i < m; ++i) label[vertices[static_cast<std::size_t>(i)]] = i + 1;
  std::set<Diagonal> diagonals;
  for (const auto& petal : l.petals()) {
    const auto vs = petal.vertices();
    for (std::size_t a = 0; a < 3; ++a) {
      const int i = label.at(vs[a]);
      const int j = label.at(vs[(a + 1) % 3]);
      if (!is_polygon_edge(i, j, m)) diagonals.insert(make_diagonal(i, j));
    }
  }
  TriangulatedPolygon polygon(m, {diagonals.begin(), diagonals.end()});
  return {std::move(vertices), std::move(polygon)};
}

}  // namespace lotusfrieze
