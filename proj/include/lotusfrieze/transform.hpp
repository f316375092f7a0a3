#pragma once

/**
 * @file transform.hpp
 * @brief Frieze reduction along a diagonal and lotus mutation.
 *
 * Cutting a triangulated m-gon along a diagonal [i,j] (i < j) leaves two
 * triangulated polygons sharing that diagonal as a side. The kept piece is
 * the one holding the side [1,m], i.e. the labels 1..i and j..m; the dropped
 * piece holds the labels i..j. Both are relabeled consecutively in the order
 * of their original labels.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/polygon.hpp"
#include "lotusfrieze/resolution.hpp"

namespace lotusfrieze {

struct ReductionResult {
  Diagonal cut;
  TriangulatedPolygon polygon;  ///< kept piece, holds the side [1,m]
  Quiddity quiddity;            ///< from the closed formula in frieze entries
  TriangulatedPolygon dropped;  ///< the other piece
  std::vector<int> kept_labels;     ///< original label of each kept vertex
  std::vector<int> dropped_labels;  ///< original label of each dropped vertex
};

namespace detail {

/// Restriction of p to the given original labels (in increasing order).
inline TriangulatedPolygon restrict_polygon(const TriangulatedPolygon& p, const std::vector<int>& labels,
                                            const Diagonal& cut) {
  std::map<int, int> relabel;
  for (std::size_t k = 0; k < labels.size(); ++k) relabel[labels[k]] = static_cast<int>(k) + 1;
  std::vector<Diagonal> diagonals;
  for (const auto& d : p.diagonals()) {
    if (d == cut) continue;
    const auto a = relabel.find(d.first);
    const auto b = relabel.find(d.second);
    if (a != relabel.end() && b != relabel.end()) diagonals.push_back(make_diagonal(a->second, b->second));
  }
  return TriangulatedPolygon(static_cast<int>(labels.size()), std::move(diagonals));
}

}  // namespace detail

/// Quiddity of the kept piece written in entries of the frieze of p:
///   j < m:  (a_1..a_{i-1}, p_{i-1,j}, p_{i,j+1}, a_{j+1}..a_m), p_{0,j} = p_{m,j}
///   j = m:  (a_1..a_{i-1}, p_{i-1,m}, p_{1,i})
inline Quiddity reduced_quiddity(const Frieze& f, const Diagonal& cut) {
  const int m = f.period();
  const auto [i, j] = cut;
  const Quiddity& a = f.quiddity();
  auto small = [](const BigInt& v) {
    if (!fits_int64(v)) throw DomainError("reduce: quiddity entry out of range");
    return static_cast<std::int64_t>(v);
  };
  auto p = [&](int s, int t) { return small(f.plucker(s == 0 ? m : s, t)); };
  std::vector<std::int64_t> values;
  for (int t = 1; t < i; ++t) values.push_back(a.at_label(t));
  if (j < m) {
    values.push_back(p(i - 1, j));
    values.push_back(p(i, j + 1));
    for (int t = j + 1; t <= m; ++t) values.push_back(a.at_label(t));
  } else {
    values.push_back(p(i - 1, m));
    values.push_back(p(1, i));
  }
  return Quiddity(std::move(values));
}

inline ReductionResult reduce(const TriangulatedPolygon& p, const Diagonal& d) {
  const Diagonal cut = make_diagonal(d.first, d.second);
  if (!p.has_diagonal(cut)) throw DomainError("reduce: " + to_string(cut) + " is not a diagonal of " + p.str());
  const auto [i, j] = cut;
  std::vector<int> kept;
  std::vector<int> dropped;
  for (int t = 1; t <= p.size(); ++t) {
    if (t <= i || t >= j) kept.push_back(t);
    if (t >= i && t <= j) dropped.push_back(t);
  }
  TriangulatedPolygon kept_polygon = detail::restrict_polygon(p, kept, cut);
  TriangulatedPolygon dropped_polygon = detail::restrict_polygon(p, dropped, cut);
  Quiddity q = reduced_quiddity(frieze_of_triangulation(p), cut);
  return {cut, std::move(kept_polygon), std::move(q), std::move(dropped_polygon), std::move(kept), std::move(dropped)};
}

struct PartialReduction {
  Lotus sublotus;
  std::vector<Diagonal> steps;  ///< cuts, each in the labels of the polygon it is applied to
  TriangulatedPolygon polygon;
  Quiddity quiddity;
  std::vector<int> labels;  ///< original label (in the polygon of the full lotus) of each vertex
};

/// One reduction per partial resolution of l: starting from the polygon of
/// l, cut off the petals outside the sublotus one removed subtree at a time,
/// along the base edge of the subtree's root petal.
inline std::vector<PartialReduction> reduction_chain(const Lotus& l) {
  const LotusPolygon full = polygon_of_lotus(l);
  std::map<LatticePoint, int> label_of;
  for (std::size_t k = 0; k < full.vertices.size(); ++k) label_of[full.vertices[k]] = static_cast<int>(k) + 1;

  std::vector<PartialReduction> out;
  for (const auto& partial : partial_resolutions(l)) {
    const Lotus& sub = partial.lotus;
    TriangulatedPolygon polygon = full.polygon;
    Quiddity quiddity = quiddity_of(polygon);
    std::vector<int> labels(static_cast<std::size_t>(polygon.size()));
    for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = static_cast<int>(k) + 1;
    std::vector<Diagonal> steps;

    for (const auto& petal : l.petals()) {
      if (petal.is_base() || sub.contains(petal) || !sub.contains(petal.parent())) continue;
      // petal roots a removed subtree; its base edge is a diagonal of the current piece
      const int u = label_of.at(petal.u());
      const int v = label_of.at(petal.v());
      const auto iu = std::find(labels.begin(), labels.end(), u);
      const auto iv = std::find(labels.begin(), labels.end(), v);
      const Diagonal cut = make_diagonal(static_cast<int>(iu - labels.begin()) + 1,
                                         static_cast<int>(iv - labels.begin()) + 1);
      ReductionResult r = reduce(polygon, cut);
      std::vector<int> next_labels;
      for (int t : r.kept_labels) next_labels.push_back(labels[static_cast<std::size_t>(t - 1)]);
      steps.push_back(cut);
      polygon = std::move(r.polygon);
      quiddity = std::move(r.quiddity);
      labels = std::move(next_labels);
    }
    out.push_back({sub, std::move(steps), std::move(polygon), std::move(quiddity), std::move(labels)});
  }
  return out;
}

/// The quadrilateral of a mutation. The diagonal [a,b] separates the petal
/// `parent` = d(a,c) (in some order) with apex b = a + c from its child
/// `child` with apex d = a + b. Flipping replaces [a,b] by [c,d].
struct MutationQuad {
  LatticePoint a, b, c, d;
  Petal parent;
  Petal child;
  int type;  ///< 1 if a is the first basis vector of the parent, 2 otherwise
};

inline MutationQuad mutation_quad(const Lotus& l, const LatticePoint& p, const LatticePoint& q) {
  for (const auto& child : l.petals()) {
    if (child.is_base()) continue;
    const bool matches = (child.u() == p && child.v() == q) || (child.u() == q && child.v() == p);
    if (!matches) continue;
    const Petal parent = child.parent();
    const LatticePoint b = parent.apex();
    const LatticePoint a = child.u() == b ? child.v() : child.u();
    const bool first = parent.u() == a;
    const LatticePoint c = first ? parent.v() : parent.u();
    return {a, b, c, child.apex(), parent, child, first ? 1 : 2};
  }
  throw DomainError("mutation: " + p.str() + "-" + q.str() + " is not an inner edge of the lotus");
}

inline MutationQuad mutation_quad(const Lotus& l, const Diagonal& d) {
  const LotusPolygon lp = polygon_of_lotus(l);
  const Diagonal dd = make_diagonal(d.first, d.second);
  if (!lp.polygon.has_diagonal(dd)) {
    throw DomainError("mutation: " + to_string(dd) + " is not a diagonal of the lotus polygon " + lp.polygon.str());
  }
  return mutation_quad(l, lp.vertices[static_cast<std::size_t>(dd.first - 1)],
                       lp.vertices[static_cast<std::size_t>(dd.second - 1)]);
}

/// Flip the diagonal in the polygon of l (labels from v_1 = (0,1)) and embed
/// the result again with v_1 = (0,1). The result is unmarked.
inline Lotus mutate_lotus(const Lotus& l, const Diagonal& d) {
  const LotusPolygon lp = polygon_of_lotus(l);
  const Diagonal dd = make_diagonal(d.first, d.second);
  if (!lp.polygon.has_diagonal(dd)) {
    throw DomainError("mutation: " + to_string(dd) + " is not a diagonal of the lotus polygon " + lp.polygon.str());
  }
  return lotus_of_polygon(flip(lp.polygon, dd), 0);
}

/// True if `descendant` is reached from `ancestor` through children.
inline bool is_descendant(const Petal& descendant, const Petal& ancestor) {
  Petal p = descendant;
  while (!p.is_base()) {
    p = p.parent();
    if (p == ancestor) return true;
  }
  return false;
}

/// Petals of l outside the subtree strictly below the quadrilateral's parent petal.
inline std::set<Petal> alpha_part(const Lotus& l, const MutationQuad& quad) {
  std::set<Petal> out;
  for (const auto& p : l.petals()) {
    if (!is_descendant(p, quad.parent)) out.insert(p);
  }
  return out;
}

}  // namespace lotusfrieze
