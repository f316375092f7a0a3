#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/polygon.hpp"
#include "lotusfrieze/resolution.hpp"
#include "lotusfrieze/transform.hpp"
#include "oracles.hpp"

using namespace lotusfrieze;

namespace {

using Weights = std::vector<std::int64_t>;

/// Negated inner entries a_{m-1}..a_2 of a lotus-polygon quiddity: the graph order.
Weights inner_weights(const Quiddity& q) {
  Weights out;
  for (int v = q.size() - 1; v >= 2; --v) out.push_back(-q.at_label(v));
  return out;
}

}  // namespace

TEST(Reduce, RunningExample) {
  const Lotus l = lotus_of_slope(Rational(11, 8));
  const TriangulatedPolygon p = polygon_of_lotus(l).polygon;
  const ReductionResult r = reduce(p, {4, 6});
  EXPECT_EQ(r.quiddity, (Quiddity{2, 2, 3, 1, 2, 4, 1}));
  EXPECT_EQ(quiddity_of(r.polygon), r.quiddity);
  // the five-vertex chain of the second partial graph, read from the e2 side
  Weights drawn = inner_weights(r.quiddity);
  std::reverse(drawn.begin(), drawn.end());
  EXPECT_EQ(drawn, (Weights{-2, -3, -1, -2, -4}));
  EXPECT_EQ(r.polygon.size() + r.dropped.size(), p.size() + 2);
  EXPECT_EQ(r.kept_labels, (std::vector<int>{1, 2, 3, 4, 6, 7, 8}));
  EXPECT_EQ(r.dropped_labels, (std::vector<int>{4, 5, 6}));
  EXPECT_THROW(reduce(p, {1, 3}), DomainError);
}

TEST(Reduce, EarCut) {
  // cutting off the ear at vertex i leaves a_{i-1} - 1 and a_{i+1} - 1
  const Quiddity q{1, 2, 2, 3, 2, 1, 3, 4};
  const auto p = triangulation_of_quiddity(q);
  const auto r = reduce(p, {5, 7});
  EXPECT_EQ(r.quiddity, (Quiddity{1, 2, 2, 3, 1, 2, 4}));
  EXPECT_EQ(r.dropped, TriangulatedPolygon(3, {}));

  const TriangulatedPolygon square(4, {{1, 3}});
  EXPECT_EQ(reduce(square, {1, 3}).quiddity, (Quiddity{1, 1, 1}));
  EXPECT_EQ(reduce(square, {1, 3}).dropped, TriangulatedPolygon(3, {}));
}

TEST(Reduce, FormulaMatchesRecountAndPiecesAreFriezes) {
  for (int m = 4; m <= 8; ++m) {
    for_each_triangulation(m, [&](const TriangulatedPolygon& p) {
      for (const auto& d : p.diagonals()) {
        const ReductionResult r = reduce(p, d);
        EXPECT_EQ(r.quiddity.values(), oracle::recount_piece(m, p.diagonals(), r.kept_labels)) << p.str();
        EXPECT_EQ(quiddity_of(r.dropped).values(), oracle::recount_piece(m, p.diagonals(), r.dropped_labels));
        EXPECT_NO_THROW(Frieze(r.quiddity));
        EXPECT_NO_THROW(Frieze(quiddity_of(r.dropped)));
        EXPECT_EQ(r.polygon.size() + r.dropped.size(), m + 2);
      }
    });
  }
}

TEST(Reduce, RandomizedUpToTwelve) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = gen.uniform(9, 12);
    const TriangulatedPolygon p(m, gen.triangulation(m));
    const auto& d = p.diagonals()[static_cast<std::size_t>(gen.uniform(0, m - 4))];
    const ReductionResult r = reduce(p, d);
    EXPECT_EQ(r.quiddity.values(), oracle::recount_piece(m, p.diagonals(), r.kept_labels));
  }
}

TEST(ReductionChain, RunningExample) {
  const Lotus l = lotus_of_slope(Rational(11, 8));
  const auto chain = reduction_chain(l);
  const auto partials = partial_resolutions(l);
  ASSERT_EQ(chain.size(), 6u);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    EXPECT_EQ(chain[k].sublotus, partials[k].lotus);
    EXPECT_EQ(inner_weights(chain[k].quiddity), partials[k].graph.weights);
    EXPECT_EQ(quiddity_of(chain[k].polygon), chain[k].quiddity);
  }
  EXPECT_TRUE(chain.front().steps.empty());
}

TEST(ReductionChain, SmallCases) {
  const auto cusp = reduction_chain(lotus_of_slope(Rational(3, 2)));
  ASSERT_EQ(cusp.size(), 3u);
  EXPECT_EQ(inner_weights(cusp[1].quiddity), (Weights{-2, -1}));
  EXPECT_EQ(inner_weights(cusp[2].quiddity), (Weights{-1}));
  const auto base = reduction_chain(Lotus({Petal::base()}));
  ASSERT_EQ(base.size(), 1u);
  EXPECT_EQ(base[0].quiddity, (Quiddity{1, 1, 1}));
}

TEST(ReductionChain, BranchedLotusesNeedSeveralCuts) {
  const Lotus l = lotus_of_slopes({Rational(2, 5), Rational(5, 3), Rational(7, 2)});
  const auto chain = reduction_chain(l);
  const auto partials = partial_resolutions(l);
  ASSERT_EQ(chain.size(), partials.size());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    EXPECT_EQ(inner_weights(chain[k].quiddity), partials[k].graph.weights);
    EXPECT_EQ(lotus_of_polygon(chain[k].polygon, 0).petals(), chain[k].sublotus.petals());
  }
  EXPECT_TRUE(std::any_of(chain.begin(), chain.end(), [](const auto& r) { return r.steps.size() >= 2; }));
}

TEST(Mutation, PentagonCycle) {
  Lotus current = lotus_of_slopes({Rational(1, 2), Rational(2)}).unmarked();
  EXPECT_EQ(curve_of_lotus(current).str(), "(x - y^2)*(x^2 - y)");
  const std::vector<Diagonal> moves = {{3, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}};
  const std::vector<std::string> curves = {"x^3 - y", "x^3 - y^2", "x^2 - y^3", "x - y^3", "(x - y^2)*(x^2 - y)"};
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const Lotus next = mutate_lotus(current, moves[k]);
    EXPECT_EQ(curve_of_lotus(next).str(), curves[k]);
    const Diagonal back = opposite_diagonal(polygon_of_lotus(current).polygon, moves[k]);
    EXPECT_EQ(mutate_lotus(next, back), current);
    current = next;
  }
}

TEST(Mutation, PropertiesOnAllSmallPolygons) {
  for (int m = 4; m <= 8; ++m) {
    for_each_triangulation(m, [&](const TriangulatedPolygon& p) {
      const Lotus l = lotus_of_polygon(p, 0);
      const LotusPolygon lp = polygon_of_lotus(l);
      ASSERT_EQ(lp.polygon, p);
      for (const auto& d : p.diagonals()) {
        const MutationQuad before = mutation_quad(l, d);
        const Lotus next = mutate_lotus(l, d);
        const Diagonal e = opposite_diagonal(p, d);
        const MutationQuad after = mutation_quad(next, e);
        // involution
        EXPECT_EQ(mutate_lotus(next, e), l);
        // the polygon vertices carrying a and c keep their lattice positions
        const LotusPolygon lp_next = polygon_of_lotus(next);
        const auto position = [&](const LatticePoint& x) {
          const auto it = std::find(lp.vertices.begin(), lp.vertices.end(), x);
          return lp_next.vertices[static_cast<std::size_t>(it - lp.vertices.begin())];
        };
        EXPECT_EQ(position(before.a), before.a);
        EXPECT_EQ(position(before.c), before.c);
        // types swap
        EXPECT_NE(after.type, before.type);
        // base side untouched
        EXPECT_EQ(alpha_part(l, before), alpha_part(next, after));
        // quiddity: a, b lose a triangle, c, d gain one
        const Quiddity q0 = quiddity_of(p);
        const Quiddity q1 = quiddity_of(polygon_of_lotus(next).polygon);
        const auto label = [&](const LatticePoint& x) {
          const auto it = std::find(lp.vertices.begin(), lp.vertices.end(), x);
          return static_cast<int>(it - lp.vertices.begin()) + 1;
        };
        EXPECT_EQ(q1.at_label(label(before.a)), q0.at_label(label(before.a)) - 1);
        EXPECT_EQ(q1.at_label(label(before.b)), q0.at_label(label(before.b)) - 1);
        EXPECT_EQ(q1.at_label(label(before.c)), q0.at_label(label(before.c)) + 1);
        EXPECT_EQ(q1.at_label(label(before.d)), q0.at_label(label(before.d)) + 1);
      }
    });
  }
}

TEST(Mutation, RejectsBadDiagonals) {
  const Lotus l = lotus_of_slope(Rational(3, 2));
  EXPECT_THROW(mutate_lotus(l, {1, 2}), DomainError);
  EXPECT_THROW(mutate_lotus(l, {1, 3}), DomainError);
  EXPECT_THROW(mutation_quad(l, e1(), e2()), DomainError);
}
