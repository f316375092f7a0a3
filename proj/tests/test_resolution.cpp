#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/polygon.hpp"
#include "lotusfrieze/polyparse.hpp"
#include "lotusfrieze/resolution.hpp"
#include "oracles.hpp"

using namespace lotusfrieze;

namespace {

using Weights = std::vector<std::int64_t>;

}  // namespace

TEST(ResolutionGraph, Validation) {
  EXPECT_THROW(ResolutionGraph({-1, 0}), DomainError);
  EXPECT_THROW(ResolutionGraph({-1}, {2}), DomainError);
  const ResolutionGraph g({-3, -1, -2}, {2});
  EXPECT_EQ(g.reversed(), ResolutionGraph({-2, -1, -3}, {2}));
}

TEST(GraphOfLotus, Examples) {
  EXPECT_EQ(graph_of_lotus(lotus_of_slope(Rational(3, 2))), ResolutionGraph({-3, -1, -2}, {2}));
  EXPECT_EQ(graph_of_lotus(lotus_of_slope(Rational(11, 8))), ResolutionGraph({-4, -3, -1, -2, -3, -2}, {3}));
  EXPECT_EQ(graph_of_lotus(lotus_of_slope(Rational(1))), ResolutionGraph({-1}, {1}));
  EXPECT_THROW(graph_of_lotus(lotus_of_slope(Rational(0))), DomainError);
}

TEST(GraphOfLotus, WeightsAreTheInnerQuiddityAndSumRule) {
  for (int m = 3; m <= 8; ++m) {
    for_each_triangulation(m, [&](const TriangulatedPolygon& p) {
      const Quiddity q = quiddity_of(p);
      const ResolutionGraph g = graph_of_lotus(lotus_of_polygon(p, 0));
      // graph runs from e1 = v_m back to e2 = v_1
      Weights expected;
      for (int v = m - 1; v >= 2; --v) expected.push_back(-q.at_label(v));
      EXPECT_EQ(g.weights, expected);
      std::int64_t total = q.at_label(1) + q.at_label(m);
      for (auto w : g.weights) total -= w;
      EXPECT_EQ(total, 3 * (m - 2));
    });
  }
}

TEST(PlaneCurve, Validation) {
  EXPECT_THROW(PlaneCurve({}), DomainError);
  EXPECT_THROW(PlaneCurve({{2, 4}}), DomainError);
  EXPECT_THROW(PlaneCurve({{3, 2}, {6, 4}}), DomainError);
  EXPECT_THROW(PlaneCurve({{0, 1}}), DomainError);
  const PlaneCurve c({{2, 1}, {1, 2}});
  EXPECT_EQ(c.factors().front(), (PlaneCurve::Factor{1, 2}));
  EXPECT_EQ(c.str(), "(x - y^2)*(x^2 - y)");
  EXPECT_EQ(c.to_poly(), parse_poly("(x - y^2)*(x^2 - y)"));
}

TEST(CurveOfLotus, Examples) {
  EXPECT_EQ(curve_of_lotus(lotus_of_slope(Rational(3, 2))).str(), "x^3 - y^2");
  EXPECT_EQ(curve_of_lotus(lotus_of_slope(Rational(11, 8))).str(), "x^11 - y^8");
  EXPECT_EQ(curve_of_lotus(Lotus({Petal::base()})).str(), "x - y");
  EXPECT_THROW(curve_of_lotus(Lotus()), DomainError);
}

TEST(NewtonFan, Examples) {
  EXPECT_EQ(newton_fan(parse_poly("x^3 - y^2")).slopes, (std::vector<Rational>{Rational(3, 2)}));
  EXPECT_EQ(newton_fan(parse_poly("x^6 + x^4*y + x*y^3 + y^4")).slopes,
            (std::vector<Rational>{Rational(1), Rational(3, 2), Rational(2)}));
  EXPECT_EQ(newton_fan(parse_poly("x - y")).slopes, (std::vector<Rational>{Rational(1)}));
  EXPECT_THROW(newton_fan(Poly2()), DomainError);
  EXPECT_THROW(newton_fan(std::vector<Exponent>{}), DomainError);
}

TEST(NewtonFan, LotusOfThePaperQuartic) {
  const Lotus l = lotus_of_poly(parse_poly("x^6 + x^4*y + x*y^3 + y^4"));
  EXPECT_EQ(l.petals(), lotus_of_slope(Rational(3, 2)).petals());
  EXPECT_EQ(l.marks().size(), 3u);
}

TEST(Nondegenerate, Examples) {
  EXPECT_TRUE(is_newton_nondegenerate(parse_poly("x^3 - y^2")));
  EXPECT_FALSE(is_newton_nondegenerate(parse_poly("(y^2 - x^3)^5 - x^14*y")));
  EXPECT_TRUE(is_newton_nondegenerate(parse_poly("x^2")));
  EXPECT_FALSE(is_newton_nondegenerate(parse_poly("(x^2 - y^3)^2")));
  EXPECT_THROW(is_newton_nondegenerate(Poly2()), DomainError);
}

TEST(Nondegenerate, DistinctSlopeBinomialProductsPass) {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<PlaneCurve::Factor> factors;
    std::set<Rational> seen;
    const int count = gen.uniform(1, 4);
    while (static_cast<int>(factors.size()) < count) {
      const std::int64_t d = gen.uniform(1, 9);
      const std::int64_t c = gen.uniform(1, 9);
      if (std::gcd(d, c) != 1 || !seen.insert(Rational(d, c)).second) continue;
      factors.emplace_back(d, c);
    }
    const PlaneCurve curve(factors);
    EXPECT_TRUE(is_newton_nondegenerate(curve.to_poly())) << curve.str();
    // the fan recovers the slopes; the lotus recovers a minimal curve with the same lotus
    EXPECT_EQ(newton_fan(curve.to_poly()).slopes, curve.slopes());
    const Lotus l = lotus_of_poly(curve.to_poly());
    const PlaneCurve minimal = curve_of_lotus(l);
    EXPECT_EQ(lotus_of_poly(minimal.to_poly()).unmarked(), l.unmarked());
    const auto all = curve.slopes();
    for (const auto& s : minimal.slopes()) EXPECT_TRUE(std::find(all.begin(), all.end(), s) != all.end());
  }
}

TEST(RoundTrip, CurveFanLotus) {
  for (long n = 1; n <= 30; ++n) {
    for (long q = 1; q <= 30; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Lotus l = lotus_of_slope(Rational(n, q));
      const PlaneCurve c = curve_of_lotus(l);
      EXPECT_EQ(lotus_of_slopes(newton_fan(c.to_poly()).slopes).petals(), l.petals());
    }
  }
}

TEST(Count, Examples) {
  EXPECT_EQ(count_resolution_graphs(1), 1);
  EXPECT_EQ(count_resolution_graphs(3), 3);
  EXPECT_EQ(count_resolution_graphs(6), 66);
  EXPECT_THROW(count_resolution_graphs(0), DomainError);
}

TEST(Count, MatchesClassOracle) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(count_resolution_graphs(n), oracle::chain_classes(n)) << n;
  }
}

TEST(Count, ClassOracleAgreesWithLibraryGraphs) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Weights> classes;
    for_each_triangulation(n + 2, [&](const TriangulatedPolygon& p) {
      const Weights w = graph_of_lotus(lotus_of_polygon(p, 0)).weights;
      const Weights r(w.rbegin(), w.rend());
      classes.insert(std::min(w, r));
    });
    EXPECT_EQ(classes.size(), oracle::chain_classes(n)) << n;
  }
}

TEST(PartialResolutions, RunningExample) {
  const Lotus l = lotus_of_slope(Rational(11, 8));
  const auto partials = partial_resolutions(l);
  ASSERT_EQ(partials.size(), 6u);
  // chains as drawn, read from the e2 side
  const std::vector<Weights> drawn = {
      {-2, -3, -2, -1, -3, -4}, {-2, -3, -1, -2, -4}, {-2, -2, -1, -4}, {-2, -1, -3}, {-1, -2}, {-1},
  };
  for (std::size_t k = 0; k < drawn.size(); ++k) {
    EXPECT_EQ(partials[k].graph.reversed().weights, drawn[k]);
    EXPECT_TRUE(is_sublotus(partials[k].lotus, l));
  }
  std::set<BigInt> entries;
  for (const auto& [key, value] : frieze_of_triangulation(polygon_of_lotus(l).polygon).fundamental_domain()) {
    entries.insert(value);
  }
  for (const auto& p : partials)
    for (auto w : p.graph.weights) EXPECT_TRUE(entries.count(BigInt(-w)));
}

TEST(PartialResolutions, SmallCases) {
  const auto cusp = partial_resolutions(lotus_of_slope(Rational(3, 2)));
  ASSERT_EQ(cusp.size(), 3u);
  EXPECT_EQ(cusp[1].graph.reversed().weights, (Weights{-1, -2}));
  EXPECT_EQ(cusp[2].graph.weights, (Weights{-1}));
  EXPECT_EQ(partial_resolutions(Lotus({Petal::base()})).size(), 1u);
  EXPECT_THROW(partial_resolutions(Lotus()), DomainError);
}

TEST(PartialResolutions, CountsParentClosedSubsetsOfBranchedLotus) {
  // branched lotus: base with both children and a grandchild on each side
  const Lotus l = lotus_of_slopes({Rational(1, 3), Rational(3)});
  // downsets of two chains of length 2 hanging from the root: 3 * 3
  EXPECT_EQ(partial_resolutions(l).size(), 9u);
  std::size_t brute = 0;
  const std::vector<Petal> ps(l.petals().begin(), l.petals().end());
  for (unsigned mask = 0; mask < (1u << ps.size()); ++mask) {
    std::set<Petal> subset;
    for (std::size_t k = 0; k < ps.size(); ++k)
      if (mask & (1u << k)) subset.insert(ps[k]);
    try {
      if (!subset.empty()) {
        Lotus sub(subset);
        ++brute;
      }
    } catch (const DomainError&) {
    }
  }
  EXPECT_EQ(brute, 9u);
}
