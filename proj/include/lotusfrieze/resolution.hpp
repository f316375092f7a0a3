#pragma once

/**
 * @file resolution.hpp
 * @brief Dual resolution graphs read off lotuses, plane curves rebuilt from
 *        lotuses, Newton fans of polynomials and partial resolutions.
 *
 * The graph of a lotus is the chain of its lateral vertices between e1 and
 * e2 (both excluded), in boundary order starting next to e1. The weight of a
 * vertex is minus the number of petals containing it. Arrow positions are
 * 1-based indices into that chain.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/contfrac.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/polygon.hpp"
#include "lotusfrieze/polyparse.hpp"

namespace lotusfrieze {

struct ResolutionGraph {
  std::vector<std::int64_t> weights;  ///< self-intersections E_k^2, all <= -1
  std::set<std::size_t> arrows;       ///< 1-based positions carrying a strict transform

  ResolutionGraph() = default;
  ResolutionGraph(std::vector<std::int64_t> w, std::set<std::size_t> a = {})
      : weights(std::move(w)), arrows(std::move(a)) {
    for (auto x : weights) {
      if (x > -1) throw DomainError("resolution graph: weight " + std::to_string(x) + " is not <= -1");
    }
    for (auto k : arrows) {
      if (k < 1 || k > weights.size()) {
        throw DomainError("resolution graph: arrow position " + std::to_string(k) + " outside the chain");
      }
    }
  }

  std::size_t size() const noexcept { return weights.size(); }

  /// The same chain read from the other end.
  ResolutionGraph reversed() const {
    std::vector<std::int64_t> w(weights.rbegin(), weights.rend());
    std::set<std::size_t> a;
    for (auto k : arrows) a.insert(weights.size() + 1 - k);
    return ResolutionGraph(std::move(w), std::move(a));
  }

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

inline ResolutionGraph graph_of_lotus(const Lotus& l) {
  if (l.degenerate()) throw DomainError("graph_of_lotus: the segment lotus has no exceptional curves");
  const auto boundary = lateral_boundary(l);
  const auto counts = incidence_counts(l);
  std::vector<std::int64_t> weights;
  std::set<std::size_t> arrows;
  for (std::size_t k = 1; k + 1 < boundary.size(); ++k) {
    weights.push_back(-static_cast<std::int64_t>(counts.at(boundary[k])));
    if (l.marks().count(boundary[k])) arrows.insert(k);
  }
  return ResolutionGraph(std::move(weights), std::move(arrows));
}

/// f = prod (x^d - y^c) with coprime (d, c) and pairwise distinct slopes d/c.
class PlaneCurve {
 public:
  using Factor = std::pair<std::int64_t, std::int64_t>;  ///< (d, c)

  explicit PlaneCurve(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw DomainError("plane curve: needs at least one factor");
    for (const auto& [d, c] : factors_) {
      if (d < 1 || c < 1) throw DomainError("plane curve: exponents must be positive");
      if (std::gcd(d, c) != 1) {
        throw DomainError("plane curve: factor x^" + std::to_string(d) + " - y^" + std::to_string(c) +
                          " has non-coprime exponents");
      }
    }
    std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
      return Rational(a.first, a.second) < Rational(b.first, b.second);
    });
    for (std::size_t k = 1; k < factors_.size(); ++k) {
      if (BigInt(factors_[k].first) * factors_[k - 1].second == BigInt(factors_[k - 1].first) * factors_[k].second) {
        throw DomainError("plane curve: two factors share the slope " + std::to_string(factors_[k].first) + "/" +
                          std::to_string(factors_[k].second));
      }
    }
  }

  /// Factors sorted by increasing slope d/c.
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  std::vector<Rational> slopes() const {
    std::vector<Rational> out;
    for (const auto& [d, c] : factors_) out.emplace_back(d, c);
    return out;
  }

  Poly2 to_poly() const {
    Poly2 f(1);
    for (const auto& [d, c] : factors_) f = f * (Poly2::monomial(d, 0) - Poly2::monomial(0, c));
    return f;
  }

  std::string str() const {
    auto power = [](const char* var, std::int64_t k) {
      return k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
    };
    auto factor = [&](const Factor& fc) { return power("x", fc.first) + " - " + power("y", fc.second); };
    if (factors_.size() == 1) return factor(factors_.front());
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) out += "*";
      out += "(" + factor(factors_[k]) + ")";
    }
    return out;
  }

  friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;

 private:
  std::vector<Factor> factors_;
};

/// One factor x^d - y^c per pinching point (c, d).
inline PlaneCurve curve_of_lotus(const Lotus& l) {
  if (l.degenerate()) throw DomainError("curve_of_lotus: the segment lotus has no pinching point");
  std::vector<PlaneCurve::Factor> factors;
  for (const auto& p : pinching_points(l)) {
    if (!fits_int64(p.x) || !fits_int64(p.y)) throw DomainError("curve_of_lotus: exponent too large");
    factors.emplace_back(static_cast<std::int64_t>(p.y), static_cast<std::int64_t>(p.x));
  }
  return PlaneCurve(std::move(factors));
}

struct NewtonFan {
  std::vector<Rational> slopes;  ///< increasing
};

/// Slopes of the rays orthogonal to the compact edges of the Newton polygon.
/// The edge from (i1, j1) to (i2, j2) has inner normal (j1 - j2, i2 - i1).
inline NewtonFan newton_fan(const std::vector<Exponent>& support) {
  NewtonFan fan;
  for (const auto& [a, b] : compact_edges(support)) {
    fan.slopes.emplace_back(BigInt(b.first - a.first), BigInt(a.second - b.second));
  }
  std::sort(fan.slopes.begin(), fan.slopes.end());
  return fan;
}

inline NewtonFan newton_fan(const Poly2& f) {
  if (f.is_zero()) throw DomainError("newton_fan: the zero polynomial has no support");
  return newton_fan(f.support());
}

/// Every compact edge restriction is square-free with nonzero constant term.
inline bool is_newton_nondegenerate(const Poly2& f) {
  if (f.is_zero()) throw DomainError("is_newton_nondegenerate: f = 0");
  for (const auto& edge : compact_edges(f)) {
    const UniPoly g = restrict_to_edge(f, edge);
    if (g.front() == 0 || !is_square_free(g)) return false;
  }
  return true;
}

/// Lotus of the Newton fan of f, marked at the primitive points of its slopes.
inline Lotus lotus_of_poly(const Poly2& f, bool require_nondegenerate = true) {
  const NewtonFan fan = newton_fan(f);
  if (fan.slopes.empty()) {
    throw DomainError("lotus_of_poly: " + f.str() + " has no compact Newton edge (no singular branch through the origin)");
  }
  if (require_nondegenerate && !is_newton_nondegenerate(f)) {
    throw DomainError("lotus_of_poly: " + f.str() + " is Newton degenerate (an edge restriction has a repeated root)");
  }
  return lotus_of_slopes(fan.slopes);
}

/// Number of chains of n vertices arising from triangulated (n+2)-gons, up to
/// reversal. Burnside over the reversal: reversal-symmetric chains number
/// C_{(n-1)/2} for odd n and none for even n.
inline BigInt count_resolution_graphs(int n) {
  if (n < 1) throw DomainError("count_resolution_graphs: n must be >= 1");
  BigInt total = catalan(n);
  if (n % 2 == 1) total += catalan((n - 1) / 2);
  return total / 2;
}

struct PartialResolution {
  Lotus lotus;
  ResolutionGraph graph;
};

/// All parent-closed petal subsets of l that contain the base petal, l itself
/// included, largest first.
inline std::vector<PartialResolution> partial_resolutions(const Lotus& l) {
  if (l.degenerate()) throw DomainError("partial_resolutions: the segment lotus has no petals");
  std::function<std::vector<std::vector<Petal>>(const Petal&)> downsets = [&](const Petal& root) {
    std::vector<std::vector<Petal>> result{{root}};
    for (const Petal& child : {root.left_child(), root.right_child()}) {
      if (!l.contains(child)) continue;
      const auto below = downsets(child);
      std::vector<std::vector<Petal>> grown;
      for (const auto& partial : result) {
        grown.push_back(partial);
        for (const auto& extension : below) {
          auto combined = partial;
          combined.insert(combined.end(), extension.begin(), extension.end());
          grown.push_back(std::move(combined));
        }
      }
      result = std::move(grown);
    }
    return result;
  };

  std::vector<std::set<Petal>> subsets;
  for (const auto& petals : downsets(Petal::base())) subsets.emplace_back(petals.begin(), petals.end());
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<PartialResolution> out;
  for (auto& petals : subsets) {
    Lotus sub(std::move(petals));
    ResolutionGraph graph = graph_of_lotus(sub);
    out.push_back({std::move(sub), std::move(graph)});
  }
  return out;
}

}  // namespace lotusfrieze
