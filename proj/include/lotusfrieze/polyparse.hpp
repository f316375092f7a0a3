#pragma once

/**
 * @file polyparse.hpp
 * @brief Exact bivariate integer polynomials: parsing, printing, Newton
 *        polygon edges and edge restrictions.
 *
 * Grammar (whitespace is ignored between tokens):
 *
 *     poly   := sign? term ( ('+' | '-') term )*
 *     term   := factor ( '*'? factor )*
 *     factor := atom ( '^' natural )?
 *     atom   := natural | 'x' | 'y' | '(' poly ')'
 *
 * so `2x^3y`, `3*x*y^2`, `-(x^2+y)(x+y^2)` and `(y^2-x^3)^5 - x^14*y` are all
 * accepted. The printed form lists terms in descending graded lexicographic
 * order of (i, j) and parses back to the same polynomial.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/errors.hpp"

namespace lotusfrieze {

/// Exponent pair (i, j) of the monomial x^i y^j.
using Exponent = std::pair<std::int64_t, std::int64_t>;

/// Graded lexicographic order, largest first.
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const auto da = a.first + a.second;
    const auto db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

class Poly2 {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLexDescending>;

  Poly2() = default;
  Poly2(const BigInt& constant) { add_term({0, 0}, constant); }

  static Poly2 monomial(std::int64_t i, std::int64_t j, const BigInt& c = 1) {
    Poly2 p;
    p.add_term({i, j}, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::vector<Exponent> support() const {
    std::vector<Exponent> out;
    for (const auto& [e, c] : terms_) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::int64_t degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.first + terms_.begin()->first.second;
  }

  void add_term(const Exponent& e, const BigInt& c) {
    if (e.first < 0 || e.second < 0) throw DomainError("polynomial: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly2 operator-() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend Poly2 operator-(Poly2 a, const Poly2& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
    return out;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 pow(std::int64_t k) const {
    if (k < 0) throw DomainError("polynomial: negative power");
    Poly2 result(1);
    Poly2 base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const BigInt magnitude = negative ? BigInt(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      auto append = [&mono](const char* var, std::int64_t k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += var;
        if (k != 1) mono += "^" + std::to_string(k);
      };
      append("x", e.first);
      append("y", e.second);
      if (mono.empty()) {
        out += magnitude.str();
      } else if (magnitude == 1) {
        out += mono;
      } else {
        out += magnitude.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

inline constexpr std::int64_t kMaxParsedDegree = 100000;

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view src) : src_(src) {}

  Poly2 parse() {
    Poly2 p = poly();
    skip_space();
    if (pos_ != src_.size()) error("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  static bool starts_atom(char ch) {
    return ch == 'x' || ch == 'y' || ch == '(' || (ch >= '0' && ch <= '9');
  }

  Poly2 poly() {
    Poly2 sum;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    Poly2 t = term();
    sum = negative ? -t : t;
    for (;;) {
      const char ch = peek();
      if (ch != '+' && ch != '-') break;
      ++pos_;
      Poly2 next = term();
      sum = ch == '+' ? sum + next : sum - next;
    }
    return sum;
  }

  Poly2 term() {
    Poly2 product = factor();
    for (;;) {
      const char ch = peek();
      if (ch == '*') {
        ++pos_;
        product = product * factor();
      } else if (starts_atom(ch)) {
        product = product * factor();
      } else {
        break;
      }
    }
    return product;
  }

  Poly2 factor() {
    Poly2 base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      const BigInt k = natural();
      if (k > kMaxParsedDegree) throw ParseError("exponent too large", at);
      const auto exponent = static_cast<std::int64_t>(k);
      if (base.degree() * exponent > kMaxParsedDegree) throw ParseError("degree too large", at);
      base = base.pow(exponent);
    }
    return base;
  }

  Poly2 atom() {
    const char ch = peek();
    if (ch == 'x') {
      ++pos_;
      return Poly2::monomial(1, 0);
    }
    if (ch == 'y') {
      ++pos_;
      return Poly2::monomial(0, 1);
    }
    if (ch == '(') {
      ++pos_;
      Poly2 inner = poly();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch >= '0' && ch <= '9') return Poly2(natural());
    if (ch == '\0') error("unexpected end of input");
    error("expected a number, 'x', 'y' or '('");
  }

  BigInt natural() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
    if (start == pos_) error("expected digits");
    return parse_natural(src_.substr(start, pos_ - start), start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly2 parse_poly(std::string_view src) { return detail::PolyParser(src).parse(); }

/// Compact edges of the Newton polyhedron conv(supp f + R_{>=0}^2), each as
/// its two endpoints ordered by increasing i (hence decreasing j), listed from
/// the j-axis side to the i-axis side.
inline std::vector<std::pair<Exponent, Exponent>> compact_edges(const std::vector<Exponent>& support) {
  if (support.empty()) throw DomainError("newton polygon: empty support");
  // staircase: for increasing i keep points whose j drops below all earlier ones
  std::map<std::int64_t, std::int64_t> lowest;
  for (const auto& [i, j] : support) {
    auto it = lowest.find(i);
    if (it == lowest.end() || j < it->second) lowest[i] = j;
  }
  std::vector<Exponent> stair;
  for (const auto& [i, j] : lowest) {
    if (stair.empty() || j < stair.back().second) stair.emplace_back(i, j);
  }
  // lower convex hull of the staircase
  std::vector<Exponent> hull;
  auto cross = [](const Exponent& o, const Exponent& a, const Exponent& b) {
    return BigInt(a.first - o.first) * (b.second - o.second) - BigInt(a.second - o.second) * (b.first - o.first);
  };
  for (const auto& p : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<std::pair<Exponent, Exponent>> edges;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) edges.emplace_back(hull[k], hull[k + 1]);
  return edges;
}

inline std::vector<std::pair<Exponent, Exponent>> compact_edges(const Poly2& f) {
  if (f.is_zero()) throw DomainError("newton polygon: the zero polynomial has no support");
  return compact_edges(f.support());
}

/// One-variable polynomial, coefficients from degree 0 upwards.
using UniPoly = std::vector<BigInt>;

/// Terms of f lying on the edge, as g(t) = sum_k c_k t^k where c_k is the
/// coefficient at the k-th lattice point from the edge's first endpoint.
inline UniPoly restrict_to_edge(const Poly2& f, const std::pair<Exponent, Exponent>& edge) {
  const auto& [a, b] = edge;
  const std::int64_t di = b.first - a.first;
  const std::int64_t dj = a.second - b.second;
  if (di <= 0 || dj <= 0) throw DomainError("restrict_to_edge: endpoints do not span a compact edge");
  const auto edges = compact_edges(f);
  const bool is_edge = std::find(edges.begin(), edges.end(), edge) != edges.end();
  if (!is_edge) throw DomainError("restrict_to_edge: not a compact edge of the Newton polygon");
  const std::int64_t g = static_cast<std::int64_t>(std::gcd(di, dj));
  UniPoly out(static_cast<std::size_t>(g + 1), BigInt(0));
  for (std::int64_t k = 0; k <= g; ++k) {
    out[static_cast<std::size_t>(k)] = f.coefficient({a.first + k * (di / g), a.second - k * (dj / g)});
  }
  return out;
}

namespace detail {

using RatPoly = std::vector<BigRational>;

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const BigRational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// gcd(g, g') is a nonzero constant over the rationals.
inline bool is_square_free(const UniPoly& g) {
  detail::RatPoly p(g.begin(), g.end());
  detail::trim(p);
  if (p.empty()) return false;
  if (p.size() <= 2) return true;
  detail::RatPoly derivative;
  for (std::size_t k = 1; k < p.size(); ++k) derivative.push_back(p[k] * BigRational(static_cast<long long>(k)));
  return detail::poly_gcd(p, derivative).size() == 1;
}

}  // namespace lotusfrieze
