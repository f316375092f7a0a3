#pragma once

/**
 * @file contfrac.hpp
 * @brief Hirzebruch-Jung (negative) continued fractions, continuants and the
 *        duality between the expansions of n/q and n/(n-q).
 *
 * An expansion [[b_1, ..., b_r]] denotes b_1 - 1/(b_2 - 1/(... - 1/b_r)).
 * For values above 1 every b_i >= 2; for values in (0, 1] only the leading
 * term may be 1. Numerator and denominator of a value are continuants of
 * the terms, which is how expansions are evaluated.
 */

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/errors.hpp"

namespace lotusfrieze {

/// A nonnegative reduced fraction num/den, or the sentinel infinity.
///
/// Slopes of rays in the first quadrant: 0 is the ray of e1, infinity the ray
/// of e2. Infinity is a distinct state, never a silent den = 0.
class Rational {
 public:
  Rational() = default;

  Rational(BigInt num, BigInt den = 1) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational: zero denominator (use Rational::infinity())");
    if (num_ < 0 || den_ < 0) throw DomainError("rational: slopes must be nonnegative");
    const BigInt g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational infinity() {
    Rational r;
    r.infinite_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && num_ == 0; }
  bool is_finite_positive() const noexcept { return !infinite_ && num_ > 0; }

  const BigInt& num() const {
    if (infinite_) throw DomainError("rational: infinity has no numerator");
    return num_;
  }
  const BigInt& den() const {
    if (infinite_) throw DomainError("rational: infinity has no denominator");
    return den_;
  }

  /// Accepts "n/q", "n" and "inf".
  static Rational parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_natural(text));
    BigInt n = parse_natural(text.substr(0, slash));
    BigInt q = parse_natural(text.substr(slash + 1), slash + 1);
    if (q == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(std::move(n), std::move(q));
  }

  std::string str() const {
    if (infinite_) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.infinite_ == b.infinite_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
  bool infinite_ = false;
};

/// Continuant P_n(y_1, ..., y_n): determinant of the tridiagonal matrix with
/// diagonal y and ones next to it. P_0 = 1, P_n = y_n P_{n-1} - P_{n-2}.
template <std::ranges::input_range Range>
BigInt continuant(const Range& ys) {
  BigInt before = 0;  // P_{-1}
  BigInt current = 1;  // P_0
  for (const auto& y : ys) {
    BigInt next = BigInt(y) * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

inline BigInt continuant(std::initializer_list<long> ys) {
  return continuant(std::vector<long>(ys));
}

/// Terms of a Hirzebruch-Jung continued fraction in canonical form:
/// b_1 >= 1 and b_k >= 2 for k >= 2.
class HJExpansion {
 public:
  explicit HJExpansion(std::vector<BigInt> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw DomainError("continued fraction: expansion must be nonempty");
    if (terms_.front() < 1) throw DomainError("continued fraction: leading term must be >= 1");
    for (std::size_t k = 1; k < terms_.size(); ++k) {
      if (terms_[k] < 2) {
        throw DomainError("continued fraction: term " + std::to_string(k + 1) + " must be >= 2");
      }
    }
  }

  HJExpansion(std::initializer_list<long> terms)
      : HJExpansion(std::vector<BigInt>(terms.begin(), terms.end())) {}

  const std::vector<BigInt>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const BigInt& operator[](std::size_t k) const { return terms_.at(k); }

  /// True when every term is >= 2, i.e. the value exceeds 1.
  bool exceeds_one() const { return terms_.front() >= 2; }

  /// Vertex count of the associated triangulated polygon: sum(b_i) - r + 3.
  BigInt polygon_size() const {
    BigInt sum = 0;
    for (const auto& b : terms_) sum += b;
    return sum - BigInt(terms_.size()) + 3;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) out += ",";
      out += terms_[k].str();
    }
    return out + "]";
  }

  friend bool operator==(const HJExpansion&, const HJExpansion&) = default;

 private:
  std::vector<BigInt> terms_;
};

/// Expansion of a finite positive rational by the ceiling recursion
/// x = ceil(x) - 1/x'.
inline HJExpansion hj_expand(const Rational& x) {
  if (x.is_infinite()) throw DomainError("hj_expand: infinity has no expansion");
  if (x.is_zero()) throw DomainError("hj_expand: zero has no expansion");
  BigInt n = x.num();
  BigInt q = x.den();
  std::vector<BigInt> terms;
  for (;;) {
    BigInt b = (n + q - 1) / q;
    BigInt rest = b * q - n;  // x' = q / rest
    terms.push_back(std::move(b));
    if (rest == 0) break;
    n = std::move(q);
    q = std::move(rest);
  }
  return HJExpansion(std::move(terms));
}

/// Value of an expansion: P_r(b_1..b_r) / P_{r-1}(b_2..b_r). The two
/// continuants are coprime, so no reduction happens in the constructor.
inline Rational hj_evaluate(const HJExpansion& e) {
  const auto& t = e.terms();
  BigInt n = continuant(t);
  BigInt q = continuant(t | std::views::drop(1));
  return Rational(std::move(n), std::move(q));
}

/// Block data (c_i, d_i) relating the expansions of n/q and n/(n-q).
struct KidohData {
  std::vector<BigInt> c;
  std::vector<BigInt> d;

  friend bool operator==(const KidohData&, const KidohData&) = default;
};

struct KidohDuality {
  KidohData blocks;
  HJExpansion dual;  ///< expansion of n/(n-q)
  std::size_t s;     ///< length of the dual expansion, s = m - r - 2
};

namespace detail {
inline void append_twos(std::vector<BigInt>& out, const BigInt& count) {
  for (BigInt k = 0; k < count; ++k) out.emplace_back(2);
}
}  // namespace detail

/// [[d_1+1, 2^(c_1-1), d_2+2, 2^(c_2-1), ..., d_k+2, 2^(c_k-1)]]
inline HJExpansion expansion_from_blocks(const KidohData& blocks) {
  if (blocks.c.empty() || blocks.c.size() != blocks.d.size()) {
    throw DomainError("kidoh: c and d must be nonempty and of equal length");
  }
  std::vector<BigInt> terms;
  for (std::size_t k = 0; k < blocks.c.size(); ++k) {
    if (blocks.c[k] < 1 || blocks.d[k] < 1) throw DomainError("kidoh: c_i, d_i must be positive");
    terms.push_back(blocks.d[k] + (k == 0 ? 1 : 2));
    detail::append_twos(terms, blocks.c[k] - 1);
  }
  return HJExpansion(std::move(terms));
}

/// [[2^(d_1-1), c_1+2, 2^(d_2-1), c_2+2, ..., 2^(d_k-1), c_k+1]]
inline HJExpansion dual_expansion_from_blocks(const KidohData& blocks) {
  if (blocks.c.empty() || blocks.c.size() != blocks.d.size()) {
    throw DomainError("kidoh: c and d must be nonempty and of equal length");
  }
  std::vector<BigInt> terms;
  const std::size_t last = blocks.c.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    if (blocks.c[k] < 1 || blocks.d[k] < 1) throw DomainError("kidoh: c_i, d_i must be positive");
    detail::append_twos(terms, blocks.d[k] - 1);
    terms.push_back(blocks.c[k] + (k == last ? 1 : 2));
  }
  return HJExpansion(std::move(terms));
}

/// Reads the blocks off the expansion of n/q (n > q > 0) and assembles the
/// expansion of n/(n-q) from them.
inline KidohDuality kidoh_dual(const Rational& x) {
  if (!x.is_finite_positive() || x.num() <= x.den()) {
    throw DomainError("kidoh_dual: requires n/q with n > q > 0");
  }
  const HJExpansion e = hj_expand(x);
  const auto& b = e.terms();

  KidohData blocks;
  std::size_t k = 0;
  while (k < b.size()) {
    blocks.d.push_back(b[k] - (k == 0 ? 1 : 2));
    ++k;
    BigInt twos = 0;
    while (k < b.size() && b[k] == 2) {
      ++twos;
      ++k;
    }
    blocks.c.push_back(twos + 1);
  }

  HJExpansion dual = dual_expansion_from_blocks(blocks);
  const std::size_t s = dual.size();
  return KidohDuality{std::move(blocks), std::move(dual), s};
}

}  // namespace lotusfrieze
