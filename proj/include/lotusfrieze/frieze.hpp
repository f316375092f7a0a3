#pragma once

/**
 * @file frieze.hpp
 * @brief Conway-Coxeter friezes of period m and width w = m - 3.
 *
 * Two index schemes are in use:
 *  - Pluecker labels p(i, j) for vertex labels 1 <= i, j <= m, symmetric,
 *    with p(i, i) = 0 and p(i, i+1) = 1. The fundamental domain is the set of
 *    p(i, j) with i < j.
 *  - Coxeter indices entry(s, t) for arbitrary integers, with
 *    entry(s, t) = p((s mod m) + 1, (t mod m) + 1). Row r of the frieze is
 *    the sequence entry(s, s + r); row 2 is the quiddity, entry(s, s+2) = a_{s+1},
 *    where a_t denotes the value at vertex (t mod m) + 1.
 *
 * Every entry is the continuant of the quiddity values strictly between its
 * two labels: entry(s, t) = P(a_{s+1}, ..., a_{t-1}).
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/contfrac.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/polygon.hpp"

namespace lotusfrieze {

class Frieze {
 public:
  /// Generates rows 3..m with the diamond rule and validates the result:
  /// rows 2..m-2 positive integers, row m-1 all ones, row m all zeros.
  explicit Frieze(Quiddity q) : quiddity_(std::move(q)) {
    const int m = quiddity_.size();
    domain_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2, BigInt(0));

    // prev2 = row r-1, prev = row r; row r holds entry(s, s + r).
    std::vector<BigInt> prev2(static_cast<std::size_t>(m), BigInt(1));
    std::vector<BigInt> prev(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) prev[static_cast<std::size_t>(s)] = quiddity_.coxeter(s + 1);

    for (int i = 1; i <= m; ++i) store(i, i % m + 1, BigInt(1));

    auto at = [m](const std::vector<BigInt>& row, int s) -> const BigInt& {
      return row[static_cast<std::size_t>(((s % m) + m) % m)];
    };

    for (int r = 2; r <= m; ++r) {
      for (int s = 0; s < m; ++s) {
        const BigInt& value = at(prev, s);
        if (r <= m - 2 && value <= 0) fail(s, r, "entry " + value.str() + " is not positive");
        if (r == m - 1 && value != 1) fail(s, r, "closing row holds " + value.str() + " instead of 1");
        if (r == m && value != 0) fail(s, r, "zero row holds " + value.str());
        if (r < m) {
          const int i = s + 1;
          const int j = (s + r) % m + 1;
          if (i != j) store(i, j, value);
        }
      }
      if (r == m) break;
      std::vector<BigInt> next(static_cast<std::size_t>(m));
      for (int s = 0; s < m; ++s) {
        // entry(s, s+r+1) * entry(s+1, s+r) = entry(s, s+r) * entry(s+1, s+r+1) - 1
        const BigInt& top = at(prev2, s + 1);
        const BigInt numerator = at(prev, s) * at(prev, s + 1) - 1;
        if (top == 0 || numerator % top != 0) {
          fail(s, r + 1, "diamond rule gives " + numerator.str() + "/" + top.str() + ", not an integer");
        }
        next[static_cast<std::size_t>(s)] = numerator / top;
      }
      prev2 = std::move(prev);
      prev = std::move(next);
    }
  }

  int period() const noexcept { return quiddity_.size(); }
  int width() const noexcept { return quiddity_.size() - 3; }
  const Quiddity& quiddity() const noexcept { return quiddity_; }

  /// p(i, j) for vertex labels in 1..m.
  const BigInt& plucker(int i, int j) const {
    const int m = period();
    if (i < 1 || i > m || j < 1 || j > m) {
      throw DomainError("frieze: label out of range 1.." + std::to_string(m));
    }
    if (i == j) return zero();
    if (i > j) std::swap(i, j);
    return domain_[index(i, j)];
  }

  /// Coxeter-indexed entry for arbitrary integers s, t.
  const BigInt& entry(std::int64_t s, std::int64_t t) const {
    const std::int64_t m = period();
    return plucker(static_cast<int>(((s % m) + m) % m) + 1, static_cast<int>(((t % m) + m) % m) + 1);
  }

  /// p(i, j) for all 1 <= i < j <= m.
  std::map<std::pair<int, int>, BigInt> fundamental_domain() const {
    std::map<std::pair<int, int>, BigInt> out;
    const int m = period();
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) out.emplace(std::pair{i, j}, domain_[index(i, j)]);
    }
    return out;
  }

  friend bool operator==(const Frieze& a, const Frieze& b) { return a.quiddity_ == b.quiddity_; }

 private:
  static const BigInt& zero() {
    static const BigInt z = 0;
    return z;
  }

  std::size_t index(int i, int j) const {
    // row-major upper triangle without the diagonal, i < j
    const auto m = static_cast<std::size_t>(period());
    const auto a = static_cast<std::size_t>(i - 1);
    const auto b = static_cast<std::size_t>(j - 1);
    return a * m - a * (a + 1) / 2 + (b - a - 1);
  }

  void store(int i, int j, const BigInt& value) {
    if (i > j) std::swap(i, j);
    BigInt& slot = domain_[index(i, j)];
    if (slot == 0) {
      slot = value;
    } else if (slot != value) {
      throw DomainError("quiddity " + quiddity_.str() + " does not generate a frieze: glide symmetry fails at p(" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  [[noreturn]] void fail(int s, int row, const std::string& why) const {
    throw DomainError("quiddity " + quiddity_.str() + " does not generate a frieze: diamond with bottom entry(" +
                      std::to_string(s) + "," + std::to_string(s + row) + ") in row " + std::to_string(row) +
                      ": " + why);
  }

  Quiddity quiddity_;
  std::vector<BigInt> domain_;
};

inline Frieze frieze_from_quiddity(const Quiddity& q) { return Frieze(q); }

inline Frieze frieze_of_triangulation(const TriangulatedPolygon& p) { return Frieze(quiddity_of(p)); }

inline TriangulatedPolygon triangulation_of_frieze(const Frieze& f) {
  return triangulation_of_quiddity(f.quiddity());
}

/// Completes a_1..a_{w+1} to the full quiddity of length w + 3.
///
/// With D0(t) = entry(0, t) and D1(t) = entry(1, t) built as continuants of
/// the prefix, the closing rows force D0(w+2) = 1 and the missing entries are
/// a_{w+2} = D0(w+1) and a_{w+3} = D1(w+2).
inline Quiddity complete_quiddity(const std::vector<std::int64_t>& prefix) {
  if (prefix.empty()) throw DomainError("complete_quiddity: prefix must hold w+1 >= 1 entries");
  for (auto a : prefix) {
    if (a < 1) throw DomainError("complete_quiddity: entries must be positive");
  }
  const BigInt full = continuant(prefix);
  if (full != 1) {
    throw DomainError("complete_quiddity: prefix is not extendable, closing entry is " + full.str() +
                      " instead of 1");
  }
  const BigInt a_next = continuant(std::vector<std::int64_t>(prefix.begin(), prefix.end() - 1));
  const BigInt a_last = continuant(std::vector<std::int64_t>(prefix.begin() + 1, prefix.end()));
  if (a_next < 1 || a_last < 1 || !fits_int64(a_next) || !fits_int64(a_last)) {
    throw DomainError("complete_quiddity: prefix is not extendable");
  }
  std::vector<std::int64_t> values(prefix.begin(), prefix.end());
  values.push_back(static_cast<std::int64_t>(a_next));
  values.push_back(static_cast<std::int64_t>(a_last));
  Quiddity q(std::move(values));
  Frieze check(q);  // throws if the completed sequence is not a CC quiddity
  return q;
}

}  // namespace lotusfrieze
