#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings used by the command line tool (needs the single-header nlohmann/json as json.hpp).
 *
 * Integers are JSON numbers when they fit in 64 bits and decimal strings
 * otherwise. Points are [x, y]; petals are [[ux, uy], [vx, vy]].
 *
 *   lotus:   {"petals": [petal...], "marks": [point...]}
 *   graph:   {"weights": [w...], "arrows": [k...]}          arrows 1-based
 *   frieze:  {"period": m, "width": w, "quiddity": [a...], "domain": {"i,j": p_ij, ...}}
 *   polygon: {"m": m, "diagonals": [[i, j]...]}
 */

#include <json.hpp>

#include <cstddef>
#include <cstdint>
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

namespace lotusfrieze::json_io {

using nlohmann::json;

inline json number(const BigInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

inline BigInt to_bigint(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (!text.empty() && text.front() == '-') return -parse_natural(std::string_view(text).substr(1), 1);
    return parse_natural(text);
  }
  throw DomainError("json: expected an integer, got " + j.dump());
}

inline json point(const LatticePoint& p) { return json::array({number(p.x), number(p.y)}); }

inline LatticePoint to_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("json: a point is [x, y], got " + j.dump());
  return {to_bigint(j[0]), to_bigint(j[1])};
}

inline json points(const std::vector<LatticePoint>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(point(p));
  return out;
}

inline json lotus(const Lotus& l) {
  json petals = json::array();
  for (const auto& p : l.petals()) petals.push_back(json::array({point(p.u()), point(p.v())}));
  json marks = json::array();
  for (const auto& m : l.marks()) marks.push_back(point(m));
  return {{"petals", petals}, {"marks", marks}};
}

inline Lotus to_lotus(const json& j) {
  if (!j.is_object() || !j.contains("petals")) throw DomainError("json: a lotus needs a \"petals\" array");
  std::set<Petal> petals;
  for (const auto& p : j.at("petals")) {
    if (!p.is_array() || p.size() != 2) throw DomainError("json: a petal is [u, v], got " + p.dump());
    petals.insert(Petal(to_point(p[0]), to_point(p[1])));
  }
  std::set<LatticePoint> marks;
  if (j.contains("marks")) {
    for (const auto& m : j.at("marks")) marks.insert(to_point(m));
  }
  return Lotus(std::move(petals), std::move(marks));
}

inline json graph(const ResolutionGraph& g) {
  return {{"weights", g.weights}, {"arrows", std::vector<std::size_t>(g.arrows.begin(), g.arrows.end())}};
}

inline json polygon(const TriangulatedPolygon& p) {
  json diagonals = json::array();
  for (const auto& d : p.diagonals()) diagonals.push_back(json::array({d.first, d.second}));
  return {{"m", p.size()}, {"diagonals", diagonals}};
}

inline json quiddity(const Quiddity& q) { return q.values(); }

inline json frieze(const Frieze& f) {
  json domain = json::object();
  for (const auto& [key, value] : f.fundamental_domain()) {
    domain[std::to_string(key.first) + "," + std::to_string(key.second)] = number(value);
  }
  return {{"period", f.period()}, {"width", f.width()}, {"quiddity", quiddity(f.quiddity())}, {"domain", domain}};
}

inline json expansion(const HJExpansion& e) {
  json out = json::array();
  for (const auto& b : e.terms()) out.push_back(number(b));
  return out;
}

}  // namespace lotusfrieze::json_io
