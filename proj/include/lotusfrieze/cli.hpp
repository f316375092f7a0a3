#pragma once

/**
 * @file cli.hpp
 * @brief The `lotusfrieze` command line front end (needs CLI11 and
 *        nlohmann/json single headers on the include path).
 *
 * Exit codes: 0 success, 1 domain error (input well formed but not valid
 * mathematical data), 2 usage or syntax error.
 *
 * Commands taking a lotus read it from exactly one of
 *   --quiddity a1,a2,...  (triangulation with that quiddity, embedded with --k)
 *   --slopes n/q,...      (union of the slope lotuses)
 *   --poly "f"            (Newton lotus of a Newton non-degenerate f)
 *   --stdin               (JSON lotus as printed by `lotus --json`)
 * Diagonals name polygon vertices 1..m counted from (0,1) along the lateral
 * boundary to (1,0); for --quiddity input with --k 0 that is the quiddity's
 * own labeling.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/contfrac.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/json_io.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/polygon.hpp"
#include "lotusfrieze/polyparse.hpp"
#include "lotusfrieze/render.hpp"
#include "lotusfrieze/resolution.hpp"
#include "lotusfrieze/transform.hpp"

namespace lotusfrieze::cli {

/// Malformed command line beyond what CLI11 itself catches.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  std::string quiddity;
  std::string slopes;
  std::string poly;
  bool use_stdin = false;
  std::int64_t k = 0;
};

struct Options {
  InputSpec input;
  std::string value;
  std::string diagonal;
  std::string format = "svg";
  std::string out_path;
  bool json = false;
  int periods = 1;
  int n = 0;
  double scale = 40.0;
  bool grid = false;
  bool labels = false;
  bool no_marks = false;
};

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else if (ch != ' ' && ch != '\t') {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

/// "1,2,2,3,2,1,3,4" with optional surrounding parentheses.
inline Quiddity parse_quiddity(std::string text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> values;
  std::size_t offset = 0;
  for (const auto& piece : split(text, ',')) {
    const BigInt v = parse_natural(piece, offset);
    if (!fits_int64(v)) throw ParseError("quiddity entry too large", offset);
    values.push_back(static_cast<std::int64_t>(v));
    offset += piece.size() + 1;
  }
  return Quiddity(std::move(values));
}

inline std::vector<Rational> parse_slopes(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& piece : split(text, ',')) out.push_back(Rational::parse(piece));
  return out;
}

inline Diagonal parse_diagonal(const std::string& text) {
  auto pieces = split(text, ',');
  if (pieces.size() != 2) throw UsageError("--diagonal expects i,j");
  const BigInt i = parse_natural(pieces[0]);
  const BigInt j = parse_natural(pieces[1], pieces[0].size() + 1);
  if (i > 1000000 || j > 1000000) throw DomainError("diagonal label out of range");
  return make_diagonal(static_cast<int>(i), static_cast<int>(j));
}

inline int count_inputs(const InputSpec& s) {
  return static_cast<int>(!s.quiddity.empty()) + static_cast<int>(!s.slopes.empty()) +
         static_cast<int>(!s.poly.empty()) + static_cast<int>(s.use_stdin);
}

inline void require_one_input(const InputSpec& s) {
  if (count_inputs(s) != 1) throw UsageError("give exactly one of --quiddity, --slopes, --poly, --stdin");
}

inline Lotus lotus_from_input(const InputSpec& s, std::istream& in) {
  require_one_input(s);
  if (!s.quiddity.empty()) {
    const Lotus l = lotus_of_polygon(triangulation_of_quiddity(parse_quiddity(s.quiddity)), s.k);
    return l.with_marks(pinching_points(l));
  }
  if (!s.slopes.empty()) return lotus_of_slopes(parse_slopes(s.slopes));
  if (!s.poly.empty()) return lotus_of_poly(parse_poly(s.poly));
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto doc = nlohmann::json::parse(text);
  return json_io::to_lotus(doc.contains("lotus") ? doc.at("lotus") : doc);
}

inline TriangulatedPolygon polygon_from_input(const InputSpec& s, std::istream& in) {
  require_one_input(s);
  if (!s.quiddity.empty()) return triangulation_of_quiddity(parse_quiddity(s.quiddity));
  return polygon_of_lotus(lotus_from_input(s, in)).polygon;
}

inline std::string petal_list(const Lotus& l) {
  std::string out;
  for (const auto& p : l.petals()) out += p.str() + "\n";
  return out;
}

inline std::string point_list(const std::set<LatticePoint>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + p.str();
  return out;
}

inline void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << "\n"; }

inline void cmd_hj(const Options& o, std::ostream& out) {
  const Rational x = Rational::parse(o.value);
  const HJExpansion e = hj_expand(x);
  std::optional<KidohDuality> dual;
  if (x.num() > x.den()) dual = kidoh_dual(x);
  if (o.json) {
    nlohmann::json j{{"value", x.str()}, {"expansion", json_io::expansion(e)}};
    if (dual) {
      j["dual"] = json_io::expansion(dual->dual);
      nlohmann::json c = nlohmann::json::array();
      nlohmann::json d = nlohmann::json::array();
      for (const auto& v : dual->blocks.c) c.push_back(json_io::number(v));
      for (const auto& v : dual->blocks.d) d.push_back(json_io::number(v));
      j["c"] = c;
      j["d"] = d;
    }
    emit_json(out, j);
    return;
  }
  out << e.str() << "\n";
  if (dual) out << "dual " << dual->dual.str() << "\n";
}

inline void cmd_frieze(const Options& o, std::istream& in, std::ostream& out) {
  const Frieze f = frieze_of_triangulation(polygon_from_input(o.input, in));
  if (o.json) return emit_json(out, json_io::frieze(f));
  out << render_frieze_text(f, o.periods);
}

inline void cmd_embed(const Options& o, std::ostream& out) {
  if (o.input.quiddity.empty()) throw UsageError("embed needs --quiddity");
  const auto vertices = embed_polygon(parse_quiddity(o.input.quiddity), o.input.k);
  if (o.json) return emit_json(out, {{"k", o.input.k}, {"vertices", json_io::points(vertices)}});
  for (std::size_t k = 0; k < vertices.size(); ++k) out << (k ? " " : "") << vertices[k].str();
  out << "\n";
}

inline void cmd_lotus(const Options& o, std::istream& in, std::ostream& out) {
  const Lotus l = lotus_from_input(o.input, in);
  if (o.json) return emit_json(out, json_io::lotus(l));
  out << petal_list(l);
  out << "marks: " << point_list(l.marks()) << "\n";
  if (!l.degenerate()) {
    out << "pinching points: " << point_list(pinching_points(l)) << "\n";
    out << "curve: " << curve_of_lotus(l).str() << "\n";
  }
}

inline void cmd_graph(const Options& o, std::istream& in, std::ostream& out) {
  const ResolutionGraph g = graph_of_lotus(lotus_from_input(o.input, in));
  if (o.json) return emit_json(out, json_io::graph(g));
  out << render_graph_text(g);
}

inline void cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const TriangulatedPolygon p = polygon_from_input(o.input, in);
  const ReductionResult r = reduce(p, parse_diagonal(o.diagonal));
  if (o.json) {
    return emit_json(out, {{"cut", {r.cut.first, r.cut.second}},
                           {"polygon", json_io::polygon(r.polygon)},
                           {"quiddity", json_io::quiddity(r.quiddity)},
                           {"dropped", json_io::polygon(r.dropped)},
                           {"kept_labels", r.kept_labels},
                           {"dropped_labels", r.dropped_labels}});
  }
  out << "cut " << to_string(r.cut) << "\n";
  out << "kept " << r.polygon.str() << "\n";
  out << "quiddity " << r.quiddity.str() << "\n";
  out << "dropped " << r.dropped.str() << "\n";
}

inline void cmd_mutate(const Options& o, std::istream& in, std::ostream& out) {
  const Lotus l = lotus_from_input(o.input, in);
  const Diagonal d = parse_diagonal(o.diagonal);
  const MutationQuad before = mutation_quad(l, d);
  const LotusPolygon lp = polygon_of_lotus(l);
  const Diagonal flipped = opposite_diagonal(lp.polygon, d);
  const Lotus result = mutate_lotus(l, d);
  const MutationQuad after = mutation_quad(result, flipped);
  const Lotus marked = result.with_marks(pinching_points(result));
  if (o.json) {
    return emit_json(out, {{"diagonal", {d.first, d.second}},
                           {"new_diagonal", {flipped.first, flipped.second}},
                           {"type_before", before.type},
                           {"type_after", after.type},
                           {"lotus", json_io::lotus(marked)},
                           {"polygon", json_io::polygon(polygon_of_lotus(result).polygon)},
                           {"curve", curve_of_lotus(result).str()}});
  }
  out << "flip " << to_string(d) << " -> " << to_string(flipped) << ", type " << before.type << " -> "
      << after.type << "\n";
  out << petal_list(result);
  out << "curve: " << curve_of_lotus(result).str() << "\n";
}

inline void cmd_partials(const Options& o, std::istream& in, std::ostream& out) {
  const Lotus l = lotus_from_input(o.input, in);
  const auto partials = partial_resolutions(l);
  const auto reductions = reduction_chain(l);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t k = 0; k < partials.size(); ++k) {
      list.push_back({{"lotus", json_io::lotus(partials[k].lotus)},
                      {"graph", json_io::graph(partials[k].graph)},
                      {"quiddity", json_io::quiddity(reductions[k].quiddity)}});
    }
    return emit_json(out, {{"partials", list}});
  }
  for (const auto& p : partials) out << render_graph_text(p.graph);
}

inline void cmd_count(const Options& o, std::ostream& out) {
  const BigInt c = count_resolution_graphs(o.n);
  if (o.json) return emit_json(out, {{"n", o.n}, {"count", json_io::number(c)}});
  out << c.str() << "\n";
}

inline void cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  std::string text;
  if (o.format == "frieze") {
    text = render_frieze_text(frieze_of_triangulation(polygon_from_input(o.input, in)), o.periods);
  } else {
    const Lotus l = lotus_from_input(o.input, in);
    if (o.format == "svg") {
      RenderOptions ro;
      ro.scale = o.scale;
      ro.show_grid = o.grid;
      ro.label_weights = o.labels;
      ro.show_marks = !o.no_marks;
      text = render_lotus_svg(l, ro);
    } else if (o.format == "dot") {
      text = render_graph_dot(graph_of_lotus(l));
    } else {
      text = render_graph_text(graph_of_lotus(l));
    }
  }
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + o.out_path + " for writing");
  file << text;
}

inline bool color_enabled() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  const char* v = std::getenv("LOTUSFRIEZE_COLOR");
  return v != nullptr && (std::string(v) == "1" || std::string(v) == "always");
}

inline int report(std::ostream& err, const std::string& message, int code) {
  if (color_enabled()) {
    err << "\x1b[31mlotusfrieze: error:\x1b[0m " << message << "\n";
  } else {
    err << "lotusfrieze: error: " << message << "\n";
  }
  return code;
}

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conway-Coxeter friezes, Newton lotuses and resolution graphs of plane curves", "lotusfrieze"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&o](CLI::App* sub) {
    sub->add_option("--quiddity", o.input.quiddity, "quiddity a1,...,am of a triangulated polygon");
    sub->add_option("--k", o.input.k, "frieze index of the quiddity entry placed at (0,1)");
    sub->add_option("--slopes", o.input.slopes, "comma separated slopes n/q (also 0 and inf)");
    sub->add_option("--poly", o.input.poly, "polynomial in x and y, e.g. \"x^3-y^2\"");
    sub->add_flag("--stdin", o.input.use_stdin, "read a JSON lotus from standard input");
  };
  auto add_json = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "machine readable output"); };

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/q and of n/(n-q)");
  hj->add_option("value", o.value, "rational n/q")->required();
  add_json(hj);

  auto* frieze = app.add_subcommand("frieze", "frieze of a triangulation or lotus");
  add_input(frieze);
  frieze->add_option("--periods", o.periods, "periods shown in the text grid")->check(CLI::PositiveNumber);
  add_json(frieze);

  auto* embed = app.add_subcommand("embed", "lattice embedding of a triangulated polygon");
  embed->add_option("--quiddity", o.input.quiddity, "quiddity a1,...,am")->required();
  embed->add_option("--k", o.input.k, "frieze index of the quiddity entry placed at (0,1)");
  add_json(embed);

  auto* lotus = app.add_subcommand("lotus", "Newton lotus");
  add_input(lotus);
  add_json(lotus);

  auto* graph = app.add_subcommand("graph", "dual resolution graph");
  add_input(graph);
  add_json(graph);

  auto* reduce_cmd = app.add_subcommand("reduce", "cut the polygon along a diagonal");
  add_input(reduce_cmd);
  reduce_cmd->add_option("--diagonal", o.diagonal, "diagonal i,j")->required();
  add_json(reduce_cmd);

  auto* mutate = app.add_subcommand("mutate", "flip a diagonal and re-embed the lotus");
  add_input(mutate);
  mutate->add_option("--diagonal", o.diagonal, "diagonal i,j")->required();
  add_json(mutate);

  auto* partials = app.add_subcommand("partials", "partial resolutions (sublotuses)");
  add_input(partials);
  add_json(partials);

  auto* count = app.add_subcommand("count", "number of resolution graphs with n exceptional curves");
  count->add_option("n", o.n, "number of exceptional curves")->required()->check(CLI::PositiveNumber);
  add_json(count);

  auto* render = app.add_subcommand("render", "SVG lotus, DOT or text graph, or text frieze");
  add_input(render);
  render->add_option("--format", o.format, "svg, dot, text or frieze")
      ->check(CLI::IsMember({"svg", "dot", "text", "frieze"}));
  render->add_option("--out", o.out_path, "output file (default: standard output)");
  render->add_option("--periods", o.periods, "periods for --format frieze")->check(CLI::PositiveNumber);
  render->add_option("--scale", o.scale, "pixels per lattice unit")->check(CLI::PositiveNumber);
  render->add_flag("--grid", o.grid, "draw the lattice grid");
  render->add_flag("--labels", o.labels, "label lateral vertices with their weights");
  render->add_flag("--no-marks", o.no_marks, "omit marked points");

  std::vector<const char*> argv{"lotusfrieze"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report(err, e.what(), 2);
  }

  try {
    if (hj->parsed()) cmd_hj(o, out);
    else if (frieze->parsed()) cmd_frieze(o, in, out);
    else if (embed->parsed()) cmd_embed(o, out);
    else if (lotus->parsed()) cmd_lotus(o, in, out);
    else if (graph->parsed()) cmd_graph(o, in, out);
    else if (reduce_cmd->parsed()) cmd_reduce(o, in, out);
    else if (mutate->parsed()) cmd_mutate(o, in, out);
    else if (partials->parsed()) cmd_partials(o, in, out);
    else if (count->parsed()) cmd_count(o, out);
    else if (render->parsed()) cmd_render(o, in, out);
  } catch (const ParseError& e) {
    return report(err, e.what(), 2);
  } catch (const UsageError& e) {
    return report(err, e.what(), 2);
  } catch (const nlohmann::json::exception& e) {
    return report(err, std::string("invalid JSON input: ") + e.what(), 2);
  } catch (const DomainError& e) {
    return report(err, e.what(), 1);
  }
  return 0;
}

}  // namespace lotusfrieze::cli
