#pragma once

// Text and JSON serialization.
//
// Three text formats cover the graph objects:
//   * edge list: one `i,l -- p,r` line per edge, canonical order;
//   * DOT: vertices `v_i_l` grouped into one cluster per part, with
//     `color=red|blue` attributes when a colouring is exported;
//   * colouring file: a `shape j s` header, then one `i,l -- p,r R|B`
//     line per host edge.  The parser is strict: every cross-part pair
//     exactly once, nothing else.
// JSON output uses insertion-ordered objects so repeated runs are
// byte-identical.

#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "factory.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "ramsey.hpp"

namespace mjstar {

using json = nlohmann::ordered_json;

inline std::string edge_token(Vertex u, Vertex v) {
  return std::to_string(u.part) + "," + std::to_string(u.slot) + " -- " +
         std::to_string(v.part) + "," + std::to_string(v.slot);
}

inline std::string to_edge_list(const MpGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) out += edge_token(u, v) + "\n";
  return out;
}

namespace detail {

inline std::string dot_name(Vertex v) {
  return "v_" + std::to_string(v.part) + "_" + std::to_string(v.slot);
}

inline void dot_clusters(std::string& out, const Shape& sh) {
  for (int i = 0; i < sh.parts; ++i) {
    out += "  subgraph cluster_part_" + std::to_string(i) + " {\n";
    out += "    label=\"part " + std::to_string(i) + "\";\n";
    for (int l = 0; l < sh.slots; ++l) out += "    " + dot_name({i, l}) + ";\n";
    out += "  }\n";
  }
}

}  // namespace detail

inline std::string to_dot(const MpGraph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  detail::dot_clusters(out, g.shape());
  for (const auto& [u, v] : g.edges())
    out += "  " + detail::dot_name(u) + " -- " + detail::dot_name(v) + ";\n";
  out += "}\n";
  return out;
}

inline std::string to_dot(const TwoColoring& c, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  detail::dot_clusters(out, c.shape());
  for (const auto& [u, v] : complete_graph(c.shape()).edges()) {
    const bool red = c.color_of(u, v) == Color::Red;
    out += "  " + detail::dot_name(u) + " -- " + detail::dot_name(v) +
           (red ? " [color=red];\n" : " [color=blue];\n");
  }
  out += "}\n";
  return out;
}

inline std::string to_coloring_text(const TwoColoring& c) {
  const Shape& sh = c.shape();
  std::string out = "shape " + std::to_string(sh.parts) + " " + std::to_string(sh.slots) + "\n";
  for (const auto& [u, v] : complete_graph(sh).edges())
    out += edge_token(u, v) + (c.color_of(u, v) == Color::Red ? " R\n" : " B\n");
  return out;
}

// Strict colouring reader: `shape j s` header, then every cross-part pair
// exactly once with colour letter R or B.  Raises ParseError with the
// offending line number.
inline TwoColoring parse_coloring(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return line;
    }
    return std::nullopt;
  };

  const auto header = next_line();
  int j = 0, s = 0, used = 0;
  if (!header || std::sscanf(header->c_str(), "shape %d %d %n", &j, &s, &used) < 2 ||
      used != static_cast<int>(header->size()))
    throw ParseError("line " + std::to_string(lineno) + ": expected `shape j s` header");
  if (j < 2 || s < 1)
    throw ParseError("line " + std::to_string(lineno) + ": shape out of range");

  const Shape sh{j, s};
  TwoColoring col(sh);
  const int n = sh.vertex_count();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * n, 0);
  std::size_t pairs = 0;
  while (const auto entry = next_line()) {
    int a = 0, b = 0, c = 0, d = 0;
    char letter = 0;
    used = 0;
    if (std::sscanf(entry->c_str(), "%d,%d -- %d,%d %c %n", &a, &b, &c, &d, &letter, &used) != 5 ||
        used != static_cast<int>(entry->size()))
      throw ParseError("line " + std::to_string(lineno) + ": expected `i,l -- p,r R|B`");
    if (letter != 'R' && letter != 'B')
      throw ParseError("line " + std::to_string(lineno) + ": colour must be R or B");
    const Vertex u{a, b}, v{c, d};
    try {
      check_vertex(sh, u);
      check_vertex(sh, v);
    } catch (const PreconditionError&) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex outside shape");
    }
    if (u.part == v.part)
      throw ParseError("line " + std::to_string(lineno) + ": edge inside one part");
    const std::size_t fu = static_cast<std::size_t>(flat_index(sh, u));
    const std::size_t fv = static_cast<std::size_t>(flat_index(sh, v));
    if (seen[fu * n + fv])
      throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
    seen[fu * n + fv] = seen[fv * n + fu] = 1;
    ++pairs;
    col.set_color(u, v, letter == 'R' ? Color::Red : Color::Blue);
  }

  const std::size_t expected =
      static_cast<std::size_t>(s) * s * j * (j - 1) / 2;
  if (pairs != expected)
    throw ParseError("colouring is not total: " + std::to_string(pairs) + " of " +
                     std::to_string(expected) + " edges given");
  return col;
}

inline TwoColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return parse_coloring(in);
}

inline json to_json(const ConstructionReport& r) {
  json hist = json::object();
  for (const auto& [deg, count] : r.histogram) hist[std::to_string(deg)] = count;
  json trace = json::array();
  for (const auto& [part, count] : r.rule_trace)
    trace.push_back({{"part", part}, {"edges", count}});
  return {{"requested_d", r.requested_d},
          {"histogram", hist},
          {"valid", r.valid},
          {"rule_trace", trace}};
}

inline json to_json(const Decomposition& dec) {
  return {{"case_tag", case_tag_name(dec.tag)},
          {"k1", dec.k1},
          {"k2", dec.k2},
          {"rem", dec.rem},
          {"w_quot", dec.w_quot}};
}

inline json to_json(const RamseyAnswer& a) {
  return {{"j", a.j},      {"n", a.n},
          {"m", a.m},      {"value", a.value},
          {"branch", branch_name(a.branch)}, {"lower", a.lower},
          {"upper", a.upper}};
}

inline json coloring_lines(const TwoColoring& c) {
  json lines = json::array();
  for (const auto& [u, v] : complete_graph(c.shape()).edges())
    lines.push_back(edge_token(u, v) + (c.color_of(u, v) == Color::Red ? " R" : " B"));
  return lines;
}

inline json to_json(const OracleResult& r) {
  json out = {{"arrows", r.arrows},
              {"method", oracle_method_name(r.method)},
              {"nodes_explored", r.nodes_explored}};
  out["certificate"] = r.certificate ? coloring_lines(*r.certificate) : json(nullptr);
  return out;
}

}  // namespace mjstar
