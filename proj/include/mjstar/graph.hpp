#pragma once

// Balanced complete multipartite hosts K_{j x s}, their spanning subgraphs,
// and total red/blue edge colourings.
//
// A Shape is j parts of s slots each.  Vertices are (part, slot) pairs and
// flatten to part * s + slot; edges join vertices of distinct parts and are
// kept in canonical order (smaller flat index first).  Graphs are tiny
// (tens of vertices), so adjacency lives in a byte matrix and degree
// queries are O(1) via a cached counter.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace mjstar {

// j parts ("parts") of s vertices each ("slots").
struct Shape {
  int parts;  // j >= 2
  int slots;  // s >= 1

  int vertex_count() const { return parts * slots; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

struct Vertex {
  int part;
  int slot;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline void check_shape(const Shape& sh) {
  if (sh.parts < 2) throw PreconditionError("shape needs at least 2 parts");
  if (sh.slots < 1) throw PreconditionError("shape needs at least 1 slot per part");
}

inline void check_vertex(const Shape& sh, Vertex v) {
  if (v.part < 0 || v.part >= sh.parts || v.slot < 0 || v.slot >= sh.slots)
    throw PreconditionError("vertex outside shape");
}

inline int flat_index(const Shape& sh, Vertex v) { return v.part * sh.slots + v.slot; }

inline Vertex unflat(const Shape& sh, int idx) { return {idx / sh.slots, idx % sh.slots}; }

// Spanning subgraph of the complete multipartite host: the vertex set is
// always all of K_{j x s}, only edges vary.
class MpGraph {
 public:
  explicit MpGraph(Shape shape) : shape_(shape) {
    check_shape(shape_);
    const int n = shape_.vertex_count();
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    degree_.assign(n, 0);
  }

  const Shape& shape() const { return shape_; }
  int vertex_count() const { return shape_.vertex_count(); }
  int edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(shape_, u);
    check_vertex(shape_, v);
    return adj_[cell(flat_index(shape_, u), flat_index(shape_, v))] != 0;
  }

  // Inserts an edge across parts; rejects loops, within-part pairs and
  // duplicates so an MpGraph is a simple multipartite graph by construction.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(shape_, u);
    check_vertex(shape_, v);
    if (u.part == v.part) throw PreconditionError("edge endpoints must lie in distinct parts");
    const int a = flat_index(shape_, u);
    const int b = flat_index(shape_, v);
    if (adj_[cell(a, b)]) throw PreconditionError("duplicate edge");
    adj_[cell(a, b)] = 1;
    adj_[cell(b, a)] = 1;
    ++degree_[a];
    ++degree_[b];
    ++edge_count_;
  }

  int degree(Vertex v) const {
    check_vertex(shape_, v);
    return degree_[flat_index(shape_, v)];
  }

  // Edges as (u, v) with flat(u) < flat(v), ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    const int n = vertex_count();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (adj_[cell(a, b)]) out.emplace_back(unflat(shape_, a), unflat(shape_, b));
    return out;
  }

 private:
  std::size_t cell(int a, int b) const {
    return static_cast<std::size_t>(a) * vertex_count() + b;
  }

  Shape shape_;
  std::vector<std::uint8_t> adj_;
  std::vector<int> degree_;
  int edge_count_ = 0;
};

// The complete host K_{j x s} itself.
inline MpGraph complete_graph(Shape sh) {
  MpGraph g(sh);
  const int n = sh.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Vertex u = unflat(sh, a), v = unflat(sh, b);
      if (u.part != v.part) g.add_edge(u, v);
    }
  }
  return g;
}

inline int max_degree(const MpGraph& g) {
  int best = 0;
  const Shape& sh = g.shape();
  for (int a = 0; a < g.vertex_count(); ++a) best = std::max(best, g.degree(unflat(sh, a)));
  return best;
}

inline bool is_regular(const MpGraph& g, int d) {
  const Shape& sh = g.shape();
  for (int a = 0; a < g.vertex_count(); ++a)
    if (g.degree(unflat(sh, a)) != d) return false;
  return true;
}

// True iff g contains no star K_{1,n-1}, i.e. every degree is <= n-2.
inline bool star_free(const MpGraph& g, int n) {
  if (n < 1) throw PreconditionError("star order must be positive");
  return max_degree(g) <= n - 2;
}

// Consistency re-check used by tests: simple, symmetric, multipartite,
// degree cache in sync.
inline bool validate(const MpGraph& g) {
  const Shape& sh = g.shape();
  const int n = g.vertex_count();
  std::vector<int> deg(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Vertex u = unflat(sh, a), v = unflat(sh, b);
      if (a == b) {
        if (g.has_edge(u, u)) return false;
        continue;
      }
      const bool e = g.has_edge(u, v);
      if (e != g.has_edge(v, u)) return false;
      if (e && u.part == v.part) return false;
      if (e && a < b) {
        ++deg[a];
        ++deg[b];
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (deg[a] != g.degree(unflat(sh, a))) return false;
  return true;
}

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

// A total two-colouring of the complete host's edges.  Every cross-part
// pair carries exactly one colour; within-part pairs are not edges and
// querying them is an error.
class TwoColoring {
 public:
  // All-Blue colouring of K_{j x s}.
  explicit TwoColoring(Shape shape) : shape_(shape) {
    check_shape(shape_);
    const int n = shape_.vertex_count();
    color_.assign(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(Color::Blue));
  }

  // Colour the given spanning subgraph red and its complement blue.
  static TwoColoring from_red(const MpGraph& red) {
    TwoColoring c(red.shape());
    for (const auto& [u, v] : red.edges()) c.set_color(u, v, Color::Red);
    return c;
  }

  const Shape& shape() const { return shape_; }

  Color color_of(Vertex u, Vertex v) const {
    check_pair(u, v);
    return static_cast<Color>(color_[cell(u, v)]);
  }

  void set_color(Vertex u, Vertex v, Color c) {
    check_pair(u, v);
    color_[cell(u, v)] = static_cast<std::uint8_t>(c);
    color_[cell(v, u)] = static_cast<std::uint8_t>(c);
  }

  int degree(Vertex v, Color c) const {
    check_vertex(shape_, v);
    int d = 0;
    const int n = shape_.vertex_count();
    const int b = flat_index(shape_, v);
    for (int a = 0; a < n; ++a) {
      if (unflat(shape_, a).part == v.part) continue;
      if (color_[static_cast<std::size_t>(b) * n + a] == static_cast<std::uint8_t>(c)) ++d;
    }
    return d;
  }

  int max_degree(Color c) const {
    int best = 0;
    for (int a = 0; a < shape_.vertex_count(); ++a)
      best = std::max(best, degree(unflat(shape_, a), c));
    return best;
  }

  // The spanning subgraph formed by the edges of one colour.
  MpGraph subgraph(Color c) const {
    MpGraph g(shape_);
    const int n = shape_.vertex_count();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        Vertex u = unflat(shape_, a), v = unflat(shape_, b);
        if (u.part != v.part && color_of(u, v) == c) g.add_edge(u, v);
      }
    }
    return g;
  }

  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    check_vertex(shape_, u);
    check_vertex(shape_, v);
    if (u.part == v.part) throw PreconditionError("within-part pairs carry no colour");
  }

  std::size_t cell(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(flat_index(shape_, u)) * shape_.vertex_count() +
           flat_index(shape_, v);
  }

  Shape shape_;
  std::vector<std::uint8_t> color_;
};

inline MpGraph color_subgraph(const TwoColoring& c, Color color) { return c.subgraph(color); }

}  // namespace mjstar
