#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <mjstar/graph.hpp>

using namespace mjstar;

TEST_CASE("complete host edge counts", "[graph]") {
  CHECK(complete_graph({3, 1}).edge_count() == 3);
  CHECK(complete_graph({3, 2}).edge_count() == 12);
  CHECK(complete_graph({4, 3}).edge_count() == 54);
}

TEST_CASE("complete host is (j-1)s regular and validates", "[graph]") {
  for (int j = 2; j <= 5; ++j)
    for (int s = 1; s <= 4; ++s) {
      const MpGraph g = complete_graph({j, s});
      CHECK(is_regular(g, (j - 1) * s));
      CHECK(max_degree(g) == (j - 1) * s);
      CHECK(validate(g));
      CHECK(2 * g.edge_count() == g.vertex_count() * (j - 1) * s);
    }
}

TEST_CASE("flat index round trip", "[graph]") {
  const Shape sh{4, 3};
  for (int a = 0; a < sh.vertex_count(); ++a) {
    const Vertex v = unflat(sh, a);
    CHECK(flat_index(sh, v) == a);
    CHECK(v.part == a / 3);
    CHECK(v.slot == a % 3);
  }
}

TEST_CASE("edge insertion rejects bad edges", "[graph]") {
  MpGraph g({3, 2});
  g.add_edge({0, 0}, {1, 1});
  CHECK(g.has_edge({1, 1}, {0, 0}));
  CHECK(g.degree({0, 0}) == 1);
  CHECK_THROWS_AS(g.add_edge({0, 0}, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(g.add_edge({1, 1}, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(g.add_edge({0, 0}, {3, 0}), PreconditionError);
  CHECK(g.edge_count() == 1);
  CHECK(validate(g));
}

TEST_CASE("edges come out in canonical ascending order", "[graph]") {
  const MpGraph g = complete_graph({3, 2});
  const auto edges = g.edges();
  REQUIRE(edges.size() == 12);
  const Shape& sh = g.shape();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    CHECK(flat_index(sh, edges[k].first) < flat_index(sh, edges[k].second));
    if (k > 0) {
      const auto prev = std::pair{flat_index(sh, edges[k - 1].first),
                                  flat_index(sh, edges[k - 1].second)};
      const auto cur = std::pair{flat_index(sh, edges[k].first),
                                 flat_index(sh, edges[k].second)};
      CHECK(prev < cur);
    }
  }
}

TEST_CASE("star freeness is a max-degree bound", "[graph]") {
  const MpGraph k3 = complete_graph({3, 1});
  CHECK(star_free(k3, 4));   // degrees 2 <= 4-2
  CHECK(!star_free(k3, 3));  // degrees 2 > 3-2

  MpGraph matching({3, 2});  // perfect matching: max degree 1
  matching.add_edge({0, 0}, {1, 1});
  matching.add_edge({1, 0}, {2, 1});
  matching.add_edge({2, 0}, {0, 1});
  CHECK(star_free(matching, 3));
  CHECK(!star_free(matching, 2));
  CHECK_THROWS_AS(star_free(matching, 0), PreconditionError);
}

TEST_CASE("colourings default to all blue", "[graph]") {
  const TwoColoring c(Shape{3, 1});
  CHECK(c.max_degree(Color::Red) == 0);
  CHECK(c.max_degree(Color::Blue) == 2);
  CHECK(c.color_of({0, 0}, {1, 0}) == Color::Blue);
  CHECK_THROWS_AS(c.color_of({0, 0}, {0, 0}), PreconditionError);
}

TEST_CASE("colouring from a red subgraph and back", "[graph]") {
  MpGraph red({3, 2});
  red.add_edge({0, 0}, {1, 0});
  red.add_edge({0, 1}, {2, 1});
  const TwoColoring c = TwoColoring::from_red(red);
  CHECK(c.color_of({0, 0}, {1, 0}) == Color::Red);
  CHECK(c.color_of({0, 0}, {1, 1}) == Color::Blue);

  const MpGraph red_back = color_subgraph(c, Color::Red);
  CHECK(red_back.edge_count() == 2);
  CHECK(red_back.has_edge({0, 1}, {2, 1}));
  const MpGraph blue = color_subgraph(c, Color::Blue);
  CHECK(red_back.edge_count() + blue.edge_count() == complete_graph({3, 2}).edge_count());
  CHECK(validate(red_back));
  CHECK(validate(blue));
}

TEST_CASE("red and blue degrees sum to the host degree", "[graph]") {
  // Exhaust all colourings of K_{3x1} and spot-check K_{3x2} via subsets.
  const Shape small{3, 1};
  const auto small_edges = complete_graph(small).edges();
  for (unsigned mask = 0; mask < 8; ++mask) {
    TwoColoring c(small);
    for (std::size_t k = 0; k < small_edges.size(); ++k)
      if (mask >> k & 1) c.set_color(small_edges[k].first, small_edges[k].second, Color::Red);
    for (int a = 0; a < small.vertex_count(); ++a) {
      const Vertex v = unflat(small, a);
      CHECK(c.degree(v, Color::Red) + c.degree(v, Color::Blue) == 2);
    }
  }

  const Shape sh{3, 2};
  const auto edges = complete_graph(sh).edges();
  for (unsigned mask = 0; mask < 4096; mask += 37) {
    TwoColoring c(sh);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (mask >> k & 1) c.set_color(edges[k].first, edges[k].second, Color::Red);
    for (int a = 0; a < sh.vertex_count(); ++a) {
      const Vertex v = unflat(sh, a);
      CHECK(c.degree(v, Color::Red) + c.degree(v, Color::Blue) == 4);
    }
  }
}

TEST_CASE("colouring equality and colour flip", "[graph]") {
  CHECK(other(Color::Red) == Color::Blue);
  CHECK(other(Color::Blue) == Color::Red);
  TwoColoring a(Shape{3, 1}), b(Shape{3, 1});
  CHECK(a == b);
  a.set_color({0, 0}, {1, 0}, Color::Red);
  CHECK(!(a == b));
  a.set_color({1, 0}, {0, 0}, Color::Blue);
  CHECK(a == b);
}
