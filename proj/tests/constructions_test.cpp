#include "racg/constructions.hpp"

#include <random>

#include "doctest.h"
#include "racg/formats.hpp"
#include "racg/generators.hpp"
#include "test_support.hpp"

using namespace racg;

TEST_CASE("double over everything and over nothing") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 9, 0.4);
    DoubleResult full = double_over(g, VertexSet::all(g.order()));
    CHECK(full.graph == g);

    DoubleResult none = double_over(g, VertexSet(g.order()));
    CHECK(none.graph.order() == 2 * g.order());
    CHECK(same_adjacency(none.graph, disjoint_union(g, g)));
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(none.graph.label(v) == g.label(v) + "#1");
      CHECK(none.graph.label(v + g.order()) == g.label(v) + "#2");
      CHECK(none.origin[v + g.order()] == VertexOrigin{Copy::copy2, v});
    }
  }

  Graph path = parse_edge_list("a x\nx b\n");
  CHECK(double_over(path, VertexSet::all(3)).graph == path);
}

TEST_CASE("star double of C4 is C4") {
  // Hand construction: st(x) = {w, x, y}; z splits into z#1 and z#2, both
  // adjacent to w and y; deleting x leaves the square w-z#1-y-z#2.
  Graph c4 = parse_edge_list("w x\nx y\ny z\nz w\n");
  DoubleResult d = star_double_minus(c4, c4.index_of("x"));
  CHECK(d.graph.labels() == std::vector<std::string>{"w", "y", "z#1", "z#2"});
  CHECK(d.graph.adjacent(d.graph.index_of("w"), d.graph.index_of("z#1")));
  CHECK(d.graph.adjacent(d.graph.index_of("z#2"), d.graph.index_of("y")));
  CHECK_FALSE(d.graph.adjacent(d.graph.index_of("w"), d.graph.index_of("y")));
  CHECK(are_isomorphic(d.graph, gen_cycle(4)));
  CHECK(d.center == c4.index_of("x"));
  verify_star_double(c4, d);
}

TEST_CASE("star double of C5 is C6") {
  Graph c5 = gen_cycle(5);
  for (Vertex v = 0; v < 5; ++v) {
    DoubleResult d = star_double_minus(c5, v);
    CHECK(d.graph.order() == 6);  // 2*5 - 2 - 2
    CHECK(are_isomorphic(d.graph, gen_cycle(6)));
    verify_star_double(c5, d);
  }
  DoubleResult d = star_double_minus(c5, 0);
  CHECK(d.graph.labels() == std::vector<std::string>{"v2", "v3#1", "v4#1", "v5", "v3#2", "v4#2"});
}

TEST_CASE("star double over a dominating vertex deletes it") {
  Graph k4 = gen_complete(4);
  DoubleResult d = star_double_minus(k4, 2);
  CHECK(d.graph == delete_vertex(k4, 2));
  for (const auto& o : d.origin) CHECK(o.copy == Copy::shared);

  Graph star4 = parse_edge_list("h a\nh b\nh c\n");
  CHECK(star_double_minus(star4, 0).graph == delete_vertex(star4, 0));
}

TEST_CASE("star double errors and degenerate inputs") {
  Graph k1 = gen_complete(1);
  CHECK(star_double_minus(k1, 0).graph.order() == 0);
  CHECK_THROWS_AS(star_double_minus(k1, 1), std::out_of_range);
  CHECK_THROWS_AS(double_over(k1, VertexSet(3)), std::invalid_argument);

  // Isolated x: the rest is doubled outright.
  Graph g = parse_edge_list("vertex x\na b\n");
  DoubleResult d = star_double_minus(g, 0);
  CHECK(d.graph.order() == 4);
  CHECK(d.graph.size() == 2);
  verify_star_double(g, d);
}

TEST_CASE("star double identities on random graphs") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 12;
    Graph g = testing::random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    Vertex x = rng() % n;
    DoubleResult d = star_double_minus(g, x);
    validate(d.graph);
    const std::size_t star_edges = induced_subgraph(g, star(g, x)).size();
    REQUIRE(d.graph.order() == 2 * n - g.degree(x) - 2);
    REQUIRE(d.graph.size() == 2 * g.size() - star_edges - g.degree(x));
    REQUIRE(is_automorphism(d.graph, d.copy_swap()));
    CHECK_NOTHROW(verify_star_double(g, d));
  }
}

TEST_CASE("verify_star_double catches a tampered result") {
  Graph c5 = gen_cycle(5);
  DoubleResult d = star_double_minus(c5, 0);
  DoubleResult extra = d;
  extra.graph.add_edge(extra.graph.index_of("v3#1"), extra.graph.index_of("v3#2"));
  CHECK_THROWS_AS(verify_star_double(c5, extra), std::logic_error);

  DoubleResult wrong_origin = d;
  wrong_origin.origin[0].copy = Copy::copy1;
  CHECK_THROWS_AS(verify_star_double(c5, wrong_origin), std::logic_error);
}

TEST_CASE("iterated doubles of C5 and K4") {
  IterateOptions opts;
  opts.depth = 1;
  auto c5 = iterate_doubles(gen_cycle(5), opts);
  REQUIRE(c5.size() == 6);
  CHECK(c5[0].path.empty());
  CHECK_FALSE(c5[0].verdict->all_burst);
  for (std::size_t i = 1; i < c5.size(); ++i) {
    CHECK(are_isomorphic(c5[i].graph, gen_cycle(6)));
    REQUIRE(c5[i].verdict);
    CHECK_FALSE(c5[i].verdict->all_burst);
    CHECK(c5[i].path.size() == 1);
    CHECK(c5[i].path[0].order == 6);
  }
  CHECK_FALSE(c5[1].duplicate_of.has_value());
  for (std::size_t i = 2; i < c5.size(); ++i) CHECK(c5[i].duplicate_of == 1u);

  auto k4 = iterate_doubles(gen_complete(4), opts);
  REQUIRE(k4.size() == 5);
  for (const auto& node : k4) {
    REQUIRE(node.verdict);
    CHECK(node.verdict->all_burst);
    CHECK(node.verdict->counts.empty());
  }
}

TEST_CASE("iterated doubles honour vertex lists and size limits") {
  IterateOptions opts;
  opts.depth = 2;
  opts.vertices = {"v1"};
  auto nodes = iterate_doubles(gen_cycle(5), opts);
  // Level 1 doubles v1 only; level 2 finds no vertex named v1 in the double.
  REQUIRE(nodes.size() == 2);
  CHECK(nodes[1].path[0].vertex == "v1");

  IterateOptions small;
  small.depth = 1;
  small.max_order = 5;
  auto limited = iterate_doubles(gen_cycle(5), small);
  REQUIRE(limited.size() == 6);
  for (std::size_t i = 1; i < limited.size(); ++i) {
    CHECK(limited[i].error.has_value());
    CHECK_FALSE(limited[i].verdict.has_value());
  }

  CHECK_THROWS_AS(iterate_doubles(gen_cycle(5), IterateOptions{.depth = 0}), std::invalid_argument);
}

TEST_CASE("iterated doubles are worker-count independent") {
  IterateOptions one;
  one.depth = 2;
  IterateOptions many = one;
  many.workers = 6;
  auto a = iterate_doubles(gen_hypercube(3), one);
  auto b = iterate_doubles(gen_hypercube(3), many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph == b[i].graph);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].duplicate_of == b[i].duplicate_of);
  }
}
