#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hypersimp/hypergraph.hpp"
#include "hypersimp/io.hpp"
#include "hypersimp/random.hpp"

using namespace hypersimp;

TEST_CASE("edge list with timestamps") {
  const auto g = load_edge_list("1,a,b\n2,a,b,c\n", true);
  CHECK(g.num_vertices() == 3);
  CHECK(g.temporal());
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 1, 2}});
}

TEST_CASE("edge list keeps duplicates and tokenizes on commas and blanks") {
  const auto g = load_edge_list("# comment\na,b\na b\n\n c ,\ta\n");
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 1}, {0, 2}});
  CHECK_FALSE(g.temporal());
  CHECK(g.label(2) == "c");
}

TEST_CASE("edge list errors carry the line") {
  try {
    load_edge_list("a,b\na,a,b\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_edge_list("a\n"), ParseError);
  CHECK_THROWS_AS(load_edge_list("x,a,b\n", true), ParseError);
}

TEST_CASE("timestamps sort stably, ids follow input order") {
  const auto g = load_edge_list("3 x y\n1 y z\n3 z w\n1 x w\n", true);
  // Labels by first appearance: x=0 y=1 z=2 w=3.
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {0, 3}, {0, 1}, {2, 3}});
  CHECK(g.timestamp_ties() == 2);
}

TEST_CASE("incidence json layouts") {
  const auto a = load_incidence_json(R"([["a","b"],["b","c","d"]])");
  CHECK(a.num_vertices() == 4);
  CHECK(a.num_edges() == 2);

  const auto b = load_incidence_json(R"([{"nodes":["a","b","c"],"timestamp":5},{"nodes":["a","b"],"timestamp":2}])");
  CHECK(b.temporal());
  CHECK(b.edges() == std::vector<Edge>{{0, 1}, {0, 1, 2}});

  const auto c = load_incidence_json(
      R"({"node-data":{},"edge-dict":{"e0":[1,2,3],"e1":[2,3]},"edge-data":{"e0":{"timestamp":"2020-01-02"},"e1":{"timestamp":"2020-01-01"}}})");
  CHECK(c.temporal());
  CHECK(c.edge(0).size() == 2);

  CHECK_THROWS(load_incidence_json(R"([["a"]])"));
  CHECK_THROWS(load_incidence_json(R"([[]])"));
  CHECK_THROWS(load_incidence_json(R"({"foo":1})"));
  CHECK_THROWS(load_incidence_json(R"([{"nodes":["a","b"],"timestamp":1},{"nodes":["a","c"],"timestamp":"x"}])"));
}

TEST_CASE("canonical json round trip") {
  const auto g = load_edge_list("1 a b\n2 b c d\n3 a d\n", true);
  const auto back = load_incidence_json(to_canonical_json(g));
  CHECK(back == g);
  const auto again = load_edge_list(to_edge_list(g), true);
  CHECK(again == g);
}

TEST_CASE("preprocess: size window, first-occurrence dedup, compaction") {
  const Hypergraph g(6, {{0, 1}, {0, 1}, {0, 1, 2}, {3, 5}});
  const auto p = preprocess(g);
  CHECK(p.graph.edges() == std::vector<Edge>{{0, 1}, {0, 1, 2}, {3, 4}});
  CHECK(p.dropped_duplicates == 1);
  CHECK(p.graph.num_vertices() == 5);
  CHECK(p.original_vertex == std::vector<Vertex>{0, 1, 2, 3, 5});
  CHECK(preprocess(p.graph).graph == p.graph);

  Edge big(12);
  std::iota(big.begin(), big.end(), Vertex{0});
  const Hypergraph h(12, {big, {0, 1}});
  const auto q = preprocess(h);
  CHECK(q.graph.num_edges() == 1);
  CHECK(q.dropped_by_size == 1);
  CHECK_THROWS_AS(preprocess(Hypergraph(12, {big})), Error);
}

TEST_CASE("degree and size sequences") {
  const Hypergraph g(3, {{0, 1}, {0, 1, 2}});
  CHECK(degree_sequence(g).values() == std::vector<std::uint64_t>{2, 2, 1});
  CHECK(edge_size_sequence(g).counts() == std::map<int, std::uint64_t>{{2, 1}, {3, 1}});

  const auto ex = load_graph_file(HYPERSIMP_FIXTURES "/nested_chain.txt");
  CHECK(edge_size_sequence(ex).counts() == std::map<int, std::uint64_t>{{3, 1}, {4, 1}, {5, 1}, {6, 1}});

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i) {
      Edge e;
      for (Vertex v = 0; v < 10; ++v)
        if (rng.bernoulli(0.3)) e.push_back(v);
      if (e.size() >= 2) edges.push_back(e);
    }
    const Hypergraph h(10, edges);
    CHECK(degree_sequence(h).total() == edge_size_sequence(h).volume());
  }
}

TEST_CASE("simplify collapses multisets") {
  Multigraph m{5, {{0, 0, 1}, {2, 2}, {1, 3, 4}}};
  const auto s = simplify(m);
  CHECK(s.graph.edges() == std::vector<Edge>{{0, 1}, {1, 3, 4}});
  CHECK(s.multiset_edges == 2);
  CHECK(s.dropped_edges == 1);
  CHECK(s.graph.temporal());
  CHECK(m.degrees() == std::vector<std::uint64_t>{2, 2, 2, 1, 1});
}

TEST_CASE("largest component and ties") {
  const Hypergraph g(7, {{4, 5}, {0, 1}, {2, 3, 6}});
  const auto c = largest_component(g);
  CHECK(c.num_vertices() == 3);
  CHECK(c.num_edges() == 1);
  CHECK(is_connected(c));
  CHECK_FALSE(is_connected(g));

  // Two components of size 2: the one holding vertex 0 wins.
  const auto t = largest_component(Hypergraph(4, {{2, 3}, {0, 1}}));
  CHECK(t.num_edges() == 1);
  CHECK(t.label(0) == g.label(0));
}

TEST_CASE("line graph") {
  const Hypergraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto adj = line_graph(g);
  CHECK(adj[0] == std::vector<std::size_t>{1, 4});
  CHECK(adj[2] == std::vector<std::size_t>{1, 3});
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Hypergraph(3, {{0}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 0}}), Error);
}

TEST_CASE("rng substreams are reproducible and distinct") {
  Rng a = Rng::substream(7, stream_id("x"), 0), b = Rng::substream(7, stream_id("x"), 0);
  Rng c = Rng::substream(7, stream_id("x"), 1);
  const auto va = a(), vb = b(), vc = c();
  CHECK(va == vb);
  CHECK(va != vc);

  const std::vector<std::uint64_t> w{0, 3, 0, 1};
  AliasTable table(w);
  Rng r(11);
  std::vector<int> hits(4, 0);
  for (int i = 0; i < 40000; ++i) ++hits[table(r)];
  CHECK(hits[0] == 0);
  CHECK(hits[2] == 0);
  CHECK(hits[1] == doctest::Approx(30000).epsilon(0.03));
}
