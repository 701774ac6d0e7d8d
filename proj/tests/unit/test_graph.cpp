#include "../oracles.hpp"
#include "doctest.h"
#include "isouni/error.hpp"
#include "isouni/graph.hpp"

using namespace isouni;

namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.push_back({i, j});
  return make(n, e);
}

}  // namespace

TEST_CASE("graph construction") {
  const Graph g = make(3, {{1, 0}, {1, 2}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(make(2, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(make(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(make(2, {{0, 1}, {1, 0}}), InvalidArgument);
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(path(3), 2) == DistanceVector{2, 1, 0});
  CHECK(bfs_distances(complete(3), 0) == DistanceVector{0, 1, 1});
  CHECK(bfs_distances(make(4, {{0, 1}, {2, 3}}), 0) == DistanceVector{0, 1, kInfinity, kInfinity});
  CHECK_THROWS_AS(bfs_distances(path(3), 3), InvalidArgument);

  for (double p : {0.01, 0.05, 0.3}) {
    const Graph g = random_graph(300, p, 9);
    BfsRunner runner(g);
    for (VertexId s = 0; s < 300; s += 17) {
      const auto d = runner.run(s);
      CHECK(std::vector<Distance>(d.begin(), d.end()) == oracle::bfs(g, s));
    }
  }
}

TEST_CASE("dfs spanning tree") {
  const Graph tree = make(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
  for (VertexId root = 0; root < 5; ++root) {
    const RootedTree t = dfs_spanning_tree(tree, root);
    CHECK(t.root() == root);
    CHECK(t.to_graph().edges() == tree.edges());
  }

  const RootedTree c4 = dfs_spanning_tree(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0);
  CHECK(c4.parents() == std::vector<VertexId>{kNoVertex, 0, 1, 2});
  CHECK(c4.is_ancestor(0, 3));

  const RootedTree k4 = dfs_spanning_tree(complete(4), 0);
  CHECK(k4.path_from_root(3) == std::vector<VertexId>{0, 1, 2, 3});

  // Every non-tree edge joins an ancestor and a descendant.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_graph(80, 0.1, seed);
    if (!is_connected(g)) continue;
    const RootedTree t = dfs_spanning_tree(g, 0);
    for (const auto& e : g.edges()) CHECK((t.is_ancestor(e.u, e.v) || t.is_ancestor(e.v, e.u)));
  }
  CHECK_THROWS_AS(dfs_spanning_tree(make(2, {}), 0), NotConnected);
}

TEST_CASE("tour ordering") {
  const Graph p3 = path(3);
  const auto o = tour_ordering(p3, dfs_spanning_tree(p3, 0));
  CHECK(o.vertices() == std::vector<VertexId>{0, 1, 2});
  CHECK(consecutive_distance_sum(p3, o) == 2);

  const Graph star = make(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = tour_ordering(star, dfs_spanning_tree(star, 0));
  CHECK(s.vertices() == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(consecutive_distance_sum(star, s) == 5);

  const Graph k1(1);
  CHECK(consecutive_distance_sum(k1, tour_ordering(k1, dfs_spanning_tree(k1, 0))) == 0);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph t = random_tree(200, seed);
    CHECK(consecutive_distance_sum(t, tour_ordering(t, dfs_spanning_tree(t, 0))) <= 400);
  }
}

TEST_CASE("connected graph enumeration") {
  const std::size_t expected[] = {0, 1, 1, 4, 38, 728};
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(connected_graphs(n).size() == expected[n]);
  }
  std::size_t all = 0;
  for_each_graph(3, [&](const Graph&) { ++all; });
  CHECK(all == 8);
  CHECK_THROWS_AS(connected_graphs(kMaxEnumerationOrder + 1), InvalidArgument);
}

TEST_CASE("random generators") {
  CHECK(random_graph(5, 1.0, 4).edges() == complete(5).edges());
  CHECK(random_graph(5, 0.0, 4).edge_count() == 0);
  CHECK(random_graph(100, 0.2, 5).edges() == random_graph(100, 0.2, 5).edges());
  CHECK(random_graph(100, 0.2, 5).edges() != random_graph(100, 0.2, 6).edges());
  CHECK_THROWS_AS(random_graph(5, 1.5, 1), InvalidArgument);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK(is_tree(random_tree(500, seed)));
  CHECK(random_tree(50, 3).edges() == random_tree(50, 3).edges());
}

TEST_CASE("tree centroid") {
  CHECK(tree_centroid(path(3)) == 1);
  CHECK(tree_centroid(make(4, {{3, 0}, {3, 1}, {3, 2}})) == 3);
  CHECK(tree_centroid(path(4)) == 1);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph t = random_tree(101, seed);
    const VertexId c = tree_centroid(t);
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < 101; ++v)
      if (v != c) rest.push_back(v);
    for (const auto& comp : connected_components(induced_subgraph(t, rest))) CHECK(comp.size() <= 50);
  }
}

TEST_CASE("components and induced subgraphs") {
  const Graph g = make(5, {{0, 1}, {2, 3}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<VertexId>{0, 1});
  CHECK(comps[2] == std::vector<VertexId>{4});
  CHECK_FALSE(is_connected(g));
  const std::vector<VertexId> keep{2, 3};
  CHECK(induced_subgraph(g, keep).edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("graph text format") {
  const Graph g = parse_graph("# triangle\n3 3\n0 1\n1 2\n\n0 2\n");
  CHECK(g.edges() == complete(3).edges());
  CHECK(parse_graph(format_graph(g)).edges() == g.edges());
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph"), IoError);
}
