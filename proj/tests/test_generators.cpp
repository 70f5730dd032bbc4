#include <sstream>

#include "doctest.h"
#include "finehyp/generators.hpp"
#include "finehyp/graph_io.hpp"

using namespace finehyp;

TEST_CASE("regular tree sizes follow 1 + degree*((degree-1)^r - 1)/(degree-2)") {
  CHECK(regular_tree_size(3, 0) == 1);
  CHECK(regular_tree_size(3, 1) == 4);
  CHECK(regular_tree_size(3, 2) == 10);
  CHECK(regular_tree_size(3, 3) == 22);
  CHECK(regular_tree_size(3, 4) == 46);
  CHECK(regular_tree_size(4, 2) == 17);
  CHECK(regular_tree_size(2, 5) == 11);  // a path
  CHECK_THROWS_AS(regular_tree_size(1, 3), InputError);
  CHECK_THROWS_AS(regular_tree_size(3, -1), InputError);
}

TEST_CASE("regular tree structure") {
  Graph g = regular_tree(3, 2);
  CHECK(g.size() == 10);
  CHECK(g.num_edges() == 9);
  CHECK(g.degree(0) == 3);
  auto row = bfs_distances(g, 0);
  int leaves = 0, internal = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    CHECK(row[v] <= 2);
    if (g.degree(v) == 1) {
      ++leaves;
      CHECK(row[v] == 2);
    } else {
      CHECK(g.degree(v) == 3);
      ++internal;
    }
  }
  CHECK(leaves == 6);
  CHECK(internal == 4);
  // breadth-first ids: depth is monotone in the id
  for (VertexId v = 1; v < g.size(); ++v) CHECK(row[v - 1] <= row[v]);
}

TEST_CASE("farey graph frozen counts") {
  struct Row {
    int q, verts, edges;
  };
  // counts verified against an independent construction
  for (Row r : {Row{1, 4, 5}, Row{2, 8, 13}, Row{3, 16, 29}, Row{5, 40, 77}}) {
    Graph g = farey_graph(r.q);
    CHECK(g.size() == r.verts);
    CHECK(g.num_edges() == r.edges);
  }
  CHECK_THROWS_AS(farey_graph(0), InputError);
}

TEST_CASE("farey adjacency is the determinant condition") {
  Graph g = farey_graph(5);
  REQUIRE(g.has_labels());
  auto at = [&](const std::string& l) {
    auto v = g.find_label(l);
    REQUIRE(v.has_value());
    return *v;
  };
  CHECK(g.label(0) == "1/0");
  CHECK(g.has_edge(at("0/1"), at("1/1")));
  CHECK(g.has_edge(at("0/1"), at("1/0")));
  CHECK(g.has_edge(at("1/2"), at("1/3")));   // |1*3 - 2*1| = 1
  CHECK(g.has_edge(at("-1/2"), at("-1/3")));
  CHECK(g.has_edge(at("2/5"), at("1/2")));   // |2*2 - 5*1| = 1
  CHECK_FALSE(g.has_edge(at("1/2"), at("1/5")));
  CHECK_FALSE(g.has_edge(at("0/1"), at("2/5")));
}

TEST_CASE("farey graphs nest as induced subgraphs") {
  for (int q = 1; q <= 6; ++q) {
    Graph small = farey_graph(q);
    Graph big = farey_graph(q + 1);
    std::vector<VertexId> embed(small.size());
    for (VertexId v = 0; v < small.size(); ++v) {
      auto w = big.find_label(small.label(v));
      REQUIRE_MESSAGE(w.has_value(), "vertex of farey(" << q << ") missing in farey(" << q + 1
                                                        << "): " << small.label(v));
      embed[v] = *w;
    }
    for (VertexId u = 0; u < small.size(); ++u)
      for (VertexId v = u + 1; v < small.size(); ++v)
        CHECK(small.has_edge(u, v) == big.has_edge(embed[u], embed[v]));
  }
}

TEST_CASE("cycle graph") {
  Graph g = cycle_graph(5);
  CHECK(g.size() == 5);
  CHECK(g.num_edges() == 5);
  for (VertexId v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
  CHECK(distance(g, 0, 2) == 2);
  CHECK(distance(g, 0, 3) == 2);
  CHECK_THROWS_AS(cycle_graph(2), InputError);
}

TEST_CASE("generators are deterministic") {
  for (int variant = 0; variant < 2; ++variant) {
    Graph a = variant == 0 ? farey_graph(4) : regular_tree(3, 3);
    Graph b = variant == 0 ? farey_graph(4) : regular_tree(3, 3);
    std::ostringstream sa, sb;
    save_graph(a, sa);
    save_graph(b, sb);
    CHECK(sa.str() == sb.str());
  }
}
