#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "pcode/cayley.hpp"
#include "pcode/survey.hpp"

using namespace pcode;

namespace {

CayleyGraph make(const char* group, const char* set) {
  auto g = DihedralGroup::parse(group);
  return build_graph(parse_connection_set(g, set));
}

}  // namespace

TEST(Cayley, MatchesReferenceAdjacency) {
  for (long n : {5L, 10L, 15L}) {
    auto g = DihedralGroup::parse("Z" + std::to_string(n));
    for (const auto& cs : all_connection_sets(g)) {
      std::vector<brute::D> s;
      for (const auto& x : cs.elements()) s.push_back({static_cast<long>(x.apart.exponents[0]), x.flip ? 1 : 0});
      auto expect = brute::dihedral_cayley(n, s);
      auto graph = build_graph(cs).to_graph();
      ASSERT_EQ(graph.adjacency.size(), expect.size());
      for (std::size_t v = 0; v < expect.size(); ++v) {
        std::vector<unsigned> got(graph.adjacency[v].begin(), graph.adjacency[v].end());
        EXPECT_EQ(got, expect[v]);
      }
    }
  }
}

TEST(Cayley, QuarticRegularAndSimple) {
  for (auto lit : {"Z5", "Z10xZ2", "Z5xZ5"}) {
    auto g = DihedralGroup::parse(lit);
    auto sets = all_connection_sets(g);
    for (std::size_t i = 0; i < sets.size(); i += 17) {
      auto graph = build_graph(sets[i]);
      EXPECT_EQ(graph.edge_count(), 2 * graph.vertex_count());
      for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        auto nb = graph.closed_neighborhood(v);
        EXPECT_EQ(nb.size(), 5u);
        for (auto u : graph.neighbors(v)) {
          EXPECT_NE(u, v);
          EXPECT_TRUE(graph.adjacent(u, v));
        }
      }
    }
  }
}

TEST(Cayley, LeftTranslationsAreAutomorphisms) {
  std::mt19937 rng(5);
  auto graph = make("Z10xZ2", "(1,1),(9,1),t,(3,0)t");
  const auto& g = graph.group();
  for (int trial = 0; trial < 20; ++trial) {
    auto z = g.element(static_cast<Vertex>(rng() % g.order()));
    for (Vertex u = 0; u < graph.vertex_count(); ++u)
      for (auto v : graph.neighbors(u))
        EXPECT_TRUE(graph.adjacent(g.index(g.mul(z, g.element(u))), g.index(g.mul(z, g.element(v)))));
  }
}

TEST(Cayley, DotExport) {
  auto dot = export_dot(make("Z5", "t,(4)t,(2)t,(1)t").to_graph());
  EXPECT_EQ(dot.rfind("graph cayley {", 0), 0u);
  std::size_t edges = 0, nodes = 0;
  for (std::size_t p = 0; (p = dot.find(" -- ", p)) != std::string::npos; ++p) ++edges;
  for (std::size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p) ++nodes;
  EXPECT_EQ(edges, 20u);
  EXPECT_EQ(nodes, 10u);
}

TEST(Cayley, JsonRoundTrip) {
  auto graph = make("Z10xZ2", "(1,1),(9,1),t,(3,0)t").to_graph();
  auto back = import_json(std::string_view(export_json(graph)));
  EXPECT_EQ(back.adjacency, graph.adjacency);
  EXPECT_EQ(back.labels, graph.labels);
  EXPECT_EQ(back.spec, graph.spec);
  EXPECT_EQ(back.connection_set, graph.connection_set);
  EXPECT_EQ(back.edge_count(), 80u);
}

TEST(Cayley, JsonImportRejectsMalformedInput) {
  EXPECT_THROW(import_json(std::string_view("not json")), ParseError);
  EXPECT_THROW(import_json(std::string_view(R"({"vertices": 3})")), ParseError);
  EXPECT_THROW(import_json(std::string_view(R"({"vertices": ["a","b"], "edges": [[0, 5]]})")), ParseError);
}

TEST(Cayley, LayersPartitionTheVertices) {
  auto graph = make("Z10xZ2", "t,(1,0)t,(2,1)t,(5,0)t");
  const auto& a = graph.group().abelian();
  Roles roles{graph.group().t(), a.parse_element("(9,0)"), a.parse_element("(8,1)"), a.parse_element("(5,0)")};
  auto ls = layers(graph, roles);
  std::vector<Vertex> all;
  for (const auto& layer : ls) {
    EXPECT_EQ(layer.vertices.size(), 2 * a.order_of(roles.s0));
    all.insert(all.end(), layer.vertices.begin(), layer.vertices.end());
  }
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all.size(), graph.vertex_count());
  EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());

  Roles wrong{graph.group().t(), a.parse_element("(1,0)"), a.parse_element("(8,1)"), a.parse_element("(5,0)")};
  EXPECT_THROW(layers(graph, wrong), UsageError);
}
