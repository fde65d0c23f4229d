#pragma once

// Cayley graphs Cay(G, S) on generalized dihedral groups.
//
// Neighbourhoods are N(x) = x S, i.e. x ~ y iff x^{-1} y in S. The other
// common convention (y x^{-1} in S) gives an isomorphic graph via x -> x^{-1};
// this one makes left translations x -> z x the graph automorphisms.

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pcode/error.hpp"
#include "pcode/gendihedral.hpp"

namespace pcode {

// Plain undirected simple graph; the oracle works on these.
struct Graph {
  std::vector<std::vector<Vertex>> adjacency;  // sorted, symmetric
  std::vector<std::string> labels;
  std::string spec;                         // optional metadata
  std::vector<std::string> connection_set;  // optional metadata

  std::size_t vertex_count() const { return adjacency.size(); }

  std::size_t edge_count() const {
    std::size_t deg = 0;
    for (const auto& nbrs : adjacency) deg += nbrs.size();
    return deg / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < adjacency.size(); ++u)
      for (auto v : adjacency[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    auto out = adjacency.at(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }
};

class CayleyGraph {
 public:
  explicit CayleyGraph(ConnectionSet cs) : cs_(std::move(cs)) {
    const auto& g = cs_.group();
    const auto n = static_cast<Vertex>(g.order());
    neighbors_.resize(std::size_t{n} * kDegree);
    for (Vertex v = 0; v < n; ++v) {
      const auto x = g.element(v);
      for (std::size_t i = 0; i < kDegree; ++i) neighbors_[v * kDegree + i] = g.index(g.mul(x, cs_.elements()[i]));
    }
  }

  static constexpr std::size_t kDegree = 4;

  const ConnectionSet& connection_set() const { return cs_; }
  const DihedralGroup& group() const { return cs_.group(); }
  std::size_t vertex_count() const { return neighbors_.size() / kDegree; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  // x s for s in S, in connection-set order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return std::span<const Vertex>(neighbors_).subspan(std::size_t{v} * kDegree, kDegree);
  }

  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    auto nb = neighbors(v);
    std::vector<Vertex> out(nb.begin(), nb.end());
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
  }

  Vertex vertex(const GElem& x) const { return group().index(x); }
  GElem element(Vertex v) const { return group().element(v); }
  std::string label(Vertex v) const { return group().format(element(v)); }

  Graph to_graph() const {
    Graph out;
    out.adjacency.resize(vertex_count());
    out.labels.reserve(vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v) {
      auto nb = neighbors(v);
      out.adjacency[v].assign(nb.begin(), nb.end());
      std::sort(out.adjacency[v].begin(), out.adjacency[v].end());
      out.labels.push_back(label(v));
    }
    out.spec = group().abelian().to_string();
    for (const auto& s : cs_.elements()) out.connection_set.push_back(group().format(s));
    return out;
  }

 private:
  ConnectionSet cs_;
  std::vector<Vertex> neighbors_;  // flat, kDegree per vertex
};

inline CayleyGraph build_graph(ConnectionSet cs) { return CayleyGraph(std::move(cs)); }

// A choice of distinguished reflection t' in S and names for the A-parts:
// S = {t', t' s0, t' s1, t' s2} when all four elements are reflections.
struct Roles {
  GElem t;
  AElem s0, s1, s2;
};

struct Layer {
  std::uint64_t j = 0, k = 0;
  std::vector<Vertex> vertices;  // sorted, 2n of them
};

// Layers {s0^i s1^j s2^k t'^e}, 0 <= j < m, 0 <= k < l.
inline std::vector<Layer> layers(const CayleyGraph& graph, const Roles& roles) {
  const auto& g = graph.group();
  const auto& a = g.abelian();
  if (!roles.t.flip) throw UsageError("layer roles need a reflection as t");
  std::vector<GElem> expected{roles.t};
  for (const auto* s : {&roles.s0, &roles.s1, &roles.s2}) expected.push_back(g.mul(roles.t, g.rotation(*s)));
  std::vector<Vertex> want, have;
  for (const auto& x : expected) want.push_back(g.index(x));
  for (const auto& x : graph.connection_set().elements()) have.push_back(g.index(x));
  std::sort(want.begin(), want.end());
  if (want != have || std::adjacent_find(want.begin(), want.end()) != want.end())
    throw UsageError("roles do not describe the connection set as {t, t s0, t s1, t s2}");

  const auto n = a.order_of(roles.s0);
  SubgroupTable h0(a, {roles.s0});
  SubgroupTable h01(a, {roles.s0, roles.s1});
  const auto m = min_power_in(a, roles.s1, h0).m;
  const auto l = min_power_in(a, roles.s2, h01).m;

  std::vector<Layer> out;
  for (std::uint64_t j = 0; j < m; ++j) {
    for (std::uint64_t k = 0; k < l; ++k) {
      Layer layer{j, k, {}};
      auto base = a.op(a.pow(roles.s1, static_cast<std::int64_t>(j)), a.pow(roles.s2, static_cast<std::int64_t>(k)));
      for (std::uint64_t i = 0; i < n; ++i) {
        auto rot = g.rotation(a.op(a.pow(roles.s0, static_cast<std::int64_t>(i)), base));
        layer.vertices.push_back(g.index(rot));
        layer.vertices.push_back(g.index(g.mul(rot, roles.t)));
      }
      std::sort(layer.vertices.begin(), layer.vertices.end());
      out.push_back(std::move(layer));
    }
  }
  return out;
}

inline std::string export_dot(const Graph& graph) {
  std::ostringstream out;
  out << "graph cayley {\n";
  if (!graph.spec.empty()) {
    out << "  // Dih(" << graph.spec << "), S = {";
    for (std::size_t i = 0; i < graph.connection_set.size(); ++i) out << (i ? "," : "") << graph.connection_set[i];
    out << "}\n";
  }
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << v;
    if (v < graph.labels.size()) out << " [label=\"" << graph.labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::json graph_to_json(const Graph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"spec", graph.spec},
          {"connection_set", graph.connection_set},
          {"vertices", graph.labels},
          {"edges", std::move(edges)}};
}

inline std::string export_json(const Graph& graph) { return graph_to_json(graph).dump(2) + "\n"; }

// Accepts any simple undirected graph in the export schema.
inline Graph import_json(const nlohmann::json& doc) {
  Graph graph;
  try {
    if (doc.contains("spec")) graph.spec = doc.at("spec").get<std::string>();
    if (doc.contains("connection_set")) graph.connection_set = doc.at("connection_set").get<std::vector<std::string>>();
    graph.labels = doc.at("vertices").get<std::vector<std::string>>();
    graph.adjacency.resize(graph.labels.size());
    for (const auto& e : doc.at("edges")) {
      auto u = e.at(0).get<Vertex>();
      auto v = e.at(1).get<Vertex>();
      if (u >= graph.labels.size() || v >= graph.labels.size())
        throw ParseError("edge endpoint out of range");
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
      graph.adjacency[u].push_back(v);
      graph.adjacency[v].push_back(u);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  for (auto& nbrs : graph.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return graph;
}

inline Graph import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  return import_json(doc);
}

}  // namespace pcode
