#pragma once

// Closed-form perfect codes from classification witnesses, translation
// closure, the grid-cycle model of the two-reflection case, and the
// structural properties every code of a four-reflection graph must have.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcode/abelian.hpp"
#include "pcode/cayley.hpp"
#include "pcode/classifier.hpp"
#include "pcode/code.hpp"
#include "pcode/error.hpp"
#include "pcode/gendihedral.hpp"

namespace pcode {

// ---------------------------------------------------------------------------
// verification

struct Verdict {
  enum class Kind { Perfect, Undominated, DoublyDominated, BadVertex };
  Kind kind = Kind::Perfect;
  std::optional<Vertex> witness;  // first offending vertex

  explicit operator bool() const { return kind == Kind::Perfect; }
};

inline const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Perfect: return "perfect";
    case Verdict::Kind::Undominated: return "undominated";
    case Verdict::Kind::DoublyDominated: return "doubly-dominated";
    case Verdict::Kind::BadVertex: return "bad-vertex";
  }
  return "?";
}

namespace detail {

template <class ClosedNbhd>
Verdict check_domination(std::size_t n, const std::vector<Vertex>& members, ClosedNbhd&& closed) {
  std::vector<std::uint32_t> hits(n, 0);
  for (auto d : members) {
    if (d >= n) return {Verdict::Kind::BadVertex, d};
    for (auto u : closed(d)) ++hits[u];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] == 0) return {Verdict::Kind::Undominated, v};
    if (hits[v] > 1) return {Verdict::Kind::DoublyDominated, v};
  }
  return {};
}

}  // namespace detail

// Every vertex dominated exactly once?
inline Verdict is_perfect_code(const CayleyGraph& graph, const PerfectCode& code) {
  return detail::check_domination(graph.vertex_count(), code.members,
                                  [&](Vertex v) { return graph.closed_neighborhood(v); });
}

inline Verdict is_perfect_code(const Graph& graph, const PerfectCode& code) {
  return detail::check_domination(graph.vertex_count(), code.members,
                                  [&](Vertex v) { return graph.closed_neighborhood(v); });
}

// ---------------------------------------------------------------------------
// translation

// z D = {z x : x in D}; left translations are automorphisms of Cay(G, S).
inline PerfectCode translate(const DihedralGroup& g, const PerfectCode& code, const GElem& z) {
  std::vector<Vertex> out;
  out.reserve(code.size());
  for (auto v : code.members) out.push_back(g.index(g.mul(z, g.element(v))));
  return PerfectCode(std::move(out));
}

// All translates of the seeds, sorted and deduplicated.
inline std::vector<PerfectCode> all_perfect_codes(const CayleyGraph& graph, const std::vector<PerfectCode>& seeds) {
  const auto& g = graph.group();
  std::set<PerfectCode> seen;
  for (const auto& seed : seeds)
    for (Vertex z = 0; z < graph.vertex_count(); ++z) seen.insert(translate(g, seed, g.element(z)));
  return {seen.begin(), seen.end()};
}

// Codes in the list that contain the vertex of t.
inline std::vector<PerfectCode> codes_containing(const std::vector<PerfectCode>& codes, Vertex v) {
  std::vector<PerfectCode> out;
  for (const auto& c : codes)
    if (c.contains(v)) out.push_back(c);
  return out;
}

namespace detail {

// Codes built in the frame of t' are moved to contain t by z = t t'^{-1}.
inline PerfectCode to_original_frame(const DihedralGroup& g, const GElem& tp, std::vector<GElem> members) {
  const auto z = g.mul(g.t(), g.inv(tp));
  std::vector<Vertex> out;
  for (const auto& x : members) out.push_back(g.index(g.mul(z, x)));
  return PerfectCode(std::move(out));
}

inline std::int64_t signed_of(std::uint64_t x) { return static_cast<std::int64_t>(x); }

}  // namespace detail

// ---------------------------------------------------------------------------
// two reflections: S = {s1, s1^-1, t, t s0}

// For each sign e in {+1, -1}:
//   union over k < m, alpha < n/5 of { s0^(5 alpha + e k) s1^k t, s0^(3 + 5 alpha + e k) s1^k },
// keeping the sets that are perfect codes. Both signs can give the same set.
inline std::vector<PerfectCode> codes_containing_t_case1(const CayleyGraph& graph, const Case1Witness& w) {
  const auto& g = graph.group();
  const auto& a = g.abelian();
  std::vector<Vertex> want{g.index(w.t), g.index(g.mul(w.t, g.rotation(w.s0))), g.index(g.rotation(w.s1)),
                           g.index(g.rotation(a.inv(w.s1)))};
  std::sort(want.begin(), want.end());
  std::vector<Vertex> have;
  for (const auto& x : graph.connection_set().elements()) have.push_back(g.index(x));
  if (want != have) throw UsageError("case-1 witness does not describe the connection set");
  if (w.n != a.order_of(w.s0) || w.n % 5 != 0) throw UsageError("case-1 witness has a bad n");

  std::vector<PerfectCode> out;
  for (int eps : {+1, -1}) {
    std::vector<GElem> members;
    for (std::uint64_t k = 0; k < w.m; ++k) {
      const auto s1k = a.pow(w.s1, detail::signed_of(k));
      for (std::uint64_t alpha = 0; alpha < w.n / 5; ++alpha) {
        const auto e = 5 * detail::signed_of(alpha) + eps * detail::signed_of(k);
        members.push_back(g.mul(g.rotation(a.op(a.pow(w.s0, e), s1k)), w.t));
        members.push_back(g.rotation(a.op(a.pow(w.s0, e + 3), s1k)));
      }
    }
    auto code = detail::to_original_frame(g, w.t, std::move(members));
    if (is_perfect_code(graph, code)) out.push_back(std::move(code));
  }
  canonicalize(out);
  return out;
}

// ---------------------------------------------------------------------------
// four reflections: S = {t, t s0, t s1, t s2}

// Union over alpha < n/5, j < m, k < l of
//   { s0^(5 alpha + a j + b k) s1^j s2^k t,  s0^(5 alpha + a j + b k + v) s1^j s2^k }.
inline PerfectCode codes_containing_t_case2(const CayleyGraph& graph, const Case2Witness& w) {
  const auto& g = graph.group();
  const auto& a = g.abelian();
  const auto& r = w.roles;
  std::vector<Vertex> want{g.index(r.t)}, have;
  for (const auto* s : {&r.s0, &r.s1, &r.s2}) want.push_back(g.index(g.mul(r.t, g.rotation(*s))));
  std::sort(want.begin(), want.end());
  for (const auto& x : graph.connection_set().elements()) have.push_back(g.index(x));
  if (want != have) throw UsageError("case-2 witness roles do not describe the connection set");
  const auto n = a.order_of(r.s0);
  if (w.n != n || n % 5 != 0) throw UsageError("case-2 witness has a bad n");
  // The witness congruences themselves.
  const auto M = detail::signed_of(w.m), L = detail::signed_of(w.l), J = detail::signed_of(w.j);
  if (a.pow(r.s1, M) != a.pow(r.s0, 5 * detail::signed_of(w.alpha1) - w.a * M) ||
      a.pow(r.s2, L) != a.op(a.pow(r.s0, 5 * detail::signed_of(w.alpha2) - w.b * L + w.a * J), a.pow(r.s1, J)))
    throw UsageError("case-2 witness congruences do not hold");

  std::vector<GElem> members;
  for (std::uint64_t alpha = 0; alpha < n / 5; ++alpha) {
    for (std::uint64_t j = 0; j < w.m; ++j) {
      for (std::uint64_t k = 0; k < w.l; ++k) {
        const auto base = a.op(a.pow(r.s1, detail::signed_of(j)), a.pow(r.s2, detail::signed_of(k)));
        const auto e = 5 * detail::signed_of(alpha) + w.a * detail::signed_of(j) + w.b * detail::signed_of(k);
        members.push_back(g.mul(g.rotation(a.op(a.pow(r.s0, e), base)), r.t));
        members.push_back(g.rotation(a.op(a.pow(r.s0, e + w.v), base)));
      }
    }
  }
  return detail::to_original_frame(g, r.t, std::move(members));
}

// Perfect codes containing t (the identity-part reflection), from every witness.
inline std::vector<PerfectCode> codes_containing_t(const CayleyGraph& graph, const ClassificationResult& res) {
  std::vector<PerfectCode> out;
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (const auto& w : res.case1) {
    if (!done.insert({w.t_choice, w.s1_choice}).second) continue;
    for (auto& c : codes_containing_t_case1(graph, w)) out.push_back(std::move(c));
  }
  for (const auto& w : res.case2) out.push_back(codes_containing_t_case2(graph, w));
  canonicalize(out);
  return out;
}

// ---------------------------------------------------------------------------
// grid-cycle model of the two-reflection case

// The abelian group A' = <alpha, beta> realised on Z_{2n} x {0..m-1}:
// alpha = (1, 0), beta = (0, 1), and m beta = (2h, 0).
struct GridCycleGroup {
  std::uint64_t width = 0;   // 2 o(s0)
  std::uint64_t height = 0;  // m
  std::uint64_t carry = 0;   // 2h mod width

  using Point = std::pair<std::uint64_t, std::uint64_t>;

  std::uint64_t size() const { return width * height; }
  std::uint64_t id(Point p) const { return p.first * height + p.second; }
  Point point(std::uint64_t id) const { return {id / height, id % height}; }

  // Inputs may be unreduced in the second coordinate.
  Point add(Point p, Point q) const {
    auto b = p.second + q.second;
    auto wraps = b / height;
    return {(p.first + q.first + wraps * carry) % width, b % height};
  }

  std::uint64_t order_of(Point p) const {
    Point acc = add({0, 0}, p);
    for (std::uint64_t k = 1;; ++k) {
      if (acc == Point{0, 0}) return k;
      acc = add(acc, p);
    }
  }
};

struct Case1Reduction {
  GElem t;
  AElem s0, s1;
  std::uint64_t n = 0, m = 0, h = 0;
  GridCycleGroup model;
  std::vector<std::uint64_t> sigma;     // vertex of Cay(G,S) -> grid point id
  std::vector<Vertex> sigma_inverse;    // grid point id -> vertex
  std::set<std::pair<std::uint64_t, std::uint64_t>> grid_edges;  // {p, q} with p < q
  bool bijective = false;
  bool preserves_edges = false;    // every edge of Cay(G,S) maps to a grid edge
  bool reflects_edges = false;     // every grid edge comes from an edge of Cay(G,S)
  std::uint64_t alpha_order = 0;
  std::uint64_t beta_order = 0;

  bool certified() const { return bijective && preserves_edges && reflects_edges; }

  // The inverse map written out: even a -> s0^(a/2) s1^b, odd a -> s0^((a-1)/2) s1^b t.
  GElem phi(const DihedralGroup& g, std::uint64_t a, std::uint64_t b) const {
    const auto& ab = g.abelian();
    const auto half = static_cast<std::int64_t>(a / 2);
    auto rot = g.rotation(ab.op(ab.pow(s0, half), ab.pow(s1, static_cast<std::int64_t>(b))));
    return a % 2 == 0 ? rot : g.mul(rot, t);
  }
};

// Maps Cay(G, {s1, s1^-1, t, t s0}) onto the grid-cycle graph on Z_{2n} x {0..m-1}
// with edges {(a,b),(a+1,b)}, {(a,c),(a,c+1)}, {(a,m-1),(a+2h,0)} via
// s0^a s1^b t^e -> (2a + e, b), and checks the map exhaustively.
inline Case1Reduction reduce_case1(const CayleyGraph& graph) {
  const auto& cs = graph.connection_set();
  const auto& g = graph.group();
  const auto& ab = g.abelian();
  if (cs.reflection_count() != 2) throw UsageError("reduce_case1 needs exactly two reflections in S");
  auto rots = cs.rotations();
  if (ab.op(rots[0].apart, rots[1].apart) != ab.identity() || ab.order_of(rots[0].apart) <= 2)
    throw UsageError("reduce_case1 needs S = {s1, s1^-1, t, t s0} with s1 not an involution");

  auto norm = normalize(cs, 0);
  Case1Reduction red;
  red.t = norm.t;
  red.s0 = norm.parts[0];
  red.s1 = rots[0].apart;
  red.n = ab.order_of(red.s0);
  SubgroupTable h0(ab, {red.s0});
  auto [m, power] = min_power_in(ab, red.s1, h0);
  red.m = m;
  red.h = discrete_log(ab, power, red.s0).value();
  red.model = {2 * red.n, red.m, (2 * red.h) % (2 * red.n)};

  const auto& grid = red.model;
  for (std::uint64_t a = 0; a < grid.width; ++a) {
    auto edge = [&](GridCycleGroup::Point p, GridCycleGroup::Point q) {
      auto x = grid.id(p), y = grid.id(q);
      red.grid_edges.insert({std::min(x, y), std::max(x, y)});
    };
    for (std::uint64_t b = 0; b < grid.height; ++b) edge({a, b}, {(a + 1) % grid.width, b});
    for (std::uint64_t c = 0; c + 1 < grid.height; ++c) edge({a, c}, {a, c + 1});
    edge({a, grid.height - 1}, {(a + 2 * red.h) % grid.width, 0});
  }

  const auto nv = graph.vertex_count();
  red.sigma.assign(nv, ~std::uint64_t{0});
  red.sigma_inverse.assign(grid.size(), ~Vertex{0});
  bool ok = grid.size() == nv;
  for (std::uint64_t a = 0; a < red.n && ok; ++a) {
    for (std::uint64_t b = 0; b < red.m && ok; ++b) {
      auto rot = g.rotation(ab.op(ab.pow(red.s0, static_cast<std::int64_t>(a)), ab.pow(red.s1, static_cast<std::int64_t>(b))));
      for (int e = 0; e < 2; ++e) {
        auto x = e ? g.mul(rot, red.t) : rot;
        auto v = g.index(x);
        auto p = grid.id({2 * a + e, b});
        if (red.sigma[v] != ~std::uint64_t{0} || red.sigma_inverse[p] != ~Vertex{0}) {
          ok = false;
          break;
        }
        red.sigma[v] = p;
        red.sigma_inverse[p] = v;
      }
    }
  }
  red.bijective = ok && std::none_of(red.sigma.begin(), red.sigma.end(), [](auto p) { return p == ~std::uint64_t{0}; });
  if (!red.bijective) return red;

  red.preserves_edges = true;
  for (Vertex v = 0; v < nv; ++v) {
    for (auto u : graph.neighbors(v)) {
      auto x = red.sigma[v], y = red.sigma[u];
      if (!red.grid_edges.count({std::min(x, y), std::max(x, y)})) red.preserves_edges = false;
    }
  }
  red.reflects_edges = red.grid_edges.size() == graph.edge_count();
  for (auto [p, q] : red.grid_edges)
    if (!graph.adjacent(red.sigma_inverse[p], red.sigma_inverse[q])) red.reflects_edges = false;

  red.alpha_order = grid.order_of({1, 0});
  red.beta_order = grid.order_of({0, 1});
  return red;
}

// ---------------------------------------------------------------------------
// structure of codes in four-reflection graphs

// Every labelling S = {t', t' s0, t' s1, t' s2}: 4 choices of t' times 6 orders.
inline std::vector<Roles> all_roles(const ConnectionSet& cs) {
  if (cs.reflection_count() != 4) throw UsageError("roles need four reflections in S");
  std::vector<Roles> out;
  for (std::size_t tc = 0; tc < 4; ++tc) {
    auto norm = normalize(cs, tc);
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      out.push_back({norm.t, norm.parts[perm[0]], norm.parts[perm[1]], norm.parts[perm[2]]});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

namespace detail {

inline GElem shift(const DihedralGroup& g, const AElem& s0, std::int64_t w, const GElem& x) {
  return g.mul(g.rotation(g.abelian().pow(s0, w)), x);
}

}  // namespace detail

// x in D implies s0^w x not in D for w = +-1..+-4.
inline std::optional<std::string> check_spacing(const CayleyGraph& graph, const Roles& r, const PerfectCode& code) {
  const auto& g = graph.group();
  for (auto v : code.members) {
    const auto x = g.element(v);
    for (std::int64_t w = -4; w <= 4; ++w) {
      if (w == 0) continue;
      auto y = detail::shift(g, r.s0, w, x);
      if (code.contains(g.index(y)))
        return "spacing: " + g.format(x) + " and s0^" + std::to_string(w) + "-shift " + g.format(y) + " both in D";
    }
  }
  return std::nullopt;
}

// For reflections x in D: exactly one of x t s0^2, x t s0^3, x t s0^4 is in D.
inline std::optional<std::string> check_reflection_gap(const CayleyGraph& graph, const Roles& r, const PerfectCode& code) {
  const auto& g = graph.group();
  const auto& a = g.abelian();
  for (auto v : code.members) {
    const auto x = g.element(v);
    if (!x.flip) continue;
    int hits = 0;
    for (std::int64_t k = 2; k <= 4; ++k)
      if (code.contains(g.index(g.mul(g.mul(x, r.t), g.rotation(a.pow(r.s0, k)))))) ++hits;
    if (hits != 1) return "reflection gap: " + g.format(x) + " sees " + std::to_string(hits) + " of x t s0^{2,3,4}";
  }
  return std::nullopt;
}

// In every layer, D consists of {s0^(5 alpha) x, x t s0^(v + 5 alpha)} for a
// reflection x of D in the layer and some v in {2,3,4}.
inline std::optional<std::string> check_layers(const CayleyGraph& graph, const Roles& r, const PerfectCode& code) {
  const auto& g = graph.group();
  const auto& a = g.abelian();
  const auto n = a.order_of(r.s0);
  for (const auto& layer : layers(graph, r)) {
    std::vector<Vertex> in_layer;
    std::set_intersection(layer.vertices.begin(), layer.vertices.end(), code.members.begin(), code.members.end(),
                          std::back_inserter(in_layer));
    std::vector<GElem> refl;
    for (auto v : in_layer)
      if (g.element(v).flip) refl.push_back(g.element(v));
    const auto tag = "layer (" + std::to_string(layer.j) + "," + std::to_string(layer.k) + "): ";
    if (refl.empty()) return tag + "no reflection of D";
    if (n % 5 != 0) return tag + "o(s0) = " + std::to_string(n) + " not divisible by 5";
    if (refl.size() != n / 5 || in_layer.size() != 2 * n / 5)
      return tag + "meets D in " + std::to_string(refl.size()) + " reflections and " +
             std::to_string(in_layer.size() - refl.size()) + " rotations";
    for (const auto& x : refl) {
      bool matched = false;
      for (std::int64_t vv = 2; vv <= 4 && !matched; ++vv) {
        std::vector<Vertex> pattern;
        for (std::int64_t alpha = 0; alpha < static_cast<std::int64_t>(n / 5); ++alpha) {
          pattern.push_back(g.index(detail::shift(g, r.s0, 5 * alpha, x)));
          pattern.push_back(g.index(g.mul(g.mul(x, r.t), g.rotation(a.pow(r.s0, vv + 5 * alpha)))));
        }
        std::sort(pattern.begin(), pattern.end());
        matched = pattern == in_layer;
      }
      if (!matched) return tag + "pattern fails from " + g.format(x);
    }
  }
  return std::nullopt;
}

// For every g in A both windows
//   {g s0^i t : 0 <= i <= 3} u {g s0^i : 1 <= i <= 3}
//   {g s0^i : 0 <= i <= 3}   u {g s0^i t : 0 <= i <= 2}
// meet D.
inline std::optional<std::string> check_windows(const CayleyGraph& graph, const Roles& r, const PerfectCode& code) {
  const auto& g = graph.group();
  const auto& a = g.abelian();
  for (std::uint64_t idx = 0; idx < a.order(); ++idx) {
    const auto base = a.from_index(idx);
    auto rot = [&](std::int64_t i) { return g.rotation(a.op(base, a.pow(r.s0, i))); };
    auto hit = [&](const GElem& x) { return code.contains(g.index(x)); };
    bool w1 = false, w2 = false;
    for (int i = 0; i <= 3; ++i) w1 = w1 || hit(g.mul(rot(i), r.t));
    for (int i = 1; i <= 3; ++i) w1 = w1 || hit(rot(i));
    for (int i = 0; i <= 3; ++i) w2 = w2 || hit(rot(i));
    for (int i = 0; i <= 2; ++i) w2 = w2 || hit(g.mul(rot(i), r.t));
    if (!w1) return "window 1 misses D at " + a.format(base);
    if (!w2) return "window 2 misses D at " + a.format(base);
  }
  return std::nullopt;
}

// All four structural checks over every labelling; returns the failures.
inline std::vector<std::string> check_structure(const CayleyGraph& graph, const PerfectCode& code) {
  std::vector<std::string> failures;
  for (const auto& r : all_roles(graph.connection_set())) {
    for (auto check : {check_spacing, check_reflection_gap, check_layers, check_windows})
      if (auto f = check(graph, r, code)) failures.push_back(*f);
  }
  return failures;
}

}  // namespace pcode
