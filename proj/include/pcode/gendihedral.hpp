#pragma once

// Generalized dihedral group Dih(A) = A x| <t>, with t a t = a^{-1} for all
// a in A. An element a t^e is stored as its A-part plus the reflection bit e.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcode/abelian.hpp"
#include "pcode/error.hpp"

namespace pcode {

using Vertex = std::uint32_t;

struct GElem {
  AElem apart;
  bool flip = false;  // true for the coset tA

  friend bool operator==(const GElem&, const GElem&) = default;
  friend auto operator<=>(const GElem&, const GElem&) = default;
};

class DihedralGroup {
 public:
  DihedralGroup() = default;
  explicit DihedralGroup(AbelianSpec abelian) : a_(std::move(abelian)) {}

  static DihedralGroup parse(std::string_view text, std::uint64_t max_order = kDefaultMaxOrder) {
    return DihedralGroup(AbelianSpec::parse(text, max_order));
  }

  const AbelianSpec& abelian() const { return a_; }
  std::uint64_t order() const { return 2 * a_.order(); }
  std::string to_string() const { return "Dih(" + a_.to_string() + ")"; }

  friend bool operator==(const DihedralGroup& x, const DihedralGroup& y) { return x.a_ == y.a_; }

  GElem identity() const { return {a_.identity(), false}; }
  GElem t() const { return {a_.identity(), true}; }
  GElem rotation(AElem a) const { return {std::move(a), false}; }
  GElem reflection(AElem a) const { return {std::move(a), true}; }  // a * t

  // (a t^e)(b t^d) = (a + (-1)^e b) t^(e xor d)
  GElem mul(const GElem& x, const GElem& y) const {
    auto b = x.flip ? a_.inv(y.apart) : y.apart;
    return {a_.op(x.apart, b), x.flip != y.flip};
  }

  GElem inv(const GElem& x) const {
    if (x.flip) {
      a_.check(x.apart);
      return x;
    }
    return {a_.inv(x.apart), false};
  }

  bool is_identity(const GElem& x) const { return !x.flip && a_.is_identity(x.apart); }

  // Canonical vertex index: 2 * index(a) + e.
  Vertex index(const GElem& x) const { return static_cast<Vertex>(2 * a_.index(x.apart) + (x.flip ? 1 : 0)); }
  GElem element(Vertex v) const { return {a_.from_index(v / 2), (v & 1u) != 0}; }

  // "e", "t", "(1,0)", "(1,0)t", "3t"; "·" or "*" may separate the A-part from t.
  GElem parse_element(std::string_view text) const {
    auto s = detail::trim(text);
    if (s == "e") return identity();
    if (s == "t") return t();
    bool flip = false;
    if (!s.empty() && (s.back() == 't' || s.back() == 'T')) {
      flip = true;
      s.remove_suffix(1);
      s = detail::trim(s);
      if (!s.empty() && s.back() == '*') s.remove_suffix(1);
      else if (s.size() >= 2 && s.substr(s.size() - 2) == "\xC2\xB7") s.remove_suffix(2);  // U+00B7
      s = detail::trim(s);
    }
    if (s.empty()) throw ParseError("bad element literal '" + std::string(text) + "'");
    return {a_.parse_element(s), flip};
  }

  std::string format(const GElem& x) const {
    if (a_.is_identity(x.apart)) return x.flip ? "t" : "e";
    return a_.format(x.apart) + (x.flip ? "t" : "");
  }

  // Comma-separated literals, optionally wrapped in braces.
  std::vector<GElem> parse_set(std::string_view text) const {
    auto s = detail::trim(text);
    if (!s.empty() && s.front() == '{') {
      if (s.back() != '}') throw ParseError("unterminated set literal '" + std::string(text) + "'");
      s = s.substr(1, s.size() - 2);
    }
    std::vector<GElem> out;
    if (detail::trim(s).empty()) return out;
    for (auto part : detail::split_top_level(s, ',')) out.push_back(parse_element(part));
    return out;
  }

  std::string format_set(const std::vector<GElem>& xs) const {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += format(xs[i]);
    }
    return out;
  }

 private:
  AbelianSpec a_;
};

enum class Rejection { NotQuartic, ContainsIdentity, NotInverseClosed, NoReflection, NotGenerating };

inline const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::NotQuartic: return "NotQuartic";
    case Rejection::ContainsIdentity: return "ContainsIdentity";
    case Rejection::NotInverseClosed: return "NotInverseClosed";
    case Rejection::NoReflection: return "NoReflection";
    case Rejection::NotGenerating: return "NotGenerating";
  }
  return "?";
}

class ValidationError : public Error {
 public:
  ValidationError(Rejection reason, const std::string& detail)
      : Error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}
  Rejection reason() const { return reason_; }

 private:
  Rejection reason_;
};

// Whether the elements generate the whole group (BFS over right multiplication).
inline bool generates(const DihedralGroup& g, const std::vector<GElem>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<GElem> stack{g.identity()};
  seen[g.index(g.identity())] = true;
  std::uint64_t count = 1;
  while (!stack.empty()) {
    auto x = std::move(stack.back());
    stack.pop_back();
    for (const auto& s : gens) {
      auto y = g.mul(x, s);
      auto idx = g.index(y);
      if (!seen[idx]) {
        seen[idx] = true;
        ++count;
        stack.push_back(std::move(y));
      }
    }
  }
  return count == g.order();
}

// Validated connection set of a connected quartic Cayley graph on Dih(A).
class ConnectionSet {
 public:
  const DihedralGroup& group() const { return group_; }
  // Sorted by canonical vertex index.
  const std::vector<GElem>& elements() const { return elements_; }
  std::vector<GElem> reflections() const { return filter(true); }
  std::vector<GElem> rotations() const { return filter(false); }
  std::size_t reflection_count() const { return filter(true).size(); }
  std::string to_string() const { return group_.format_set(elements_); }

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  friend std::optional<std::pair<Rejection, std::string>> check_connection_set(const DihedralGroup&,
                                                                              const std::vector<GElem>&);
  friend ConnectionSet validate_connection_set(const DihedralGroup&, std::vector<GElem>);

  std::vector<GElem> filter(bool flip) const {
    std::vector<GElem> out;
    for (const auto& x : elements_)
      if (x.flip == flip) out.push_back(x);
    return out;
  }

  DihedralGroup group_;
  std::vector<GElem> elements_;
};

// Returns the first violated rule, or nothing when the set is valid.
inline std::optional<std::pair<Rejection, std::string>> check_connection_set(const DihedralGroup& g,
                                                                           const std::vector<GElem>& raw) {
  for (const auto& x : raw) {
    if (x.apart.exponents.size() != g.abelian().rank())
      throw StructuralError("connection set element does not belong to " + g.to_string());
    g.abelian().check(x.apart);
  }
  std::vector<Vertex> idx;
  for (const auto& x : raw) idx.push_back(g.index(x));
  std::sort(idx.begin(), idx.end());
  if (raw.size() != 4 || std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    return std::pair{Rejection::NotQuartic, "need exactly 4 distinct elements, got " + std::to_string(raw.size())};
  for (const auto& x : raw)
    if (g.is_identity(x)) return std::pair{Rejection::ContainsIdentity, "identity e is in the set"};
  for (const auto& x : raw) {
    auto xi = g.inv(x);
    if (!std::binary_search(idx.begin(), idx.end(), g.index(xi)))
      return std::pair{Rejection::NotInverseClosed,
                       "inverse " + g.format(xi) + " of " + g.format(x) + " is missing"};
  }
  if (std::none_of(raw.begin(), raw.end(), [](const GElem& x) { return x.flip; }))
    return std::pair{Rejection::NoReflection, "no element of tA"};
  if (!generates(g, raw)) return std::pair{Rejection::NotGenerating, "set does not generate " + g.to_string()};
  return std::nullopt;
}

inline ConnectionSet validate_connection_set(const DihedralGroup& g, std::vector<GElem> raw) {
  if (auto bad = check_connection_set(g, raw)) throw ValidationError(bad->first, bad->second);
  ConnectionSet cs;
  cs.group_ = g;
  std::sort(raw.begin(), raw.end(), [&](const GElem& x, const GElem& y) { return g.index(x) < g.index(y); });
  cs.elements_ = std::move(raw);
  return cs;
}

inline ConnectionSet parse_connection_set(const DihedralGroup& g, std::string_view text) {
  return validate_connection_set(g, g.parse_set(text));
}

}  // namespace pcode
