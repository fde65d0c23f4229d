#pragma once

// Existence criterion for perfect codes in connected quartic Cayley graphs
// Cay(Dih(A), S).
//
// Any reflection t' in S may play the role of the defining involution, since
// t' a t' = a^{-1} for every a in A. Rewriting S around t' turns each other
// reflection c t into t' s with s = c0 - c (c0 the A-part of t'). The
// classifier tries every choice of t' and every naming of the A-parts and
// records each parameter tuple for which the criterion holds.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "pcode/abelian.hpp"
#include "pcode/cayley.hpp"
#include "pcode/error.hpp"
#include "pcode/gendihedral.hpp"

namespace pcode {

enum class CodeCase { Case1, Case2, NoCode };

// The shape reasons: one reflection, three reflections, or two reflections with both rotations involutions.
enum class NoCodeReason { None, NotDivisibleBy5, SingleReflection, ThreeReflections, InvolutionPair, CongruenceFail };

inline const char* to_string(CodeCase c) {
  switch (c) {
    case CodeCase::Case1: return "Case1";
    case CodeCase::Case2: return "Case2";
    case CodeCase::NoCode: return "NoCode";
  }
  return "?";
}

inline const char* to_string(NoCodeReason r) {
  switch (r) {
    case NoCodeReason::None: return "None";
    case NoCodeReason::NotDivisibleBy5: return "NotDivisibleBy5";
    case NoCodeReason::SingleReflection: return "SingleReflection";
    case NoCodeReason::ThreeReflections: return "ThreeReflections";
    case NoCodeReason::InvolutionPair: return "InvolutionPair";
    case NoCodeReason::CongruenceFail: return "CongruenceFail";
  }
  return "?";
}

// (1 - (-1)^k) / 2
constexpr int parity_indicator(int k) { return (k % 2 + 2) % 2; }

// S rewritten around one of its reflections.
struct Normalization {
  std::size_t t_choice = 0;     // index into cs.reflections()
  GElem t;                      // the chosen reflection t'
  std::vector<AElem> parts;     // s with t' s = other reflection, in S order
  std::vector<GElem> rotations; // unchanged
};

inline Normalization normalize(const ConnectionSet& cs, std::size_t t_choice) {
  const auto& a = cs.group().abelian();
  auto refl = cs.reflections();
  if (t_choice >= refl.size()) throw UsageError("t choice out of range");
  Normalization out;
  out.t_choice = t_choice;
  out.t = refl[t_choice];
  for (std::size_t i = 0; i < refl.size(); ++i)
    if (i != t_choice) out.parts.push_back(a.op(out.t.apart, a.inv(refl[i].apart)));
  out.rotations = cs.rotations();
  return out;
}

struct Case1Witness {
  std::size_t t_choice = 0;   // which reflection of S acts as t
  std::size_t s1_choice = 0;  // which rotation of S is s1
  GElem t;
  AElem s0, s1;  // S = {s1, s1^-1, t, t s0}
  std::uint64_t n = 0, m = 0, h = 0;  // n = o(s0), s1^m = s0^h
  std::uint64_t u = 0;
  int sign = +1;  // h = 5u/2 + sign * m (mod n)
};

struct Case2Witness {
  std::size_t t_choice = 0;
  std::array<std::size_t, 3> perm{0, 1, 2};  // parts[perm[i]] plays s_i
  Roles roles;
  std::uint64_t n = 0, m = 0, l = 0;
  int v = 0, a = 0, b = 0;
  std::uint64_t alpha1 = 0, alpha2 = 0, j = 0;
};

struct ClassificationResult {
  std::size_t reflections = 0;
  bool admits = false;
  CodeCase code_case = CodeCase::NoCode;
  NoCodeReason rejection = NoCodeReason::None;
  std::vector<Case1Witness> case1;
  std::vector<Case2Witness> case2;
};

// All (u, sign) with u even in [0, 2(n/5 - 1)] and h = 5u/2 + sign*m (mod n).
inline std::vector<std::pair<std::uint64_t, int>> case1_congruence(std::uint64_t h, std::uint64_t m, std::uint64_t n) {
  if (n == 0 || n % 5 != 0) throw UsageError("case1_congruence needs 5 | n, got n = " + std::to_string(n));
  std::vector<std::pair<std::uint64_t, int>> out;
  const auto N = static_cast<std::int64_t>(n);
  for (std::uint64_t u = 0; u <= 2 * (n / 5 - 1); u += 2) {
    for (int sign : {+1, -1}) {
      auto rhs = detail::mod(static_cast<std::int64_t>(5 * u / 2) + sign * static_cast<std::int64_t>(m), N);
      if (rhs == detail::mod(static_cast<std::int64_t>(h), N)) out.emplace_back(u, sign);
    }
  }
  return out;
}

namespace detail {

inline void classify_two_reflections(const ConnectionSet& cs, ClassificationResult& res) {
  const auto& a = cs.group().abelian();
  auto rots = cs.rotations();
  if (a.order_of(rots[0].apart) == 2 && a.order_of(rots[1].apart) == 2) {
    res.rejection = NoCodeReason::InvolutionPair;
    return;
  }
  for (std::size_t tc = 0; tc < 2; ++tc) {
    auto norm = normalize(cs, tc);
    const auto& s0 = norm.parts[0];
    const auto n = a.order_of(s0);
    if (n % 5 != 0) continue;
    SubgroupTable h0(a, {s0});
    for (std::size_t sc = 0; sc < 2; ++sc) {
      const auto& s1 = rots[sc].apart;
      auto [m, power] = min_power_in(a, s1, h0);
      auto h = discrete_log(a, power, s0).value();
      for (auto [u, sign] : case1_congruence(h, m, n))
        res.case1.push_back({tc, sc, norm.t, s0, s1, n, m, h, u, sign});
    }
  }
}

inline void classify_four_reflections(const ConnectionSet& cs, ClassificationResult& res) {
  const auto& g = cs.group();
  const auto& a = g.abelian();
  for (std::size_t tc = 0; tc < 4; ++tc) {
    auto norm = normalize(cs, tc);
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      const auto& s0 = norm.parts[perm[0]];
      const auto& s1 = norm.parts[perm[1]];
      const auto& s2 = norm.parts[perm[2]];
      const auto n = a.order_of(s0);
      if (n % 5 != 0) continue;
      const auto N = static_cast<std::int64_t>(n);
      SubgroupTable h0(a, {s0});
      SubgroupTable h01(a, {s0, s1});
      const auto [m, s1m] = min_power_in(a, s1, h0);
      const auto [l, s2l] = min_power_in(a, s2, h01);
      const auto reps = all_log_pairs(a, s2l, s0, s1, m);
      const auto M = static_cast<std::int64_t>(m), L = static_cast<std::int64_t>(l);
      for (int v = 2; v <= 4; ++v) {
        const int sig = parity_indicator(v);
        std::array<std::pair<int, int>, 2> ab{{{2 + sig, v - sig - 1}, {v - sig - 1, 2 + sig}}};
        std::sort(ab.begin(), ab.end());
        for (auto [ca, cb] : ab) {
          for (std::uint64_t alpha1 = 0; alpha1 < n / 5; ++alpha1) {
            if (a.pow(s0, 5 * static_cast<std::int64_t>(alpha1) - ca * M) != s1m) continue;
            for (std::uint64_t alpha2 = 0; alpha2 < n / 5; ++alpha2) {
              for (const auto& rep : reps) {
                auto rhs = mod(5 * static_cast<std::int64_t>(alpha2) - cb * L + ca * static_cast<std::int64_t>(rep.j), N);
                if (static_cast<std::int64_t>(rep.e) != rhs) continue;
                Case2Witness w;
                w.t_choice = tc;
                w.perm = perm;
                w.roles = Roles{norm.t, s0, s1, s2};
                w.n = n;
                w.m = m;
                w.l = l;
                w.v = v;
                w.a = ca;
                w.b = cb;
                w.alpha1 = alpha1;
                w.alpha2 = alpha2;
                w.j = rep.j;
                res.case2.push_back(std::move(w));
              }
            }
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::stable_sort(res.case2.begin(), res.case2.end(), [](const Case2Witness& x, const Case2Witness& y) {
    return std::tie(x.t_choice, x.perm, x.v, x.a, x.alpha1, x.alpha2, x.j) <
           std::tie(y.t_choice, y.perm, y.v, y.a, y.alpha1, y.alpha2, y.j);
  });
}

}  // namespace detail

inline ClassificationResult classify(const ConnectionSet& cs) {
  ClassificationResult res;
  res.reflections = cs.reflection_count();
  // |N[v]| = 5, so a perfect code partitions G into blocks of 5.
  if (cs.group().order() % 5 != 0) {
    res.rejection = NoCodeReason::NotDivisibleBy5;
    return res;
  }
  switch (res.reflections) {
    case 1: res.rejection = NoCodeReason::SingleReflection; return res;
    case 3: res.rejection = NoCodeReason::ThreeReflections; return res;
    case 2: detail::classify_two_reflections(cs, res); break;
    case 4: detail::classify_four_reflections(cs, res); break;
    default: throw UsageError("connection set has no reflection");
  }
  if (res.rejection != NoCodeReason::None) return res;
  res.admits = !res.case1.empty() || !res.case2.empty();
  if (res.admits) res.code_case = res.reflections == 2 ? CodeCase::Case1 : CodeCase::Case2;
  else res.rejection = NoCodeReason::CongruenceFail;
  return res;
}

// Image of S under the automorphism fixing A and sending t' to t, minimised
// over the reflections t' of S. Sets with equal forms differ by such an
// automorphism and so have isomorphic Cayley graphs.
inline std::vector<Vertex> canonical_form(const ConnectionSet& cs) {
  const auto& g = cs.group();
  const auto& a = g.abelian();
  std::vector<Vertex> best;
  for (const auto& tp : cs.reflections()) {
    std::vector<Vertex> img;
    for (const auto& x : cs.elements())
      img.push_back(g.index(x.flip ? g.reflection(a.op(x.apart, a.inv(tp.apart))) : x));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

inline ConnectionSet apply_reflection_automorphism(const ConnectionSet& cs, const GElem& tp) {
  const auto& g = cs.group();
  const auto& a = g.abelian();
  std::vector<GElem> img;
  for (const auto& x : cs.elements()) img.push_back(x.flip ? g.reflection(a.op(x.apart, a.inv(tp.apart))) : x);
  return validate_connection_set(g, std::move(img));
}

}  // namespace pcode
