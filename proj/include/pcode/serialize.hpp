#pragma once

// JSON views of classification results and codes.

#include <string>
#include <vector>

#include "json.hpp"
#include "pcode/classifier.hpp"
#include "pcode/code.hpp"

namespace pcode {

inline nlohmann::json witness_json(const DihedralGroup& g, const Case1Witness& w) {
  const auto& a = g.abelian();
  return {{"t", g.format(w.t)},
          {"s0", a.format(w.s0)},
          {"s1", a.format(w.s1)},
          {"t_choice", w.t_choice},
          {"s1_choice", w.s1_choice},
          {"n", w.n},
          {"m", w.m},
          {"h", w.h},
          {"u", w.u},
          {"sign", w.sign > 0 ? "+" : "-"}};
}

inline nlohmann::json witness_json(const DihedralGroup& g, const Case2Witness& w) {
  const auto& a = g.abelian();
  return {{"t", g.format(w.roles.t)},
          {"s0", a.format(w.roles.s0)},
          {"s1", a.format(w.roles.s1)},
          {"s2", a.format(w.roles.s2)},
          {"t_choice", w.t_choice},
          {"perm", w.perm},
          {"n", w.n},
          {"m", w.m},
          {"l", w.l},
          {"v", w.v},
          {"a", w.a},
          {"b", w.b},
          {"alpha1", w.alpha1},
          {"alpha2", w.alpha2},
          {"j", w.j}};
}

// {admits, case, reflections, witnesses[], rejection}
inline nlohmann::json to_json(const DihedralGroup& g, const ClassificationResult& res) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : res.case1) witnesses.push_back(witness_json(g, w));
  for (const auto& w : res.case2) witnesses.push_back(witness_json(g, w));
  return {{"admits", res.admits},
          {"case", to_string(res.code_case)},
          {"reflections", res.reflections},
          {"witnesses", std::move(witnesses)},
          {"rejection", res.admits ? nlohmann::json(nullptr) : nlohmann::json(to_string(res.rejection))}};
}

// Array of arrays of element literals.
inline nlohmann::json codes_json(const DihedralGroup& g, const std::vector<PerfectCode>& codes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : codes) out.push_back(format_code(g, c));
  return out;
}

}  // namespace pcode
