#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "pcode/gendihedral.hpp"

namespace pcode {

// A vertex set, kept sorted; equality is set equality.
struct PerfectCode {
  std::vector<Vertex> members;

  PerfectCode() = default;
  explicit PerfectCode(std::vector<Vertex> vs) : members(std::move(vs)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::size_t size() const { return members.size(); }
  bool contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }

  friend bool operator==(const PerfectCode&, const PerfectCode&) = default;
  friend auto operator<=>(const PerfectCode&, const PerfectCode&) = default;
};

// Sort lexicographically and drop duplicates.
inline void canonicalize(std::vector<PerfectCode>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

inline std::vector<std::string> format_code(const DihedralGroup& g, const PerfectCode& code) {
  std::vector<std::string> out;
  for (auto v : code.members) out.push_back(g.format(g.element(v)));
  return out;
}

}  // namespace pcode
