#pragma once

// Finite abelian groups given as direct products of cyclic groups
// Z_{n_1} x ... x Z_{n_k}. Elements are exponent vectors; every quantity
// here is computed by enumeration, which is all we need at desk scale.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcode/error.hpp"

namespace pcode {

inline constexpr std::uint64_t kDefaultMaxOrder = 1'000'000;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return value;
}

// Split on `sep` outside parentheses.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
  parts.push_back(s.substr(start));
  return parts;
}

inline std::int64_t mod(std::int64_t x, std::int64_t n) {
  auto r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

// Element of an abelian group: one reduced residue per cyclic factor.
struct AElem {
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const AElem&, const AElem&) = default;
  friend auto operator<=>(const AElem&, const AElem&) = default;
};

class SubgroupTable;

class AbelianSpec {
 public:
  AbelianSpec() = default;

  explicit AbelianSpec(std::vector<std::uint32_t> moduli, std::uint64_t max_order = kDefaultMaxOrder)
      : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw ParseError("abelian group needs at least one cyclic factor");
    order_ = 1;
    for (auto n : moduli_) {
      if (n < 2) throw ParseError("cyclic factor Z" + std::to_string(n) + " must have order >= 2");
      order_ *= n;
      if (order_ > max_order)
        throw UsageError("group order exceeds configured maximum " + std::to_string(max_order));
    }
  }

  // "Z5", "Z10xZ2", "z5 x z2 x z2".
  static AbelianSpec parse(std::string_view text, std::uint64_t max_order = kDefaultMaxOrder) {
    std::string lowered;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lowered.empty()) throw ParseError("empty group literal");
    std::vector<std::uint32_t> moduli;
    std::string_view rest = lowered;
    while (true) {
      auto cut = rest.find('x');
      auto factor = rest.substr(0, cut);
      if (factor.size() < 2 || factor.front() != 'z')
        throw ParseError("bad cyclic factor '" + std::string(factor) + "' in '" + std::string(text) + "'");
      auto n = detail::parse_int(factor.substr(1));
      if (n < 2 || n > static_cast<std::int64_t>(max_order))
        throw ParseError("bad cyclic order in '" + std::string(text) + "'");
      moduli.push_back(static_cast<std::uint32_t>(n));
      if (cut == std::string_view::npos) break;
      rest.remove_prefix(cut + 1);
    }
    return AbelianSpec(std::move(moduli), max_order);
  }

  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::uint64_t order() const { return order_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i) out += 'x';
      out += 'Z' + std::to_string(moduli_[i]);
    }
    return out;
  }

  friend bool operator==(const AbelianSpec& a, const AbelianSpec& b) { return a.moduli_ == b.moduli_; }

  AElem identity() const { return AElem{std::vector<std::uint32_t>(moduli_.size(), 0)}; }

  // Reduces arbitrary integers into an element.
  AElem element(const std::vector<std::int64_t>& exps) const {
    if (exps.size() != moduli_.size())
      throw StructuralError("element has " + std::to_string(exps.size()) + " components, group " +
                            to_string() + " has " + std::to_string(moduli_.size()));
    AElem x;
    x.exponents.resize(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
      x.exponents[i] = static_cast<std::uint32_t>(detail::mod(exps[i], moduli_[i]));
    return x;
  }

  // Mixed-radix encoding, first factor most significant.
  std::uint64_t index(const AElem& x) const {
    check(x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + x.exponents[i];
    return idx;
  }

  AElem from_index(std::uint64_t idx) const {
    AElem x;
    x.exponents.resize(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      x.exponents[i] = static_cast<std::uint32_t>(idx % moduli_[i]);
      idx /= moduli_[i];
    }
    return x;
  }

  AElem op(const AElem& x, const AElem& y) const {
    check(x);
    check(y);
    AElem z;
    z.exponents.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      z.exponents[i] = static_cast<std::uint32_t>((std::uint64_t{x.exponents[i]} + y.exponents[i]) % moduli_[i]);
    return z;
  }

  AElem inv(const AElem& x) const {
    check(x);
    AElem z;
    z.exponents.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      z.exponents[i] = x.exponents[i] == 0 ? 0 : moduli_[i] - x.exponents[i];
    return z;
  }

  // x^k for any integer k, negative allowed.
  AElem pow(const AElem& x, std::int64_t k) const {
    check(x);
    AElem z;
    z.exponents.resize(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const std::int64_t n = moduli_[i];
      z.exponents[i] = static_cast<std::uint32_t>(detail::mod(detail::mod(k, n) * x.exponents[i], n));
    }
    return z;
  }

  std::uint64_t order_of(const AElem& x) const {
    check(x);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const std::uint64_t n = moduli_[i];
      o = std::lcm(o, n / std::gcd(n, std::uint64_t{x.exponents[i]}));
    }
    return o;
  }

  bool is_identity(const AElem& x) const {
    check(x);
    return std::all_of(x.exponents.begin(), x.exponents.end(), [](auto e) { return e == 0; });
  }

  // "(3,1)", "(3)" or "3" (single factor only).
  AElem parse_element(std::string_view text) const {
    auto s = detail::trim(text);
    std::vector<std::int64_t> exps;
    if (!s.empty() && s.front() == '(') {
      if (s.back() != ')') throw ParseError("unterminated tuple '" + std::string(text) + "'");
      for (auto part : detail::split_top_level(s.substr(1, s.size() - 2), ','))
        exps.push_back(detail::parse_int(part));
    } else {
      exps.push_back(detail::parse_int(s));
    }
    if (exps.size() != moduli_.size())
      throw ParseError("element '" + std::string(text) + "' does not match group " + to_string());
    return element(exps);
  }

  std::string format(const AElem& x) const {
    check(x);
    std::string out = "(";
    for (std::size_t i = 0; i < x.exponents.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(x.exponents[i]);
    }
    return out + ")";
  }

  void check(const AElem& x) const {
    if (x.exponents.size() != moduli_.size())
      throw StructuralError("element of rank " + std::to_string(x.exponents.size()) +
                            " used in group " + to_string());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      if (x.exponents[i] >= moduli_[i]) throw StructuralError("unreduced element component");
  }

 private:
  std::vector<std::uint32_t> moduli_;
  std::uint64_t order_ = 0;
};

// Subgroup generated by a list of elements, stored as a dense membership map.
class SubgroupTable {
 public:
  SubgroupTable(const AbelianSpec& spec, std::vector<AElem> generators)
      : generators_(std::move(generators)), member_(spec.order(), false) {
    const auto id = spec.identity();
    member_[spec.index(id)] = true;
    members_.push_back(spec.index(id));
    std::deque<AElem> frontier{id};
    while (!frontier.empty()) {
      auto x = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& g : generators_) {
        auto y = spec.op(x, g);
        auto idx = spec.index(y);
        if (!member_[idx]) {
          member_[idx] = true;
          members_.push_back(idx);
          frontier.push_back(std::move(y));
        }
      }
    }
    std::sort(members_.begin(), members_.end());
  }

  const std::vector<AElem>& generators() const { return generators_; }
  const std::vector<std::uint64_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains_index(std::uint64_t idx) const { return idx < member_.size() && member_[idx]; }
  bool contains(const AbelianSpec& spec, const AElem& x) const { return contains_index(spec.index(x)); }

 private:
  std::vector<AElem> generators_;
  std::vector<bool> member_;
  std::vector<std::uint64_t> members_;  // sorted encodings
};

inline SubgroupTable subgroup_closure(const AbelianSpec& spec, std::vector<AElem> generators) {
  return SubgroupTable(spec, std::move(generators));
}

struct MinPower {
  std::uint64_t m;
  AElem witness;  // x^m
};

// Smallest m >= 1 with x^m in H.
inline MinPower min_power_in(const AbelianSpec& spec, const AElem& x, const SubgroupTable& h) {
  auto power = x;
  for (std::uint64_t m = 1;; ++m) {
    if (h.contains(spec, power)) return {m, power};
    power = spec.op(power, x);
  }
}

struct LogPair {
  std::uint64_t e;
  std::uint64_t j;
  friend bool operator==(const LogPair&, const LogPair&) = default;
  friend auto operator<=>(const LogPair&, const LogPair&) = default;
};

// Every (e, j) with y = s0^e s1^j, 0 <= e < o(s0), 0 <= j < jmax, sorted by (e, j).
inline std::vector<LogPair> all_log_pairs(const AbelianSpec& spec, const AElem& y, const AElem& s0,
                                          const AElem& s1, std::uint64_t jmax) {
  std::vector<LogPair> out;
  const auto n = spec.order_of(s0);
  const auto inv_s1 = spec.inv(s1);
  auto target = y;  // y * s1^{-j}
  for (std::uint64_t j = 0; j < jmax; ++j) {
    auto power = spec.identity();
    for (std::uint64_t e = 0; e < n; ++e) {
      if (power == target) out.push_back({e, j});
      power = spec.op(power, s0);
    }
    target = spec.op(target, inv_s1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exponent e in [0, o(s0)) with s0^e = y, if y lies in <s0>.
inline std::optional<std::uint64_t> discrete_log(const AbelianSpec& spec, const AElem& y, const AElem& s0) {
  auto pairs = all_log_pairs(spec, y, s0, spec.identity(), 1);
  if (pairs.empty()) return std::nullopt;
  return pairs.front().e;
}

}  // namespace pcode
