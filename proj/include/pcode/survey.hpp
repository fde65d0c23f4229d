#pragma once

// Sweeps over every valid quartic connection set of Dih(A), one CSV row per
// instance, optionally cross-checked against the exact-cover oracle.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pcode/classifier.hpp"
#include "pcode/enumerator.hpp"
#include "pcode/oracle.hpp"

namespace pcode {

// Inverse-closed blocks of G \ {e}: reflections and involutions alone, other rotations paired with their inverse.
inline std::vector<std::vector<GElem>> inverse_closed_blocks(const DihedralGroup& g) {
  std::vector<std::vector<GElem>> blocks;
  for (Vertex v = 1; v < g.order(); ++v) {
    auto x = g.element(v);
    auto xi = g.inv(x);
    auto vi = g.index(xi);
    if (vi == v) blocks.push_back({x});
    else if (v < vi) blocks.push_back({x, xi});
  }
  return blocks;
}

// Calls fn on every inverse-closed 4-subset of G \ {e} with at least one
// reflection (not yet checked for generation). Stops early when fn returns false.
inline void for_each_quartic_candidate(const DihedralGroup& g, const std::function<bool(const std::vector<GElem>&)>& fn) {
  const auto blocks = inverse_closed_blocks(g);
  std::vector<GElem> current;
  bool keep_going = true;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!keep_going) return;
    if (current.size() == 4) {
      if (std::any_of(current.begin(), current.end(), [](const GElem& x) { return x.flip; })) keep_going = fn(current);
      return;
    }
    for (std::size_t b = start; b < blocks.size() && keep_going; ++b) {
      if (current.size() + blocks[b].size() > 4) continue;
      current.insert(current.end(), blocks[b].begin(), blocks[b].end());
      rec(b + 1);
      current.resize(current.size() - blocks[b].size());
    }
  };
  rec(0);
}

// Every valid connection set, ordered by sorted vertex indices.
inline std::vector<ConnectionSet> all_connection_sets(const DihedralGroup& g) {
  std::vector<std::pair<std::vector<Vertex>, ConnectionSet>> found;
  for_each_quartic_candidate(g, [&](const std::vector<GElem>& raw) {
    if (!check_connection_set(g, raw)) {
      auto cs = validate_connection_set(g, raw);
      std::vector<Vertex> key;
      for (const auto& x : cs.elements()) key.push_back(g.index(x));
      found.emplace_back(std::move(key), std::move(cs));
    }
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ConnectionSet> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

// One representative per canonical form, keeping the first in index order.
inline std::vector<ConnectionSet> dedup_by_normalization(const std::vector<ConnectionSet>& sets) {
  std::set<std::vector<Vertex>> seen;
  std::vector<ConnectionSet> out;
  for (const auto& cs : sets)
    if (seen.insert(canonical_form(cs)).second) out.push_back(cs);
  return out;
}

// One abelian group per isomorphism class with order in [2, max_order],
// written by invariant factors d1 | d2 | ... .
inline std::vector<AbelianSpec> abelian_groups_up_to(std::uint64_t max_order) {
  std::vector<AbelianSpec> out;
  std::function<void(std::uint64_t, std::uint64_t, std::vector<std::uint32_t>&)> rec =
      [&](std::uint64_t remaining, std::uint64_t last, std::vector<std::uint32_t>& factors) {
        if (remaining == 1) {
          if (!factors.empty()) out.emplace_back(factors);
          return;
        }
        // Next factor is a multiple of the previous one and divides what is left;
        // the remainder must itself be a product of multiples of this factor.
        for (std::uint64_t d = last; d <= remaining; d += last) {
          if (remaining % d != 0) continue;
          auto rest = remaining / d;
          if (rest != 1 && rest % d != 0) continue;
          factors.push_back(static_cast<std::uint32_t>(d));
          rec(rest, d, factors);
          factors.pop_back();
        }
      };
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    std::vector<std::uint32_t> factors;
    for (std::uint64_t d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      auto rest = n / d;
      if (rest != 1 && rest % d != 0) continue;
      factors.push_back(static_cast<std::uint32_t>(d));
      rec(rest, d, factors);
      factors.pop_back();
    }
  }
  return out;
}

struct SurveyOptions {
  bool oracle_check = false;
  bool raw = false;  // keep sets that only differ by the choice of t
  unsigned threads = 1;
  OracleOptions oracle;
};

struct SurveyRow {
  std::string group;
  std::string set;
  std::vector<Vertex> key;
  std::size_t reflections = 0;
  bool admits = false;
  std::string code_case;
  std::string n, m, l, v, a, b;  // from the first witness, empty when absent
  std::string codes_containing_t;
  std::string codes_total;
  std::string oracle_agree = "-";
};

inline const char* kSurveyHeader =
    "group,set,reflections,admits,case,n,m,l,v,a,b,num_codes_containing_t,num_codes_total,oracle_agree";

// Closed-form answer versus the oracle on one instance: "ok" or a description of the disagreement.
inline std::string compare_with_oracle(const CayleyGraph& graph, const ClassificationResult& res,
                                       const std::vector<PerfectCode>& with_t, const std::vector<PerfectCode>& total,
                                       const OracleOptions& opts) {
  auto oracle = find_all_codes(graph, opts);
  const auto t = graph.vertex(graph.group().t());
  if (res.admits != !oracle.empty()) return res.admits ? "mismatch:oracle-none" : "mismatch:oracle-found";
  if (codes_containing(oracle, t) != with_t) return "mismatch:codes-with-t";
  if (oracle != total) return "mismatch:translates";
  return "ok";
}

inline SurveyRow survey_instance(const ConnectionSet& cs, const SurveyOptions& opts) {
  SurveyRow row;
  const auto& g = cs.group();
  row.group = g.abelian().to_string();
  row.set = cs.to_string();
  for (const auto& x : cs.elements()) row.key.push_back(g.index(x));
  row.reflections = cs.reflection_count();
  try {
    auto graph = build_graph(cs);
    auto res = classify(cs);
    row.admits = res.admits;
    row.code_case = to_string(res.code_case);
    if (!res.case1.empty()) {
      const auto& w = res.case1.front();
      row.n = std::to_string(w.n);
      row.m = std::to_string(w.m);
    } else if (!res.case2.empty()) {
      const auto& w = res.case2.front();
      row.n = std::to_string(w.n);
      row.m = std::to_string(w.m);
      row.l = std::to_string(w.l);
      row.v = std::to_string(w.v);
      row.a = std::to_string(w.a);
      row.b = std::to_string(w.b);
    }
    std::vector<PerfectCode> with_t, total;
    if (res.admits) {
      with_t = codes_containing_t(graph, res);
      total = all_perfect_codes(graph, with_t);
    }
    row.codes_containing_t = std::to_string(with_t.size());
    row.codes_total = std::to_string(total.size());
    if (opts.oracle_check) row.oracle_agree = compare_with_oracle(graph, res, with_t, total, opts.oracle);
  } catch (const BudgetExceeded&) {
    row.oracle_agree = "budget";
  } catch (const std::exception& e) {
    row.oracle_agree = std::string("error:") + e.what();
  }
  return row;
}

// Rows for every group, groups in the given order and sets in index order.
inline std::vector<SurveyRow> run_survey(const std::vector<AbelianSpec>& groups, const SurveyOptions& opts) {
  std::vector<ConnectionSet> jobs;
  for (const auto& a : groups) {
    auto sets = all_connection_sets(DihedralGroup(a));
    if (!opts.raw) sets = dedup_by_normalization(sets);
    jobs.insert(jobs.end(), sets.begin(), sets.end());
  }
  std::vector<SurveyRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) rows[i] = survey_instance(jobs[i], opts);
  };
  const unsigned workers = std::max(1u, opts.threads);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return rows;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string format_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << kSurveyHeader << "\n";
  for (const auto& r : rows) {
    out << csv_field(r.group) << ',' << csv_field(r.set) << ',' << r.reflections << ','
        << (r.admits ? "true" : "false") << ',' << r.code_case << ',' << r.n << ',' << r.m << ',' << r.l << ','
        << r.v << ',' << r.a << ',' << r.b << ',' << r.codes_containing_t << ',' << r.codes_total << ','
        << csv_field(r.oracle_agree) << "\n";
  }
  return out.str();
}

}  // namespace pcode
