#pragma once

// Brute-force ground truth: perfect codes as exact covers of the vertex set
// by closed neighbourhoods. Knows nothing about groups.
//
// Search is plain bitset backtracking. At each node we take the uncovered
// vertex with the fewest rows still able to cover it and branch on those rows.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pcode/cayley.hpp"
#include "pcode/code.hpp"
#include "pcode/error.hpp"

namespace pcode {

using VertexMask = boost::dynamic_bitset<std::uint64_t>;

struct OracleOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;  // search nodes
  unsigned threads = 1;
};

// Row v covers N[v]. Rows conflict when their neighbourhoods meet.
class CoverInstance {
 public:
  explicit CoverInstance(const Graph& graph) : n_(graph.vertex_count()) {
    rows_.assign(n_, VertexMask(n_));
    regular_ = true;
    for (Vertex v = 0; v < n_; ++v) {
      rows_[v].set(v);
      for (auto u : graph.adjacency[v]) rows_[v].set(u);
      if (graph.adjacency[v].size() != graph.adjacency[0].size()) regular_ = false;
    }
    degree_ = n_ ? graph.adjacency[0].size() : 0;
    conflicts_.assign(n_, VertexMask(n_));
    for (Vertex v = 0; v < n_; ++v)
      for (auto u = rows_[v].find_first(); u != VertexMask::npos; u = rows_[v].find_next(u))
        conflicts_[v] |= rows_[u];
  }

  explicit CoverInstance(const CayleyGraph& graph) : CoverInstance(graph.to_graph()) {}

  std::size_t size() const { return n_; }
  const VertexMask& row(Vertex v) const { return rows_[v]; }
  const VertexMask& conflicts(Vertex v) const { return conflicts_[v]; }

  // A d-regular graph can only be covered if (d+1) divides |V|.
  bool trivially_infeasible() const { return n_ > 0 && regular_ && n_ % (degree_ + 1) != 0; }

 private:
  std::size_t n_;
  std::size_t degree_ = 0;
  bool regular_ = true;
  std::vector<VertexMask> rows_;
  std::vector<VertexMask> conflicts_;
};

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, std::uint64_t budget, bool first_only)
      : inst_(inst), budget_(budget), first_only_(first_only) {}

  // Explore the subtree below `chosen` with the given state.
  void run(VertexMask covered, VertexMask available, std::vector<Vertex> chosen) {
    chosen_ = std::move(chosen);
    search(covered, available);
  }

  // Pick the branching vertex: uncovered, fewest candidate rows.
  // Returns npos when everything is covered; sets `dead` when some vertex has no candidates.
  std::size_t pick(const VertexMask& covered, const VertexMask& available, bool& dead) const {
    dead = false;
    std::size_t best = VertexMask::npos, best_count = ~std::size_t{0};
    VertexMask uncovered = ~covered;
    for (auto u = uncovered.find_first(); u != VertexMask::npos; u = uncovered.find_next(u)) {
      auto c = (inst_.row(static_cast<Vertex>(u)) & available).count();
      if (c < best_count) {
        best_count = c;
        best = u;
        if (c <= 1) break;
      }
    }
    if (best != VertexMask::npos && best_count == 0) dead = true;
    return best;
  }

  std::vector<PerfectCode> solutions;
  std::atomic<std::uint64_t>* shared_nodes = nullptr;
  std::atomic<bool>* stop = nullptr;

 private:
  void tick() {
    auto used = shared_nodes ? shared_nodes->fetch_add(1) + 1 : ++local_nodes_;
    if (used > budget_)
      throw BudgetExceeded("exact-cover search exceeded budget of " + std::to_string(budget_) + " nodes");
  }

  void search(const VertexMask& covered, const VertexMask& available) {
    if (stop && stop->load()) return;
    tick();
    bool dead = false;
    auto u = pick(covered, available, dead);
    if (u == VertexMask::npos) {
      solutions.emplace_back(chosen_);
      if (first_only_ && stop) stop->store(true);
      return;
    }
    if (dead) return;
    VertexMask cands = inst_.row(static_cast<Vertex>(u)) & available;
    for (auto r = cands.find_first(); r != VertexMask::npos; r = cands.find_next(r)) {
      const auto row = static_cast<Vertex>(r);
      chosen_.push_back(row);
      search(covered | inst_.row(row), available - inst_.conflicts(row));
      chosen_.pop_back();
      if (first_only_ && !solutions.empty()) return;
      if (stop && stop->load()) return;
    }
  }

  const CoverInstance& inst_;
  std::uint64_t budget_;
  bool first_only_;
  std::uint64_t local_nodes_ = 0;
  std::vector<Vertex> chosen_;
};

inline std::vector<PerfectCode> solve_cover(const CoverInstance& inst, const OracleOptions& opts, bool first_only) {
  if (inst.trivially_infeasible()) return {};
  const auto n = inst.size();
  VertexMask covered(n), available(n);
  available.set();

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  // Split on the root branching vertex; each worker takes whole branches.
  CoverSearch root(inst, opts.budget, first_only);
  bool dead = false;
  auto u = root.pick(covered, available, dead);
  if (u == VertexMask::npos) return {PerfectCode{}};
  if (dead) return {};
  ++nodes;
  std::vector<Vertex> branches;
  VertexMask cands = inst.row(static_cast<Vertex>(u)) & available;
  for (auto r = cands.find_first(); r != VertexMask::npos; r = cands.find_next(r))
    branches.push_back(static_cast<Vertex>(r));

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(branches.size())));
  std::vector<std::vector<PerfectCode>> found(branches.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    try {
      for (std::size_t b; (b = next.fetch_add(1)) < branches.size();) {
        if (stop.load()) break;
        CoverSearch s(inst, opts.budget, first_only);
        s.shared_nodes = &nodes;
        s.stop = &stop;
        const auto row = branches[b];
        s.run(covered | inst.row(row), available - inst.conflicts(row), {row});
        found[b] = std::move(s.solutions);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      stop.store(true);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PerfectCode> out;
  for (auto& f : found)
    for (auto& c : f) out.push_back(std::move(c));
  canonicalize(out);
  if (first_only && out.size() > 1) out.resize(1);
  return out;
}

}  // namespace detail

// Every perfect code of the graph, sorted lexicographically.
inline std::vector<PerfectCode> find_all_codes(const CoverInstance& inst, const OracleOptions& opts = {}) {
  return detail::solve_cover(inst, opts, false);
}

inline std::vector<PerfectCode> find_all_codes(const Graph& graph, const OracleOptions& opts = {}) {
  return find_all_codes(CoverInstance(graph), opts);
}

inline std::vector<PerfectCode> find_all_codes(const CayleyGraph& graph, const OracleOptions& opts = {}) {
  return find_all_codes(CoverInstance(graph), opts);
}

inline bool exists_code(const CoverInstance& inst, const OracleOptions& opts = {}) {
  return !detail::solve_cover(inst, opts, true).empty();
}

inline bool exists_code(const Graph& graph, const OracleOptions& opts = {}) {
  return exists_code(CoverInstance(graph), opts);
}

inline bool exists_code(const CayleyGraph& graph, const OracleOptions& opts = {}) {
  return exists_code(CoverInstance(graph), opts);
}

}  // namespace pcode
