#pragma once

// Exhaustive arrowing decision for stars on K_{j x s}.
//
// The host fails to arrow (S_n, S_m) iff some spanning subgraph (the red
// part of a good colouring) keeps every degree inside the window
// [max(0, D-(m-2)), min(n-2, D)], where D = (j-1)s is the host degree;
// blue degrees are D minus red, so they stay in budget automatically.
// An empty window (D > n+m-4) settles the question by pigeonhole with no
// search.  Otherwise a depth-first search over the canonical edge order
// decides each edge blue-first with degree-capacity pruning, so the first
// subgraph it completes is the lexicographically least red edge set and
// doubles as the canonical certificate.  A plain bit-mask sweep over all
// 2^|E| subgraphs serves as an independent ground truth on small hosts.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace mjstar {

enum class OracleMethod { Pigeonhole, PrunedSearch, BruteForce };

inline const char* oracle_method_name(OracleMethod m) {
  switch (m) {
    case OracleMethod::Pigeonhole: return "pigeonhole";
    case OracleMethod::PrunedSearch: return "pruned-search";
    case OracleMethod::BruteForce: return "brute-force";
  }
  return "?";
}

struct OracleResult {
  bool arrows;
  std::optional<TwoColoring> certificate;  // a good colouring when arrows == false
  std::uint64_t nodes_explored = 0;
  OracleMethod method = OracleMethod::PrunedSearch;
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // search nodes before BudgetExhausted
  int jobs = 1;
};

namespace detail {

inline std::vector<std::pair<int, int>> canonical_edges(const Shape& sh) {
  std::vector<std::pair<int, int>> edges;
  const int n = sh.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (unflat(sh, a).part != unflat(sh, b).part) edges.emplace_back(a, b);
  return edges;
}

inline TwoColoring coloring_from_flags(const Shape& sh,
                                       const std::vector<std::pair<int, int>>& edges,
                                       const std::vector<std::uint8_t>& red) {
  TwoColoring col(sh);
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (red[k])
      col.set_color(unflat(sh, edges[k].first), unflat(sh, edges[k].second), Color::Red);
  return col;
}

// One depth-first pass over the edges, blue-first.  The invariant
// deg[x] + undecided[x] >= lo holds whenever the search descends, and
// deg[x] <= hi is enforced on every red step, so reaching the end of the
// edge list certifies a valid red subgraph.
struct ArrowSearch {
  const std::vector<std::pair<int, int>>& edges;
  int lo, hi;
  std::vector<int> deg, und;
  std::vector<std::uint8_t> red;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  // Polled every few thousand nodes by parallel workers; null when serial.
  const std::atomic<bool>* stop = nullptr;
  bool stopped = false;

  ArrowSearch(const Shape& sh, const std::vector<std::pair<int, int>>& edges_, int lo_, int hi_,
              std::uint64_t budget_)
      : edges(edges_), lo(lo_), hi(hi_), budget(budget_) {
    const int n = sh.vertex_count();
    deg.assign(n, 0);
    und.assign(n, 0);
    for (const auto& [a, b] : edges) {
      ++und[a];
      ++und[b];
    }
    red.assign(edges.size(), 0);
  }

  bool dfs(std::size_t idx) {
    if (++nodes > budget) throw BudgetExhausted("oracle search exceeded its node budget");
    if (stop && (nodes & 0xfff) == 0 && stop->load(std::memory_order_relaxed)) {
      stopped = true;
      return false;
    }
    if (idx == edges.size()) return true;
    const auto [a, b] = edges[idx];

    --und[a];
    --und[b];
    if (deg[a] + und[a] >= lo && deg[b] + und[b] >= lo && dfs(idx + 1)) return true;
    if (stopped) return false;

    if (deg[a] < hi && deg[b] < hi) {
      ++deg[a];
      ++deg[b];
      red[idx] = 1;
      if (dfs(idx + 1)) return true;
      --deg[a];
      --deg[b];
      red[idx] = 0;
    }
    ++und[a];
    ++und[b];
    return false;
  }
};

struct DegreeWindow {
  int lo, hi;
};

inline DegreeWindow red_degree_window(int j, int s, int n, int m) {
  const int host = (j - 1) * s;
  return {std::max(0, host - (m - 2)), std::min(n - 2, host)};
}

inline void check_oracle_args(int j, int s, int n, int m) {
  if (j < 3) throw PreconditionError("oracle needs at least 3 parts");
  if (s < 1) throw PreconditionError("oracle needs at least 1 slot");
  if (n < 2 || m < 2) throw PreconditionError("stars need order >= 2");
}

// Enumerate the feasible assignments of the first `depth` edges in the
// same blue-first order the serial search uses; each one seeds a worker.
inline std::vector<std::vector<std::uint8_t>> feasible_prefixes(ArrowSearch& search,
                                                                std::size_t depth) {
  std::vector<std::vector<std::uint8_t>> out;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (++search.nodes > search.budget)
      throw BudgetExhausted("oracle search exceeded its node budget");
    if (idx == depth) {
      out.emplace_back(search.red.begin(), search.red.begin() + static_cast<long>(depth));
      return;
    }
    const auto [a, b] = search.edges[idx];
    --search.und[a];
    --search.und[b];
    if (search.deg[a] + search.und[a] >= search.lo && search.deg[b] + search.und[b] >= search.lo)
      self(self, idx + 1);
    if (search.deg[a] < search.hi && search.deg[b] < search.hi) {
      ++search.deg[a];
      ++search.deg[b];
      search.red[idx] = 1;
      self(self, idx + 1);
      --search.deg[a];
      --search.deg[b];
      search.red[idx] = 0;
    }
    ++search.und[a];
    ++search.und[b];
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// Decide whether K_{j x s} arrows (S_n, S_m).  With jobs > 1 the search
// splits on the feasible assignments of a short edge prefix; the verdict
// and certificate are identical to the serial ones because the scan takes
// the earliest prefix (in blue-first order) that holds a solution.
inline OracleResult arrows_oracle(int j, int s, int n, int m, SearchOptions opts = {}) {
  detail::check_oracle_args(j, s, n, m);
  if (opts.budget < 1) throw PreconditionError("budget must be positive");
  if (opts.jobs < 1) throw PreconditionError("jobs must be positive");

  const auto [lo, hi] = detail::red_degree_window(j, s, n, m);
  if (lo > hi) return {true, std::nullopt, 0, OracleMethod::Pigeonhole};

  const Shape sh{j, s};
  const auto edges = detail::canonical_edges(sh);

  if (opts.jobs == 1 || edges.size() < 2) {
    detail::ArrowSearch search(sh, edges, lo, hi, opts.budget);
    if (search.dfs(0))
      return {false, detail::coloring_from_flags(sh, edges, search.red), search.nodes,
              OracleMethod::PrunedSearch};
    return {true, std::nullopt, search.nodes, OracleMethod::PrunedSearch};
  }

  // Split depth: enough prefixes to keep the workers busy.
  std::size_t depth = 1;
  while (depth < edges.size() && (std::size_t{1} << depth) < 8 * static_cast<std::size_t>(opts.jobs))
    ++depth;

  detail::ArrowSearch seed(sh, edges, lo, hi, opts.budget);
  const auto prefixes = detail::feasible_prefixes(seed, depth);
  std::atomic<std::uint64_t> total_nodes{seed.nodes};
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  std::atomic<bool> over_budget{false};
  std::vector<std::optional<std::vector<std::uint8_t>>> found(prefixes.size());
  std::mutex found_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t q = next.fetch_add(1);
      if (q >= prefixes.size()) return;
      if (over_budget.load() || best.load() < q) continue;

      detail::ArrowSearch search(sh, edges, lo, hi, opts.budget);
      for (std::size_t k = 0; k < prefixes[q].size(); ++k) {
        const auto [a, b] = edges[k];
        --search.und[a];
        --search.und[b];
        if (prefixes[q][k]) {
          ++search.deg[a];
          ++search.deg[b];
          search.red[k] = 1;
        }
      }
      search.stop = &over_budget;
      bool ok = false;
      try {
        // Local budget guards runaway workers; the shared total decides.
        ok = search.dfs(prefixes[q].size());
      } catch (const BudgetExhausted&) {
        over_budget.store(true);
        return;
      }
      if (total_nodes.fetch_add(search.nodes) + search.nodes > opts.budget) {
        over_budget.store(true);
        return;
      }
      if (ok) {
        std::scoped_lock lock(found_mutex);
        found[q] = search.red;
        std::size_t cur = best.load();
        while (q < cur && !best.compare_exchange_weak(cur, q)) {
        }
      }
    }
  };

  std::vector<std::thread> pool;
  const std::size_t nthreads = std::min<std::size_t>(opts.jobs, std::max<std::size_t>(1, prefixes.size()));
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (over_budget.load()) throw BudgetExhausted("oracle search exceeded its node budget");

  for (std::size_t q = 0; q < prefixes.size(); ++q) {
    if (found[q])
      return {false, detail::coloring_from_flags(sh, edges, *found[q]), total_nodes.load(),
              OracleMethod::PrunedSearch};
  }
  return {true, std::nullopt, total_nodes.load(), OracleMethod::PrunedSearch};
}

// Ground-truth sweep over every subgraph of the host; refuses edge counts
// above 25.  Certificates use the same canonical (lexicographically least)
// red edge set as the pruned search, so the two routes compare exactly.
inline OracleResult arrows_bruteforce(int j, int s, int n, int m) {
  detail::check_oracle_args(j, s, n, m);
  const Shape sh{j, s};
  const auto edges = detail::canonical_edges(sh);
  if (edges.size() > 25)
    throw InstanceTooLarge("brute force is capped at 25 edges, host has " +
                           std::to_string(edges.size()));

  const auto [lo, hi] = detail::red_degree_window(j, s, n, m);
  const int nverts = sh.vertex_count();
  std::vector<std::uint32_t> incident(nverts, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[edges[k].first] |= std::uint32_t{1} << k;
    incident[edges[k].second] |= std::uint32_t{1} << k;
  }

  // mask a precedes mask b when a is blue on the first edge they differ.
  const auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    const int t = std::countr_zero(a ^ b);
    return ((a >> t) & 1u) == 0;
  };

  const std::uint64_t count = std::uint64_t{1} << edges.size();
  std::optional<std::uint32_t> least;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto red = static_cast<std::uint32_t>(mask);
    bool good = true;
    for (int v = 0; v < nverts && good; ++v) {
      const int d = std::popcount(red & incident[v]);
      good = lo <= d && d <= hi;
    }
    if (good && (!least || lex_less(red, *least))) least = red;
  }

  if (!least) return {true, std::nullopt, count, OracleMethod::BruteForce};
  std::vector<std::uint8_t> flags(edges.size(), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) flags[k] = (*least >> k) & 1u;
  return {false, detail::coloring_from_flags(sh, edges, flags), count, OracleMethod::BruteForce};
}

// Least s <= s_max at which the host arrows; arrowing is monotone in s,
// so the first hit of the upward scan is the minimum.
inline std::optional<int> min_arrowing_s(int j, int n, int m, int s_max,
                                         SearchOptions opts = {}) {
  if (s_max < 1) throw PreconditionError("s_max must be positive");
  for (int s = 1; s <= s_max; ++s)
    if (arrows_oracle(j, s, n, m, opts).arrows) return s;
  return std::nullopt;
}

}  // namespace mjstar
