#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swapset/certificate.hpp"
#include "swapset/errors.hpp"
#include "swapset/graph.hpp"
#include "swapset/matching.hpp"
#include "swapset/parameters.hpp"
#include "swapset/star_partition.hpp"

namespace swapset {

enum class DdmStatus { finite, infinite, budget_exceeded };

inline std::string_view to_string(DdmStatus s) {
  switch (s) {
  case DdmStatus::finite: return "finite";
  case DdmStatus::infinite: return "infinite";
  case DdmStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

struct DdmResult {
  DdmStatus status = DdmStatus::infinite;
  std::optional<int> k;
  std::optional<SwapCertificate> certificate;
  std::uint64_t nodes = 0;

  bool finite() const { return status == DdmStatus::finite; }
};

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct SearchOptions {
  std::uint64_t node_budget = default_node_budget;
  // A strong graph has no swap set; skip the search when set.
  bool strong_shortcut = true;
  // Restrict D and D' to these vertices.
  std::optional<VertexSet> candidates;
  // Search only this cardinality instead of the increasing sweep.
  std::optional<int> only_k;
};

namespace detail {

class SwapSearch {
public:
  SwapSearch(const Graph& g, const SearchOptions& opt)
      : g_(g), closed_(closed_masks(g)), open_(open_masks(g)), all_(all_mask(g.order())), budget_(opt.node_budget) {
    cand_ = opt.candidates ? to_mask(*opt.candidates) : all_;
  }

  DdmResult run(int k_lo, int k_hi) {
    DdmResult r;
    for (int k = k_lo; k <= k_hi; ++k) {
      k_ = k;
      found_ = false;
      exhausted_ = false;
      enumerate_d();
      if (exhausted_) {
        r.status = DdmStatus::budget_exceeded;
        break;
      }
      if (found_) {
        r.status = DdmStatus::finite;
        r.k = k;
        VertexSet d = from_mask(g_.order(), best_d_);
        VertexSet dp = from_mask(g_.order(), best_dp_);
        r.certificate = SwapCertificate{d, dp, *lex_least_matching(g_, d, dp)};
        break;
      }
    }
    r.nodes = nodes_;
    return r;
  }

  Mask candidates() const { return cand_; }

private:
  static int highest(Mask m) { return 63 - std::countl_zero(m); }

  bool tick() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  // Lexicographic enumeration of k-subsets of `pool` (from index `start`)
  // that dominate the graph. Calls leaf(chosen) for each; stops when it
  // returns true or the budget runs out.
  template <class Leaf>
  bool enumerate_dominating(Mask pool, int start, Mask chosen, int count, Mask dom, int k, Leaf&& leaf) {
    if (exhausted_) return true;
    if (count == k) return dom == all_ ? leaf(chosen) : false;
    Mask avail = start >= 64 ? 0 : pool & ~((Mask{1} << start) - 1);
    int remaining = k - count;
    if (std::popcount(avail) < remaining) return false;
    Mask undominated = all_ & ~dom;
    int limit = 63;
    if (undominated) {
      for (Mask u = undominated; u; u &= u - 1)
        if ((closed_[static_cast<std::size_t>(std::countr_zero(u))] & avail) == 0) return false;
      // Some member of N[u] for the lowest undominated u must be chosen.
      limit = highest(closed_[static_cast<std::size_t>(std::countr_zero(undominated))] & avail);
    }
    for (Mask c = avail; c; c &= c - 1) {
      int v = std::countr_zero(c);
      if (v > limit) break;
      if (enumerate_dominating(pool, v + 1, chosen | bit(v), count + 1, dom | closed_[static_cast<std::size_t>(v)], k,
                               leaf))
        return true;
      if (exhausted_) return true;
    }
    return false;
  }

  bool perfect_match(Mask left, Mask right) const {
    std::vector<int> lv, rv;
    for (Mask m = left; m; m &= m - 1) lv.push_back(std::countr_zero(m));
    for (Mask m = right; m; m &= m - 1) rv.push_back(std::countr_zero(m));
    std::vector<std::vector<std::size_t>> adj(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i)
      for (std::size_t j = 0; j < rv.size(); ++j)
        if (open_[static_cast<std::size_t>(lv[i])] & bit(rv[j])) adj[i].push_back(j);
    std::vector<int> match_right;
    return max_bipartite_matching(adj, rv.size(), match_right) == lv.size();
  }

  void enumerate_d() {
    enumerate_dominating(cand_, 0, 0, 0, 0, k_, [&](Mask d) {
      if (!tick()) return true;
      // Every D' vertex is matched into D, so D' lies in N(D) \ D. The
      // lexicographically least pair always has min(D) < min(D').
      int lowest = std::countr_zero(d);
      Mask pool = 0;
      for (Mask m = d; m; m &= m - 1) pool |= open_[static_cast<std::size_t>(std::countr_zero(m))];
      pool &= cand_ & ~d & ~((Mask{1} << lowest) | ((Mask{1} << lowest) - 1));
      // every D-vertex needs a partner
      for (Mask m = d; m; m &= m - 1)
        if ((open_[static_cast<std::size_t>(std::countr_zero(m))] & pool) == 0) return false;
      if (dominated_by(closed_, pool) != all_) return false;
      return enumerate_dominating(pool, 0, 0, 0, 0, k_, [&](Mask dp) {
        if (!tick()) return true;
        if (!perfect_match(d, dp)) return false;
        best_d_ = d;
        best_dp_ = dp;
        found_ = true;
        return true;
      });
    });
  }

  const Graph& g_;
  std::vector<Mask> closed_;
  std::vector<Mask> open_;
  Mask all_;
  Mask cand_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int k_ = 0;
  bool found_ = false;
  bool exhausted_ = false;
  Mask best_d_ = 0;
  Mask best_dp_ = 0;
};

} // namespace detail

/// Exact swap-number search with explicit options. See dd_m_exact.
inline DdmResult dd_m_search(const Graph& g, const SearchOptions& opt) {
  if (g.order() == 0) throw ContractError("dd_m_exact: empty graph");
  if (g.order() > 64) throw BudgetError("dd_m_exact: more than 64 vertices");
  if (opt.candidates && opt.candidates->universe() != g.order())
    throw ContractError("dd_m_exact: candidate set does not belong to this graph");
  if (opt.strong_shortcut && is_strong_graph(g)) return DdmResult{DdmStatus::infinite, std::nullopt, std::nullopt, 0};

  detail::SwapSearch search(g, opt);
  const int half = static_cast<int>(g.order() / 2);
  int lo = 1, hi = half;
  if (opt.only_k) {
    lo = hi = *opt.only_k;
  } else {
    auto closed = detail::closed_masks(g);
    detail::Mask all = detail::all_mask(g.order());
    lo = 0;
    while (lo <= half && !detail::dominate_within(closed, all, search.candidates(), lo)) ++lo;
    lo = std::max(lo, 1);
  }
  if (lo > hi) return DdmResult{DdmStatus::infinite, std::nullopt, std::nullopt, 0};
  return search.run(lo, hi);
}

/// DD_m(g): the least k such that g has disjoint dominating sets D, D' of
/// size k with a perfect matching between them. Sweeps k from gamma(g) to
/// floor(n/2); the certificate is the lexicographically least (D, then D',
/// then matching). `node_budget` bounds the number of D and (D, D')
/// candidates examined.
inline DdmResult dd_m_exact(const Graph& g, std::uint64_t node_budget = default_node_budget) {
  SearchOptions opt;
  opt.node_budget = node_budget;
  return dd_m_search(g, opt);
}

enum class SwapAnswer { yes, no, budget_exceeded };

struct SwapQuery {
  SwapAnswer answer = SwapAnswer::no;
  std::optional<SwapCertificate> certificate;
};

inline SwapQuery has_swap_set(const Graph& g, std::uint64_t node_budget = default_node_budget) {
  auto r = dd_m_exact(g, node_budget);
  switch (r.status) {
  case DdmStatus::finite: return {SwapAnswer::yes, r.certificate};
  case DdmStatus::infinite: return {SwapAnswer::no, std::nullopt};
  case DdmStatus::budget_exceeded: break;
  }
  return {SwapAnswer::budget_exceeded, std::nullopt};
}

// --- brute-force simple star partitioning ----------------------------------

struct WeightedPartition {
  int weight = 0;
  StarPartition partition;
};

namespace detail {

// A part that already contains an edge can only grow into a star if it is a
// star on its current members (trees have no triangles).
inline bool extendable_star(const Graph& t, const std::vector<Vertex>& part) {
  std::size_t edges = 0;
  for (std::size_t a = 0; a < part.size(); ++a)
    for (std::size_t b = a + 1; b < part.size(); ++b)
      if (t.adjacent(part[a], part[b])) ++edges;
  if (edges == 0) return true;
  if (edges + 1 != part.size()) return false;
  for (Vertex c : part) {
    std::size_t deg = 0;
    for (Vertex u : part)
      if (u != c && t.adjacent(u, c)) ++deg;
    if (deg + 1 == part.size()) return true;
  }
  return false;
}

inline bool is_star(const Graph& t, const std::vector<Vertex>& part) {
  if (part.size() == 1) return true;
  return extendable_star(t, part) && [&] {
    std::size_t edges = 0;
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (t.adjacent(part[a], part[b])) ++edges;
    return edges + 1 == part.size();
  }();
}

} // namespace detail

/// Minimum weight over all simple star partitionings of t, by enumerating
/// every set partition of V(t). Exponential; meant as an oracle for n <= 10.
inline WeightedPartition star_partition_weight_oracle(const Graph& t) {
  if (!t.is_tree()) throw ContractError("star_partition_weight_oracle: not a tree");
  if (t.order() < 2) throw ContractError("star_partition_weight_oracle: trivial tree");
  const std::size_t n = t.order();
  std::vector<std::vector<Vertex>> parts;
  std::optional<WeightedPartition> best;

  auto evaluate = [&] {
    std::vector<StarPart> sp;
    for (const auto& p : parts) {
      if (!detail::is_star(t, p)) return;
      sp.push_back(make_part(t, p));
    }
    StarPartition cand = make_partition(std::move(sp));
    if (best && cand.weight >= best->weight) return;
    if (!check_simple_star_partition(t, cand).empty()) return;
    best = WeightedPartition{cand.weight, std::move(cand)};
  };

  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      evaluate();
      return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i].push_back(static_cast<Vertex>(v));
      if (detail::extendable_star(t, parts[i])) self(self, v + 1);
      parts[i].pop_back();
    }
    parts.push_back({static_cast<Vertex>(v)});
    self(self, v + 1);
    parts.pop_back();
  };
  rec(rec, 0);
  if (!best) throw ContractError("star_partition_weight_oracle: no simple star partitioning exists");
  return *best;
}

} // namespace swapset
