#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "swapset/errors.hpp"
#include "swapset/graph.hpp"
#include "swapset/vertex_set.hpp"

namespace swapset {

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask all_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Closed neighbourhoods as 64-bit masks; exact searches run on graphs with
/// at most 64 vertices.
inline std::vector<Mask> closed_masks(const Graph& g) {
  if (g.order() > 64) throw BudgetError("exact search supports at most 64 vertices");
  std::vector<Mask> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    out[v] = bit(static_cast<Vertex>(v));
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) out[v] |= bit(u);
  }
  return out;
}

inline std::vector<Mask> open_masks(const Graph& g) {
  auto m = closed_masks(g);
  for (std::size_t v = 0; v < m.size(); ++v) m[v] &= ~bit(static_cast<Vertex>(v));
  return m;
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s.members()) m |= bit(v);
  return m;
}

inline VertexSet from_mask(std::size_t n, Mask m) {
  VertexSet s(n);
  while (m) {
    s.insert(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

inline Mask dominated_by(const std::vector<Mask>& closed, Mask s) {
  Mask d = 0;
  while (s) {
    d |= closed[static_cast<std::size_t>(std::countr_zero(s))];
    s &= s - 1;
  }
  return d;
}

// Maximum independent set size inside `cand` (branch and bound).
inline int mis_size(const std::vector<Mask>& open, Mask cand, int current, int best) {
  if (cand == 0) return std::max(best, current);
  if (current + std::popcount(cand) <= best) return best;
  // Vertices with no neighbour inside cand are always taken.
  Mask free = 0;
  for (Mask c = cand; c; c &= c - 1) {
    int v = std::countr_zero(c);
    if ((open[static_cast<std::size_t>(v)] & cand) == 0) free |= bit(v);
  }
  if (free) return mis_size(open, cand & ~free, current + std::popcount(free), best);
  int pick = -1, pick_deg = -1;
  for (Mask c = cand; c; c &= c - 1) {
    int v = std::countr_zero(c);
    int d = std::popcount(open[static_cast<std::size_t>(v)] & cand);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  best = mis_size(open, cand & ~(open[static_cast<std::size_t>(pick)] | bit(pick)), current + 1, best);
  best = mis_size(open, cand & ~bit(pick), current, best);
  return best;
}

// Is there a set of at most k vertices from `allowed` dominating `need`?
inline bool dominate_within(const std::vector<Mask>& closed, Mask need, Mask allowed, int k) {
  if (need == 0) return true;
  if (k == 0) return false;
  int u = std::countr_zero(need);
  Mask choices = closed[static_cast<std::size_t>(u)] & allowed;
  for (Mask c = choices; c; c &= c - 1) {
    int v = std::countr_zero(c);
    if (dominate_within(closed, need & ~closed[static_cast<std::size_t>(v)], allowed, k - 1)) return true;
    allowed &= ~bit(v);
  }
  return false;
}

} // namespace detail

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ContractError("vertex set does not belong to this graph");
  VertexSet covered = s;
  for (Vertex v : s.members())
    for (Vertex u : g.neighbors(v)) covered.insert(u);
  return covered.count() == g.order();
}

inline int independence_number(const Graph& g, std::size_t max_n = 40) {
  if (g.order() > max_n)
    throw BudgetError("independence_number: " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(max_n));
  auto open = detail::open_masks(g);
  return detail::mis_size(open, detail::all_mask(g.order()), 0, 0);
}

/// Lexicographically least maximum independent set.
inline VertexSet max_independent_set(const Graph& g, std::size_t max_n = 40) {
  int alpha = independence_number(g, max_n);
  auto open = detail::open_masks(g);
  detail::Mask cand = detail::all_mask(g.order());
  detail::Mask chosen = 0;
  int taken = 0;
  for (std::size_t v = 0; v < g.order() && taken < alpha; ++v) {
    detail::Mask b = detail::bit(static_cast<Vertex>(v));
    if (!(cand & b)) continue;
    detail::Mask rest = cand & ~(open[v] | b);
    if (taken + 1 + detail::mis_size(open, rest, 0, 0) == alpha) {
      chosen |= b;
      ++taken;
      cand = rest;
    } else {
      cand &= ~b;
    }
  }
  return detail::from_mask(g.order(), chosen);
}

inline int domination_number(const Graph& g, std::size_t max_n = 30) {
  if (g.order() > max_n)
    throw BudgetError("domination_number: " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(max_n));
  auto closed = detail::closed_masks(g);
  detail::Mask all = detail::all_mask(g.order());
  for (int k = 0;; ++k)
    if (detail::dominate_within(closed, all, all, k)) return k;
}

enum class StemKind { non_stem, weak_stem, strong_stem };

inline std::vector<StemKind> classify_stems(const Graph& g) {
  std::vector<StemKind> out(g.order(), StemKind::non_stem);
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::size_t leaves = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
      if (g.degree(u) == 1) ++leaves;
    if (leaves == 1) out[v] = StemKind::weak_stem;
    if (leaves >= 2) out[v] = StemKind::strong_stem;
  }
  return out;
}

inline bool is_strong_graph(const Graph& g) {
  for (auto k : classify_stems(g))
    if (k == StemKind::strong_stem) return true;
  return false;
}

/// Leaf neighbours of v, ascending.
inline std::vector<Vertex> leaf_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (g.degree(u) == 1) out.push_back(u);
  return out;
}

} // namespace swapset
