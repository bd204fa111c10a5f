#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swapset/errors.hpp"
#include "swapset/graph.hpp"

namespace swapset {

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;

/// Colour refinement of an ordered partition. Vertices are regrouped by
/// (current cell, neighbour count in every cell) until the partition is
/// stable; the new cells keep the order of their signatures, so the result
/// does not depend on vertex names.
inline Cells refine(const Graph& g, Cells cells) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cell_of(n);
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = c;
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig;
    sig.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> s(cells.size() + 1, 0);
      s[0] = cell_of[v];
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) ++s[1 + cell_of[static_cast<std::size_t>(u)]];
      sig.emplace_back(std::move(s), static_cast<Vertex>(v));
    }
    std::sort(sig.begin(), sig.end());
    Cells next;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
      next.back().push_back(sig[i].second);
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

/// Upper-triangle adjacency bits in graph6 order, first pair most significant.
inline std::uint64_t edge_code(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return code;
}

inline void canonical_search(const Graph& g, Cells cells, std::uint64_t& best, std::vector<Vertex>& best_order, bool& found) {
  cells = refine(g, std::move(cells));
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::vector<Vertex> order;
    for (const auto& c : cells) order.push_back(c[0]);
    std::uint64_t code = edge_code(g, order);
    if (!found || code > best) {
      best = code;
      best_order = std::move(order);
      found = true;
    }
    return;
  }
  const std::size_t at = static_cast<std::size_t>(target - cells.begin());
  for (Vertex v : cells[at]) {
    Cells next;
    next.reserve(cells.size() + 1);
    next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
    next.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex u : cells[at])
      if (u != v) rest.push_back(u);
    next.push_back(std::move(rest));
    next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
    canonical_search(g, std::move(next), best, best_order, found);
  }
}

} // namespace detail

/// Relabels g so that isomorphic graphs become identical. Limited to 11
/// vertices so the adjacency code fits in 64 bits.
inline Graph canonical_graph(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw BudgetError("canonical_graph: at most 11 vertices");
  if (n == 0) return g;
  detail::Cells all(1);
  for (std::size_t v = 0; v < n; ++v) all[0].push_back(static_cast<Vertex>(v));
  std::uint64_t best = 0;
  std::vector<Vertex> order;
  bool found = false;
  detail::canonical_search(g, std::move(all), best, order, found);
  std::vector<Vertex> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (auto [a, b] : g.edges()) es.emplace_back(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
  return Graph(n, std::move(es));
}

/// graph6 encoding (n < 63).
inline std::string graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= 63) throw ContractError("graph6: at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = bits = 0;
      }
    }
  if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

inline std::string canonical_id(const Graph& g) { return graph6(canonical_graph(g)); }

/// Connected graphs on n vertices, one per isomorphism class, in canonical
/// form and sorted by graph6 id. Each class on n vertices arises from a
/// class on n-1 vertices by adding a vertex, since every connected graph
/// has a vertex whose removal keeps it connected.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) throw ContractError("enumerate_connected_graphs: n must be positive");
  if (n > 8) throw BudgetError("enumerate_connected_graphs: n must be at most 8");
  std::vector<Graph> level{Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> seen;
    const Vertex fresh = size - 1;
    for (const Graph& g : level)
      for (std::uint32_t mask = 1; mask < (1u << fresh); ++mask) {
        std::vector<Edge> es = g.edges();
        for (Vertex v = 0; v < fresh; ++v)
          if (mask >> v & 1u) es.emplace_back(v, fresh);
        Graph c = canonical_graph(Graph(static_cast<std::size_t>(size), std::move(es)));
        std::string id = graph6(c);
        seen.emplace(std::move(id), std::move(c));
      }
    level.clear();
    for (auto& [id, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

// --- trees -------------------------------------------------------------------

namespace detail {

inline std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex u : t.neighbors(v))
    if (u != parent) kids.push_back(rooted_code(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.degree(static_cast<Vertex>(v));
    if (deg[v] <= 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex u : t.neighbors(v))
        if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

} // namespace detail

/// Isomorphism invariant of a tree: the nested-parenthesis code rooted at
/// its centre, or the ordered pair of halves for a bicentral tree.
inline std::string tree_code(const Graph& t) {
  if (!t.is_tree()) throw ContractError("tree_code: not a tree");
  auto c = detail::tree_centers(t);
  if (c.size() == 1) return detail::rooted_code(t, c[0], -1);
  std::string a = detail::rooted_code(t, c[0], c[1]), b = detail::rooted_code(t, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return a + b;
}

/// Trees on n vertices, one per isomorphism class, sorted by tree_code.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw ContractError("enumerate_trees: n must be positive");
  if (n > 14) throw BudgetError("enumerate_trees: n must be at most 14");
  std::vector<Graph> level{Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> seen;
    for (const Graph& t : level)
      for (Vertex v = 0; v < size - 1; ++v) {
        std::vector<Edge> es = t.edges();
        es.emplace_back(v, size - 1);
        Graph g(static_cast<std::size_t>(size), std::move(es));
        seen.emplace(tree_code(g), std::move(g));
      }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

/// All trees with 2..max_n vertices, ordered by size.
inline std::vector<Graph> nontrivial_trees_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    auto level = enumerate_trees(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

} // namespace swapset
