#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "swapset/errors.hpp"
#include "swapset/graph.hpp"
#include "swapset/vertex_set.hpp"

namespace swapset {

/// Vertex pairs (u, v); in a certificate u is the D-side endpoint.
struct Matching {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend bool operator<(const Matching& a, const Matching& b) { return a.pairs < b.pairs; }
};

namespace detail {

// Kuhn augmenting path from left index `i` over the bipartite edge lists.
inline bool augment(std::size_t i, const std::vector<std::vector<std::size_t>>& adj,
                    std::vector<int>& match_right, std::vector<char>& visited) {
  for (std::size_t j : adj[i]) {
    if (visited[j]) continue;
    visited[j] = 1;
    if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]), adj, match_right, visited)) {
      match_right[j] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

inline std::vector<std::vector<std::size_t>> bipartite_adjacency(const Graph& g, const std::vector<Vertex>& left,
                                                                 const std::vector<Vertex>& right) {
  std::vector<std::vector<std::size_t>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (g.adjacent(left[i], right[j])) adj[i].push_back(j);
  return adj;
}

// Size of a maximum matching between the two lists; match_right receives the assignment.
inline std::size_t max_bipartite_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_size,
                                          std::vector<int>& match_right) {
  match_right.assign(right_size, -1);
  std::vector<char> left_done(adj.size(), 0);
  std::size_t size = 0;
  // greedy seed
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j : adj[i])
      if (match_right[j] < 0) {
        match_right[j] = static_cast<int>(i);
        left_done[i] = 1;
        ++size;
        break;
      }
  std::vector<char> visited(right_size);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (left_done[i]) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(i, adj, match_right, visited)) ++size;
  }
  return size;
}

inline void check_matching_contract(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw ContractError("matching_between: sets from different graphs");
  if (a.intersects(b)) throw ContractError("matching_between: sets are not disjoint");
  if (a.count() != b.count()) throw ContractError("matching_between: sets differ in size");
}

} // namespace detail

/// Perfect matching between disjoint equal-size sets `a` and `b` using edges
/// of g, found by augmenting paths over a greedy seed. Pairs are (a, b)
/// ordered by the a-endpoint.
inline std::optional<Matching> matching_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  detail::check_matching_contract(a, b);
  if (a.universe() != g.order()) throw ContractError("matching_between: sets do not belong to this graph");
  auto left = a.members();
  auto right = b.members();
  auto adj = detail::bipartite_adjacency(g, left, right);
  std::vector<int> match_right;
  if (detail::max_bipartite_matching(adj, right.size(), match_right) != left.size()) return std::nullopt;
  Matching m;
  for (std::size_t j = 0; j < right.size(); ++j)
    m.pairs.emplace_back(left[static_cast<std::size_t>(match_right[j])], right[j]);
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

/// Perfect matching whose partner sequence (ordered by the a-endpoint) is
/// lexicographically least.
inline std::optional<Matching> lex_least_matching(const Graph& g, const VertexSet& a, const VertexSet& b) {
  detail::check_matching_contract(a, b);
  auto left = a.members();
  auto right = b.members();
  auto adj = detail::bipartite_adjacency(g, left, right);
  std::vector<int> scratch;
  if (detail::max_bipartite_matching(adj, right.size(), scratch) != left.size()) return std::nullopt;

  std::vector<char> right_used(right.size(), 0);
  Matching m;
  for (std::size_t i = 0; i < left.size(); ++i) {
    bool fixed = false;
    for (std::size_t j : adj[i]) {
      if (right_used[j]) continue;
      // Would the remaining left vertices still be perfectly matchable?
      std::vector<std::vector<std::size_t>> rest(left.size() - i - 1);
      for (std::size_t r = i + 1; r < left.size(); ++r)
        for (std::size_t c : adj[r])
          if (!right_used[c] && c != j) rest[r - i - 1].push_back(c);
      if (detail::max_bipartite_matching(rest, right.size(), scratch) == rest.size()) {
        right_used[j] = 1;
        m.pairs.emplace_back(left[i], right[j]);
        fixed = true;
        break;
      }
    }
    if (!fixed) return std::nullopt;
  }
  return m;
}

} // namespace swapset
