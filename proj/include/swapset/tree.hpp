#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "swapset/certificate.hpp"
#include "swapset/errors.hpp"
#include "swapset/exact.hpp"
#include "swapset/graph.hpp"
#include "swapset/parameters.hpp"
#include "swapset/star_partition.hpp"

namespace swapset {

namespace detail {

inline void require_tree(const Graph& t, const char* who) {
  if (!t.is_tree()) throw ContractError(std::string(who) + ": not a tree");
}

inline void require_nontrivial_tree(const Graph& t, const char* who) {
  require_tree(t, who);
  if (t.order() < 2) throw ContractError(std::string(who) + ": trivial tree");
}

} // namespace detail

inline bool is_weak_tree(const Graph& t) {
  detail::require_tree(t, "is_weak_tree");
  return !is_strong_graph(t);
}

/// T' obtained by deleting all but the lowest-index leaf of every strong
/// stem. Reduced vertices keep the relative order of their originals.
struct WeakReduction {
  Graph reduced;
  std::vector<std::pair<Vertex, Vertex>> removed; // (strong stem, deleted leaf)
  std::vector<Vertex> embedding;                  // reduced id -> original id
};

inline WeakReduction weak_reduction(const Graph& t) {
  detail::require_tree(t, "weak_reduction");
  const std::size_t n = t.order();
  VertexSet keep = VertexSet::full(n);
  WeakReduction out;
  auto kinds = classify_stems(t);
  for (std::size_t v = 0; v < n; ++v) {
    if (kinds[v] != StemKind::strong_stem) continue;
    auto leaves = leaf_neighbors(t, static_cast<Vertex>(v));
    for (std::size_t i = 1; i < leaves.size(); ++i) {
      keep.erase(leaves[i]);
      out.removed.emplace_back(static_cast<Vertex>(v), leaves[i]);
    }
  }
  auto [g, map] = t.induced(keep);
  out.reduced = std::move(g);
  out.embedding = std::move(map);
  return out;
}

namespace detail {

// Per-vertex states of the K1/K2 dynamic program on a rooted weak tree.
enum TreeState : int {
  paired_with_parent = 0, // K2 with the parent
  paired_with_child = 1,  // K2 with one child
  single_full = 2,        // K1 with at least two K2 children
  single_half = 3,        // K1 with at least one K2 child; parent must be in a K2
  state_count = 4,
};

inline constexpr int unreachable = std::numeric_limits<int>::max() / 4;

/// Minimum-weight K1/K2 simple star partitioning of a weak tree as the list
/// of K2 parts; the remaining vertices are K1 parts.
inline std::vector<std::pair<Vertex, Vertex>> weak_tree_pairs(const Graph& t) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : t.neighbors(order[i]))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        parent[static_cast<std::size_t>(u)] = order[i];
        order.push_back(u);
      }
  auto children = [&](Vertex v) {
    std::vector<Vertex> c;
    for (Vertex u : t.neighbors(v))
      if (u != parent[static_cast<std::size_t>(v)]) c.push_back(u);
    return c;
  };

  std::vector<std::array<int, state_count>> f(n);
  // Best state for a child whose parent lies in a K2 part.
  auto under_pair = [&](Vertex u) {
    const auto& s = f[static_cast<std::size_t>(u)];
    return std::min({s[paired_with_child], s[single_full], s[single_half]});
  };
  auto under_single = [&](Vertex u) {
    const auto& s = f[static_cast<std::size_t>(u)];
    return std::min(s[paired_with_child], s[single_full]);
  };
  auto add = [](int a, int b) { return std::min(unreachable, a + b); };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto ch = children(v);
    auto& s = f[static_cast<std::size_t>(v)];
    int all_pair = 0;
    for (Vertex u : ch) all_pair = add(all_pair, under_pair(u));
    s[paired_with_parent] = all_pair;
    s[paired_with_child] = unreachable;
    for (Vertex w : ch) {
      int rest = 1 + f[static_cast<std::size_t>(w)][paired_with_parent];
      for (Vertex u : ch)
        if (u != w) rest = add(rest, under_pair(u));
      s[paired_with_child] = std::min(s[paired_with_child], rest);
    }
    // count[c] = best weight with min(c, 2) children in K2 parts
    std::array<int, 3> count{0, unreachable, unreachable};
    for (Vertex u : ch) {
      std::array<int, 3> next{unreachable, unreachable, unreachable};
      const auto& su = f[static_cast<std::size_t>(u)];
      for (int c = 0; c < 3; ++c) {
        if (count[c] >= unreachable) continue;
        next[c] = std::min(next[c], add(count[c], su[single_full]));
        int c2 = std::min(c + 1, 2);
        next[c2] = std::min(next[c2], add(count[c], su[paired_with_child]));
      }
      count = next;
    }
    s[single_full] = count[2];
    s[single_half] = std::min(count[1], count[2]);
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  // Backtrace; ties go to the earliest state in TreeState order.
  auto pick_under_pair = [&](Vertex u) {
    const auto& s = f[static_cast<std::size_t>(u)];
    int best = under_pair(u);
    for (int st : {paired_with_child, single_full, single_half})
      if (s[st] == best) return st;
    return static_cast<int>(single_half);
  };
  std::vector<std::pair<Vertex, int>> stack;
  {
    const auto& s = f[0];
    stack.emplace_back(0, s[paired_with_child] <= s[single_full] ? paired_with_child : single_full);
  }
  while (!stack.empty()) {
    auto [v, st] = stack.back();
    stack.pop_back();
    auto ch = children(v);
    const int target = f[static_cast<std::size_t>(v)][st];
    if (st == paired_with_parent) {
      for (Vertex u : ch) stack.emplace_back(u, pick_under_pair(u));
    } else if (st == paired_with_child) {
      for (Vertex w : ch) {
        int rest = 1 + f[static_cast<std::size_t>(w)][paired_with_parent];
        for (Vertex u : ch)
          if (u != w) rest = add(rest, under_pair(u));
        if (rest != target) continue;
        pairs.emplace_back(std::min(v, w), std::max(v, w));
        stack.emplace_back(w, paired_with_parent);
        for (Vertex u : ch)
          if (u != w) stack.emplace_back(u, pick_under_pair(u));
        break;
      }
    } else {
      // Re-run the count DP forwards, remembering choices, then walk back.
      const std::size_t k = ch.size();
      std::vector<std::array<int, 3>> table(k + 1, {unreachable, unreachable, unreachable});
      table[0][0] = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& su = f[static_cast<std::size_t>(ch[i])];
        for (int c = 0; c < 3; ++c) {
          if (table[i][c] >= unreachable) continue;
          table[i + 1][c] = std::min(table[i + 1][c], add(table[i][c], su[single_full]));
          int c2 = std::min(c + 1, 2);
          table[i + 1][c2] = std::min(table[i + 1][c2], add(table[i][c], su[paired_with_child]));
        }
      }
      int c = st == single_full || table[k][2] == target ? 2 : 1;
      for (std::size_t i = k; i-- > 0;) {
        const auto& su = f[static_cast<std::size_t>(ch[i])];
        // Prefer the child in a K2 part when both choices fit.
        bool done = false;
        for (int prev = 0; prev < 3 && !done; ++prev) {
          if (std::min(prev + 1, 2) != c || table[i][prev] >= unreachable) continue;
          if (add(table[i][prev], su[paired_with_child]) == table[i + 1][c]) {
            stack.emplace_back(ch[i], paired_with_child);
            c = prev;
            done = true;
          }
        }
        if (!done) stack.emplace_back(ch[i], single_full);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

} // namespace detail

/// Exact S(t) with a minimum-weight simple star partitioning attaining it.
inline WeightedPartition s_weight(const Graph& t) {
  detail::require_nontrivial_tree(t, "s_weight");
  WeakReduction red = weak_reduction(t);
  auto pairs = detail::weak_tree_pairs(red.reduced);

  std::map<Vertex, std::vector<Vertex>> extra;
  for (auto [stem, leaf] : red.removed) extra[stem].push_back(leaf);
  std::vector<char> covered(t.order(), 0);
  std::vector<StarPart> parts;
  for (auto [a, b] : pairs) {
    Vertex oa = red.embedding[static_cast<std::size_t>(a)], ob = red.embedding[static_cast<std::size_t>(b)];
    std::vector<Vertex> members{oa, ob};
    for (Vertex x : {oa, ob})
      if (auto it = extra.find(x); it != extra.end()) members.insert(members.end(), it->second.begin(), it->second.end());
    for (Vertex x : members) covered[static_cast<std::size_t>(x)] = 1;
    parts.push_back(make_part(t, members));
  }
  for (std::size_t v = 0; v < t.order(); ++v)
    if (!covered[v]) parts.push_back(make_part(t, {static_cast<Vertex>(v)}));
  StarPartition p = make_partition(std::move(parts));
  return {p.weight, std::move(p)};
}

/// The labeling argument: every K1 part must see both a D and a D' vertex
/// among its K2 neighbours.
inline SwapCertificate swap_set_from_partition(const Graph& t, const StarPartition& p) {
  detail::require_nontrivial_tree(t, "swap_set_from_partition");
  if (is_strong_graph(t)) throw ContractError("swap_set_from_partition: strong tree");
  if (auto why = check_simple_star_partition(t, p); !why.empty())
    throw ContractError("swap_set_from_partition: " + why);
  const std::size_t n = t.order();
  std::vector<Vertex> partner(n, -1);
  for (const auto& part : p.parts) {
    if (part.order() > 2) throw ContractError("swap_set_from_partition: part larger than K2");
    if (part.order() == 2) {
      partner[static_cast<std::size_t>(part.center)] = part.leaves[0];
      partner[static_cast<std::size_t>(part.leaves[0])] = part.center;
    }
  }

  enum Label : char { none, in_d, in_d_prime };
  std::vector<Label> label(n, none);
  auto assign = [&](Vertex v, Label l) {
    label[static_cast<std::size_t>(v)] = l;
    label[static_cast<std::size_t>(partner[static_cast<std::size_t>(v)])] = l == in_d ? in_d_prime : in_d;
  };
  auto flip_component = [&](Vertex start, Vertex cut) {
    std::vector<Vertex> stack{start};
    std::vector<char> seen(n, 0);
    seen[static_cast<std::size_t>(cut)] = seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      auto& l = label[static_cast<std::size_t>(v)];
      if (l != none) l = l == in_d ? in_d_prime : in_d;
      for (Vertex u : t.neighbors(v))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
    }
  };

  for (std::size_t u = 0; u < n; ++u) {
    if (partner[u] >= 0) continue;
    std::vector<Vertex> paired;
    for (Vertex v : t.neighbors(static_cast<Vertex>(u)))
      if (partner[static_cast<std::size_t>(v)] >= 0) paired.push_back(v);
    for (Label want : {in_d, in_d_prime}) {
      bool present = std::any_of(paired.begin(), paired.end(), [&](Vertex v) { return label[static_cast<std::size_t>(v)] == want; });
      if (present) continue;
      auto free = std::find_if(paired.begin(), paired.end(), [&](Vertex v) { return label[static_cast<std::size_t>(v)] == none; });
      if (free != paired.end()) assign(*free, want);
    }
    bool has_d = false, has_dp = false;
    for (Vertex v : paired) {
      has_d = has_d || label[static_cast<std::size_t>(v)] == in_d;
      has_dp = has_dp || label[static_cast<std::size_t>(v)] == in_d_prime;
    }
    if (!(has_d && has_dp)) flip_component(paired.front(), static_cast<Vertex>(u));
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& part : p.parts) {
    if (part.order() != 2) continue;
    Vertex a = part.center, b = part.leaves[0];
    if (label[static_cast<std::size_t>(a)] == none) assign(a, in_d);
    if (label[static_cast<std::size_t>(a)] == in_d)
      pairs.emplace_back(a, b);
    else
      pairs.emplace_back(b, a);
  }
  return certificate_from_pairs(n, std::move(pairs));
}

inline DdmResult dd_m_tree(const Graph& t) {
  detail::require_nontrivial_tree(t, "dd_m_tree");
  DdmResult r;
  if (is_strong_graph(t)) return r;
  WeightedPartition w = s_weight(t);
  r.status = DdmStatus::finite;
  r.k = w.weight;
  r.certificate = swap_set_from_partition(t, w.partition);
  return r;
}

/// G with a new pendant vertex n+i attached to each vertex i.
inline Graph hat_graph(const Graph& h) {
  const std::size_t n = h.order();
  std::vector<Edge> es = h.edges();
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
  return Graph(2 * n, std::move(es));
}

/// True iff t is the hat of some tree: the leaves can be matched to the
/// remaining vertices with each non-leaf owning exactly one leaf.
inline bool four_way_equality(const Graph& t) {
  detail::require_nontrivial_tree(t, "four_way_equality");
  const std::size_t n = t.order();
  if (n == 2) return true;
  if (n % 2 != 0) return false;
  std::size_t leaves = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (t.degree(static_cast<Vertex>(v)) == 1) {
      ++leaves;
      continue;
    }
    if (leaf_neighbors(t, static_cast<Vertex>(v)).size() != 1) return false;
  }
  return 2 * leaves == n;
}

inline bool alpha_equals_ddm(const Graph& t) {
  detail::require_nontrivial_tree(t, "alpha_equals_ddm");
  if (is_strong_graph(t)) return false;
  return 2 * static_cast<std::size_t>(s_weight(t).weight) == t.order();
}

inline bool alpha_equals_eviction(const Graph& t) {
  detail::require_nontrivial_tree(t, "alpha_equals_eviction");
  WeakReduction red = weak_reduction(t);
  return 2 * static_cast<std::size_t>(s_weight(red.reduced).weight) == red.reduced.order();
}

} // namespace swapset
