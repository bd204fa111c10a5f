#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "swapset/graph.hpp"
#include "swapset/parameters.hpp"

namespace swapset {

struct StarPart {
  Vertex center = 0;
  std::vector<Vertex> leaves; // ascending; empty for a K1 part

  std::size_t order() const { return leaves.size() + 1; }
  friend bool operator==(const StarPart&, const StarPart&) = default;
};

/// Partition of a tree into induced stars. weight = sum of (|part| - 1).
struct StarPartition {
  std::vector<StarPart> parts; // ascending by center
  int weight = 0;

  std::size_t largest_leaf_count() const {
    std::size_t best = 0;
    for (const auto& p : parts) best = std::max(best, p.leaves.size());
    return best;
  }

  friend bool operator==(const StarPartition&, const StarPartition&) = default;
};

/// Canonical part: K2 centred at its lower endpoint, leaves sorted.
inline StarPart make_part(const Graph& t, std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  StarPart p;
  if (members.size() == 1) {
    p.center = members[0];
    return p;
  }
  Vertex center = members[0];
  if (members.size() > 2) {
    for (Vertex v : members) {
      std::size_t inside = 0;
      for (Vertex u : members)
        if (u != v && t.adjacent(u, v)) ++inside;
      if (inside + 1 == members.size()) {
        center = v;
        break;
      }
    }
  }
  p.center = center;
  for (Vertex v : members)
    if (v != center) p.leaves.push_back(v);
  return p;
}

inline StarPartition make_partition(std::vector<StarPart> parts) {
  std::sort(parts.begin(), parts.end(), [](const StarPart& a, const StarPart& b) { return a.center < b.center; });
  StarPartition p{std::move(parts), 0};
  for (const auto& part : p.parts) p.weight += static_cast<int>(part.leaves.size());
  return p;
}

/// Empty string when `p` is a simple star partitioning of `t`; otherwise a
/// short description of the first broken condition.
inline std::string check_simple_star_partition(const Graph& t, const StarPartition& p) {
  const std::size_t n = t.order();
  std::vector<int> owner(n, -1);
  int weight = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    std::vector<Vertex> members = part.leaves;
    members.push_back(part.center);
    for (Vertex v : members) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return "vertex out of range";
      if (owner[static_cast<std::size_t>(v)] >= 0) return "vertex " + std::to_string(v) + " in two parts";
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (Vertex l : part.leaves)
      if (!t.adjacent(part.center, l)) return "part centred at " + std::to_string(part.center) + " is not a star";
    for (std::size_t a = 0; a < part.leaves.size(); ++a)
      for (std::size_t b = a + 1; b < part.leaves.size(); ++b)
        if (t.adjacent(part.leaves[a], part.leaves[b])) return "part is not an induced star";
    if (part.leaves.size() == 1 && part.leaves[0] < part.center) return "K2 part not centred at lower endpoint";
    weight += static_cast<int>(part.leaves.size());
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner[v] < 0) return "vertex " + std::to_string(v) + " not covered";
  if (weight != p.weight) return "weight mismatch";

  auto part_size = [&](Vertex v) { return p.parts[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])].order(); };
  for (std::size_t v = 0; v < n; ++v) {
    auto leaves = leaf_neighbors(t, static_cast<Vertex>(v));
    if (leaves.size() == 1) {
      Vertex l = leaves[0];
      if (owner[v] != owner[static_cast<std::size_t>(l)] || part_size(static_cast<Vertex>(v)) != 2)
        return "weak stem " + std::to_string(v) + " not paired with its leaf";
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (part_size(static_cast<Vertex>(v)) != 1) continue;
    std::vector<int> seen;
    for (Vertex u : t.neighbors(static_cast<Vertex>(v)))
      if (part_size(u) >= 2) seen.push_back(owner[static_cast<std::size_t>(u)]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (seen.size() < 2) return "K1 part " + std::to_string(v) + " sees fewer than two non-K1 parts";
  }
  return {};
}

inline nlohmann::json to_json(const StarPartition& p) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& part : p.parts) parts.push_back({{"center", part.center}, {"leaves", part.leaves}});
  return {{"parts", parts}, {"weight", p.weight}};
}

inline StarPartition star_partition_from_json(const nlohmann::json& j) {
  std::vector<StarPart> parts;
  for (const auto& x : j.at("parts")) {
    StarPart part{x.at("center").get<Vertex>(), x.at("leaves").get<std::vector<Vertex>>()};
    std::sort(part.leaves.begin(), part.leaves.end());
    parts.push_back(std::move(part));
  }
  StarPartition p = make_partition(std::move(parts));
  p.weight = j.at("weight").get<int>();
  return p;
}

} // namespace swapset
