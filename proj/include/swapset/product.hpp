#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "swapset/certificate.hpp"
#include "swapset/enumerate.hpp"
#include "swapset/errors.hpp"
#include "swapset/exact.hpp"
#include "swapset/graph.hpp"
#include "swapset/parameters.hpp"
#include "swapset/star_partition.hpp"

namespace swapset {

/// Coordinates (i, j) stand for (u_i, v_j): u_0 and v_0 are the centres.
struct StarProductLayout {
  int p = 0;
  int q = 0;
  std::vector<std::pair<int, int>> d_coords;
  std::vector<std::pair<int, int>> d_prime_coords;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> matching_coords;
};

struct StarProductSwap {
  ProductGraph product;
  SwapCertificate certificate;
  StarProductLayout layout;
};

namespace detail {

/// Coordinate pairs of the K_{1,p} □ K_{1,q} swap set.
inline std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> star_product_pairs(int p, int q) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> m;
  if (p < q) {
    for (auto [a, b] : star_product_pairs(q, p)) m.push_back({{a.second, a.first}, {b.second, b.first}});
    return m;
  }
  if (p == 1) {
    m.push_back({{0, 0}, {1, 0}});
    m.push_back({{1, 1}, {0, 1}});
    return m;
  }
  for (int i = 1; i <= p - 2; ++i) m.push_back({{i, 0}, {i, q}});
  m.push_back({{p - 1, 0}, {0, 0}});
  for (int i = 1; i <= q; ++i) m.push_back({{p, i}, {0, i}});
  return m;
}

} // namespace detail

inline StarProductSwap star_product_swap(int p, int q) {
  if (p < 1 || q < 1) throw ContractError("star_product_swap: p and q must be at least 1");
  StarProductSwap out{cartesian_product(star_graph(static_cast<std::size_t>(p)), star_graph(static_cast<std::size_t>(q))), {}, {p, q, {}, {}, {}}};
  auto coords = detail::star_product_pairs(p, q);
  std::sort(coords.begin(), coords.end());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto [a, b] : coords) {
    out.layout.d_coords.push_back(a);
    out.layout.d_prime_coords.push_back(b);
    pairs.emplace_back(out.product.id(a.first, a.second), out.product.id(b.first, b.second));
  }
  std::sort(out.layout.d_coords.begin(), out.layout.d_coords.end());
  std::sort(out.layout.d_prime_coords.begin(), out.layout.d_prime_coords.end());
  out.layout.matching_coords = std::move(coords);
  out.certificate = certificate_from_pairs(out.product.graph.order(), std::move(pairs));
  return out;
}

/// Partition of a tree into induced stars of order at least two. Vertices
/// are taken deepest first (from root 0); an unassigned vertex claims its
/// parent as a centre together with the parent's unassigned children. A
/// root left over joins the star of one of its children, which is always a
/// centre by then.
inline StarPartition star_partition_order2(const Graph& t) {
  if (!t.is_tree()) throw ContractError("star_partition_order2: not a tree");
  if (t.order() < 2) throw ContractError("star_partition_order2: trivial tree");
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, -1), order{0};
  std::vector<int> depth(n, -1);
  depth[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : t.neighbors(order[i]))
      if (depth[static_cast<std::size_t>(u)] < 0) {
        depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(order[i])] + 1;
        parent[static_cast<std::size_t>(u)] = order[i];
        order.push_back(u);
      }
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::make_pair(-depth[static_cast<std::size_t>(a)], a) < std::make_pair(-depth[static_cast<std::size_t>(b)], b);
  });

  std::vector<int> part_of(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v : order) {
    if (part_of[static_cast<std::size_t>(v)] >= 0 || v == 0) continue;
    Vertex c = parent[static_cast<std::size_t>(v)];
    std::vector<Vertex> members{c};
    for (Vertex u : t.neighbors(c))
      if (u != parent[static_cast<std::size_t>(c)] && part_of[static_cast<std::size_t>(u)] < 0) members.push_back(u);
    for (Vertex u : members) part_of[static_cast<std::size_t>(u)] = static_cast<int>(parts.size());
    parts.push_back(std::move(members));
  }
  if (part_of[0] < 0) {
    Vertex c = t.neighbors(0).front();
    parts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(c)])].push_back(0);
  }
  std::vector<StarPart> sp;
  for (auto& members : parts) {
    Vertex centre = members.front();
    StarPart part{centre, {members.begin() + 1, members.end()}};
    std::sort(part.leaves.begin(), part.leaves.end());
    if (part.leaves.size() == 1 && part.leaves[0] < centre) std::swap(part.center, part.leaves[0]);
    sp.push_back(std::move(part));
  }
  return make_partition(std::move(sp));
}

struct ProductSwap {
  ProductGraph product;
  SwapCertificate certificate;
  long long formula_bound = 0;
  StarPartition left_partition;
  StarPartition right_partition;
};

/// Tiles T □ T' by blocks S × S' over star parts of order >= 2 and places
/// the star-product swap set in every block.
inline ProductSwap tree_product_swap(const Graph& t, const Graph& t_prime) {
  if (!t.is_tree() || !t_prime.is_tree()) throw ContractError("tree_product_swap: factors must be trees");
  if (t.order() < 2 || t_prime.order() < 2) throw ContractError("tree_product_swap: trivial factor");
  ProductSwap out{cartesian_product(t, t_prime), {}, 0, star_partition_order2(t), star_partition_order2(t_prime)};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& a : out.left_partition.parts)
    for (const auto& b : out.right_partition.parts) {
      auto coords = detail::star_product_pairs(static_cast<int>(a.leaves.size()), static_cast<int>(b.leaves.size()));
      auto left = [&](int i) { return i == 0 ? a.center : a.leaves[static_cast<std::size_t>(i - 1)]; };
      auto right = [&](int j) { return j == 0 ? b.center : b.leaves[static_cast<std::size_t>(j - 1)]; };
      for (auto [x, y] : coords)
        pairs.emplace_back(out.product.id(left(x.first), right(x.second)), out.product.id(left(y.first), right(y.second)));
    }
  out.certificate = certificate_from_pairs(out.product.graph.order(), std::move(pairs));
  const long long xp = static_cast<long long>(out.left_partition.parts.size());
  const long long xq = static_cast<long long>(out.right_partition.parts.size());
  out.formula_bound = xp * xq *
                    (static_cast<long long>(out.left_partition.largest_leaf_count()) +
                     static_cast<long long>(out.right_partition.largest_leaf_count()) - 1);
  return out;
}

/// Breadth-first spanning tree rooted at vertex 0.
inline Graph bfs_spanning_tree(const Graph& g) {
  if (!g.is_connected()) throw ContractError("bfs_spanning_tree: graph is disconnected");
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  std::vector<Edge> es;
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex u : g.neighbors(queue[i]))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        es.emplace_back(queue[i], u);
        queue.push_back(u);
      }
  return Graph(n, std::move(es));
}

/// Swap set on G □ H from spanning trees of both factors; valid on the full
/// product because it only adds edges.
inline ProductSwap product_swap_general(const Graph& g, const Graph& h) {
  if (g.order() < 2 || h.order() < 2) throw ContractError("product_swap_general: trivial factor");
  if (!g.is_connected() || !h.is_connected()) throw ContractError("product_swap_general: disconnected factor");
  ProductSwap out = tree_product_swap(bfs_spanning_tree(g), bfs_spanning_tree(h));
  out.product = cartesian_product(g, h);
  Verdict v = verify_certificate(out.product.graph, out.certificate);
  if (!v) throw ConstructionError("product certificate fails: " + std::string(to_string(v.violation)));
  return out;
}

// --- lower-bound questions ---------------------------------------------------

struct ProductScanRow {
  std::string g_id;
  std::string h_id;
  DdmStatus status = DdmStatus::infinite;
  std::optional<int> ddm_product;
  int gamma_g = 0;
  int gamma_h = 0;
  std::optional<long long> min_expr; // nullopt = infinite
  bool gamma_violation = false;      // DD_m(G□H) < γ(G)γ(H)
  bool min_violation = false;        // DD_m(G□H) < min expression
  std::optional<SwapCertificate> certificate;
};

struct ProductScan {
  int max_vertices = 0;
  std::vector<ProductScanRow> rows;
  std::size_t gamma_violations = 0;
  std::size_t min_violations = 0;
  std::size_t budget_exceeded = 0;
};

/// Every unordered pair of connected factors with at least two vertices
/// each and |V(G)||V(H)| <= max_vertices (factors capped at 8 vertices).
inline ProductScan product_question_scan(int max_vertices, std::uint64_t node_budget = default_node_budget) {
  ProductScan scan;
  scan.max_vertices = max_vertices;
  struct Factor {
    Graph g;
    std::string id;
    int gamma;
    std::optional<int> ddm;
  };
  std::vector<std::vector<Factor>> by_order(9);
  for (int n = 2; n <= 8 && 2 * n <= max_vertices; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) {
      DdmResult r = dd_m_exact(g, node_budget);
      if (r.status == DdmStatus::budget_exceeded) throw BudgetError("product_question_scan: factor DD_m over budget");
      int gamma = domination_number(g);
      std::string id = graph6(g);
      by_order[static_cast<std::size_t>(n)].push_back({std::move(g), std::move(id), gamma, r.k});
    }
  auto mul = [](std::optional<int> a, int b) -> std::optional<long long> {
    if (!a) return std::nullopt;
    return static_cast<long long>(*a) * b;
  };
  for (int a = 2; a <= 8; ++a)
    for (int b = a; b <= 8 && a * b <= max_vertices; ++b)
      for (std::size_t i = 0; i < by_order[static_cast<std::size_t>(a)].size(); ++i)
        for (std::size_t j = a == b ? i : 0; j < by_order[static_cast<std::size_t>(b)].size(); ++j) {
          const Factor& f = by_order[static_cast<std::size_t>(a)][i];
          const Factor& h = by_order[static_cast<std::size_t>(b)][j];
          ProductScanRow row{f.id, h.id, DdmStatus::infinite, std::nullopt, f.gamma, h.gamma, std::nullopt, false, false, std::nullopt};
          auto x = mul(f.ddm, h.gamma), y = mul(h.ddm, f.gamma);
          if (x && y)
            row.min_expr = std::min(*x, *y);
          else
            row.min_expr = x ? x : y;
          Graph prod = cartesian_product(f.g, h.g).graph;
          DdmResult r = dd_m_exact(prod, node_budget);
          row.status = r.status;
          if (r.status == DdmStatus::budget_exceeded) {
            ++scan.budget_exceeded;
            scan.rows.push_back(std::move(row));
            continue;
          }
          row.ddm_product = r.k;
          row.certificate = r.certificate;
          // A finite value is the only way to fall below a bound.
          if (r.k) {
            row.gamma_violation = *r.k < f.gamma * h.gamma;
            row.min_violation = row.min_expr && *r.k < *row.min_expr;
          }
          scan.gamma_violations += row.gamma_violation;
          scan.min_violations += row.min_violation;
          scan.rows.push_back(std::move(row));
        }
  return scan;
}

inline std::string product_scan_tsv(const ProductScan& scan) {
  std::ostringstream out;
  out << "g_id\th_id\tddm_product\tgamma_g\tgamma_h\tmin_expr\tviolation_flag\n";
  for (const auto& r : scan.rows) {
    out << r.g_id << '\t' << r.h_id << '\t';
    if (r.ddm_product)
      out << *r.ddm_product;
    else
      out << (r.status == DdmStatus::budget_exceeded ? "budget" : "infinity");
    out << '\t' << r.gamma_g << '\t' << r.gamma_h << '\t';
    if (r.min_expr)
      out << *r.min_expr;
    else
      out << "infinity";
    out << '\t' << (r.gamma_violation ? "gamma" : r.min_violation ? "min" : "none") << '\n';
  }
  return out.str();
}

} // namespace swapset
