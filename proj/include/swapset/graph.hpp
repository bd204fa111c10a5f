#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swapset/errors.hpp"
#include "swapset/vertex_set.hpp"

namespace swapset {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted
/// ascending so every traversal is deterministic.
class Graph {
public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw ContractError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw ContractError("duplicate edge");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet s(n_, neighbors(v));
    s.insert(v);
    return s;
  }

  VertexSet open_neighborhood(const VertexSet& s) const {
    VertexSet out(n_);
    for (Vertex v : s.members())
      for (Vertex u : neighbors(v)) out.insert(u);
    return out;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : neighbors(v))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    return reached == n_;
  }

  bool is_tree() const { return n_ >= 1 && edges_.size() + 1 == n_ && is_connected(); }

  /// Subgraph induced by `keep`, with vertices renumbered in ascending order.
  /// The second member maps new ids back to original ids.
  std::pair<Graph, std::vector<Vertex>> induced(const VertexSet& keep) const {
    auto members = keep.members();
    std::vector<Vertex> index(n_, -1);
    for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
      if (index[static_cast<std::size_t>(u)] >= 0 && index[static_cast<std::size_t>(v)] >= 0)
        es.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return {Graph(members.size(), std::move(es)), std::move(members)};
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// --- edge-list text format ------------------------------------------------

namespace detail {

inline bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (tok[0] == '-') {
    neg = true;
    i = 1;
    if (tok.size() == 1) return false;
  }
  long long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
    v = v * 10 + (tok[i] - '0');
    if (v > (1LL << 40)) return false;
  }
  out = neg ? -v : v;
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

} // namespace detail

/// Parses the "n m" header followed by m "u v" lines. Blank trailing lines
/// are tolerated; anything else malformed raises ParseError with a 1-based
/// line number.
inline Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && detail::split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

  auto header = detail::split_ws(lines[0]);
  long long n = 0, m = 0;
  if (header.size() != 2 || !detail::parse_int(header[0], n) || !detail::parse_int(header[1], m) || n < 0 || m < 0)
    throw ParseError(1, "malformed header, expected \"n m\"");
  if (lines.size() - 1 != static_cast<std::size_t>(m))
    throw ParseError(lines.size(), "expected " + std::to_string(m) + " edge lines, found " +
                                       std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = detail::split_ws(lines[i]);
    long long u = 0, v = 0;
    if (tok.size() != 2 || !detail::parse_int(tok[0], u) || !detail::parse_int(tok[1], v))
      throw ParseError(i + 1, "malformed edge line, expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(i + 1, "vertex out of range");
    if (u == v) throw ParseError(i + 1, "self-loop");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    auto it = std::lower_bound(seen.begin(), seen.end(), e);
    if (it != seen.end() && *it == e) throw ParseError(i + 1, "duplicate edge");
    seen.insert(it, e);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// --- named families ---------------------------------------------------------

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ContractError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(es));
}

/// K_{1,leaves} with center 0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= leaves; ++i) es.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, std::move(es));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, std::move(es));
}

/// K3 with every edge doubled and then every edge subdivided: 3 branch
/// vertices (0..2) of degree 4 joined through 6 subdivision vertices.
inline Graph subdivided_doubled_triangle() {
  std::vector<Edge> es;
  Vertex next = 3;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = a + 1; b < 3; ++b)
      for (int copy = 0; copy < 2; ++copy) {
        es.emplace_back(a, next);
        es.emplace_back(next, b);
        ++next;
      }
  return Graph(9, std::move(es));
}

// --- Cartesian product ------------------------------------------------------

/// G □ H together with its coordinate map: (a, b) <-> a * |V(H)| + b.
struct ProductGraph {
  Graph graph;
  std::size_t left_order = 0;
  std::size_t right_order = 0;

  Vertex id(Vertex a, Vertex b) const { return static_cast<Vertex>(static_cast<std::size_t>(a) * right_order + static_cast<std::size_t>(b)); }
  std::pair<Vertex, Vertex> coords(Vertex v) const {
    return {static_cast<Vertex>(static_cast<std::size_t>(v) / right_order),
            static_cast<Vertex>(static_cast<std::size_t>(v) % right_order)};
  }
};

inline ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  ProductGraph p;
  p.left_order = g.order();
  p.right_order = h.order();
  std::vector<Edge> es;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (auto [b, d] : h.edges()) es.emplace_back(p.id(static_cast<Vertex>(a), b), p.id(static_cast<Vertex>(a), d));
  for (auto [a, c] : g.edges())
    for (std::size_t b = 0; b < h.order(); ++b) es.emplace_back(p.id(a, static_cast<Vertex>(b)), p.id(c, static_cast<Vertex>(b)));
  p.graph = Graph(g.order() * h.order(), std::move(es));
  return p;
}

/// P_cols □ P_rows laid out as the product above, so vertex (i, j) with
/// column i in [1, cols] and row j in [1, rows] has id (i-1)*rows + (j-1).
inline Graph grid_graph(std::size_t cols, std::size_t rows) {
  return cartesian_product(path_graph(cols), path_graph(rows)).graph;
}

} // namespace swapset
