#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "swapset/certificate.hpp"
#include "swapset/enumerate.hpp"
#include "swapset/errors.hpp"
#include "swapset/exact.hpp"
#include "swapset/graph.hpp"
#include "swapset/matching.hpp"
#include "swapset/parameters.hpp"

namespace swapset {

/// Swap set of size at most 2 for a connected graph on more than three
/// vertices with independence number 2. Complete graphs (independence
/// number 1) get the size-1 certificate on vertices 0 and 1.
inline SwapCertificate alpha2_swap(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 3) throw ContractError("alpha2_swap: needs more than three vertices");
  if (!g.is_connected()) throw ContractError("alpha2_swap: graph is disconnected");
  const int alpha = independence_number(g);
  if (alpha > 2) throw ContractError("alpha2_swap: independence number exceeds 2");
  if (alpha == 1) return certificate_from_pairs(n, {{0, 1}});

  VertexSet i_set = max_independent_set(g);
  VertexSet around = g.open_neighborhood(i_set);
  auto cand = around.members();
  auto attempt = [&](Vertex y, Vertex z) -> std::optional<SwapCertificate> {
    VertexSet j_set(n);
    j_set.insert(y);
    j_set.insert(z);
    if (!is_dominating(g, j_set)) return std::nullopt;
    auto m = lex_least_matching(g, i_set, j_set);
    if (!m) return std::nullopt;
    return SwapCertificate{i_set, j_set, *m};
  };
  // An independent pair inside N(I) first, then any dominating pair there.
  for (bool want_independent : {true, false})
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (want_independent == g.adjacent(cand[a], cand[b])) continue;
        if (auto c = attempt(cand[a], cand[b])) return *c;
      }
  throw ConstructionError("alpha2_swap: no pair in N(I) works");
}

enum class Alpha3Path {
  independent_pair, // I and its matched partners J already form a swap pair
  restricted,       // found by exact search inside I, J and the vertices J misses
  fallback,         // needed the unrestricted exact search
};

inline std::string_view to_string(Alpha3Path p) {
  switch (p) {
  case Alpha3Path::independent_pair: return "matched";
  case Alpha3Path::restricted: return "restricted";
  case Alpha3Path::fallback: return "fallback";
  }
  return "unknown";
}

struct Alpha3Swap {
  SwapCertificate certificate;
  Alpha3Path path = Alpha3Path::independent_pair;
};

/// Swap set for a connected graph with n >= 6 and independence number 3.
/// Follows the existence argument: take a maximum independent I, a matching
/// M saturating I with partners J; if J dominates, (I, J, M) is the answer.
/// Otherwise the swap set lives on I, J and the set Q of vertices J misses,
/// which an exact search restricted to I ∪ J ∪ Q finds. The unrestricted
/// search is the last resort.
inline Alpha3Swap alpha3_swap_exists(const Graph& g, std::uint64_t node_budget = default_node_budget) {
  const std::size_t n = g.order();
  if (n < 6) throw ContractError("alpha3_swap_exists: needs at least six vertices");
  if (!g.is_connected()) throw ContractError("alpha3_swap_exists: graph is disconnected");
  if (independence_number(g) != 3) throw ContractError("alpha3_swap_exists: independence number is not 3");

  VertexSet i_set = max_independent_set(g);
  auto left = i_set.members();
  std::vector<Vertex> right;
  for (std::size_t v = 0; v < n; ++v)
    if (!i_set.contains(static_cast<Vertex>(v))) right.push_back(static_cast<Vertex>(v));
  auto adj = detail::bipartite_adjacency(g, left, right);
  std::vector<int> match_right;
  const bool saturates = detail::max_bipartite_matching(adj, right.size(), match_right) == left.size();

  if (saturates) {
    VertexSet j_set(n);
    for (std::size_t r = 0; r < right.size(); ++r)
      if (match_right[r] >= 0) j_set.insert(right[r]);
    if (is_dominating(g, j_set)) {
      auto m = lex_least_matching(g, i_set, j_set);
      return {SwapCertificate{i_set, j_set, *m}, Alpha3Path::independent_pair};
    }
    VertexSet keep = i_set | j_set;
    VertexSet covered = j_set | g.open_neighborhood(j_set);
    for (std::size_t v = 0; v < n; ++v)
      if (!covered.contains(static_cast<Vertex>(v))) keep.insert(static_cast<Vertex>(v));
    SearchOptions opt;
    opt.node_budget = node_budget;
    opt.candidates = keep;
    DdmResult r = dd_m_search(g, opt);
    if (r.finite()) return {*r.certificate, Alpha3Path::restricted};
  }
  DdmResult r = dd_m_exact(g, node_budget);
  if (r.status == DdmStatus::budget_exceeded) throw BudgetError("alpha3_swap_exists: search budget exhausted");
  if (!r.finite()) throw ConstructionError("alpha3_swap_exists: graph has no swap set");
  return {*r.certificate, Alpha3Path::fallback};
}

// --- scans ---------------------------------------------------------------------

struct ScanRecord {
  std::string id; // graph6 of the canonical form
  int n = 0;
  int alpha = 0;
  int gamma = 0;
  DdmStatus status = DdmStatus::infinite;
  std::optional<int> ddm;
  std::optional<int> certificate_size; // from the constructive routine, if any
  std::string note;
};

struct Counterexample {
  std::string id;
  std::string edge_list;
  std::string claim;
};

/// Largest order (within the scan) of a connected graph with the given
/// independence number and no swap set.
struct ThresholdRow {
  int alpha = 0;
  int largest_n_without_swap = 0;
  std::size_t graphs_without_swap = 0;
  std::string witness;
};

struct ScanReport {
  std::string name;
  int min_n = 1;
  int max_n = 1;
  std::string filter;
  std::vector<ScanRecord> records;
  std::vector<Counterexample> counterexamples;
  std::vector<ThresholdRow> thresholds;
  std::size_t fallbacks = 0;
};

namespace detail {

inline ScanRecord base_record(const Graph& g, int alpha, const DdmResult& r) {
  ScanRecord rec;
  rec.id = graph6(g);
  rec.n = static_cast<int>(g.order());
  rec.alpha = alpha;
  rec.gamma = domination_number(g);
  rec.status = r.status;
  rec.ddm = r.k;
  return rec;
}

inline void require_scope(int scope_n) {
  if (scope_n < 1) throw ContractError("scan: scope must be positive");
  if (scope_n > 8) throw BudgetError("scan: scope must be at most 8");
}

} // namespace detail

/// Every connected graph with 4 <= n <= scope_n and independence number 2
/// must get a verifying certificate of size at most 2.
inline ScanReport alpha2_scan(int scope_n) {
  detail::require_scope(scope_n);
  ScanReport rep{"alpha2", 4, scope_n, "connected, alpha = 2, n >= 4", {}, {}, {}, 0};
  for (int n = 4; n <= scope_n; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int alpha = independence_number(g);
      if (alpha != 2) continue;
      DdmResult r = dd_m_exact(g);
      ScanRecord rec = detail::base_record(g, alpha, r);
      std::string failure;
      try {
        SwapCertificate c = alpha2_swap(g);
        rec.certificate_size = static_cast<int>(c.size());
        if (!verify_certificate(g, c)) failure = "certificate does not verify";
        else if (c.size() > 2) failure = "certificate larger than 2";
      } catch (const ConstructionError& e) {
        failure = e.what();
      }
      if (!failure.empty()) rep.counterexamples.push_back({rec.id, to_edge_list(g), "alpha2 swap of size <= 2: " + failure});
      rep.records.push_back(std::move(rec));
    }
  return rep;
}

/// Connected graphs up to scope_n with independence number 3: DD_m <= 3
/// whenever a swap set exists, and for n >= 6 the constructive routine must
/// return a verifying certificate.
inline ScanReport alpha3_bound_check(int scope_n) {
  detail::require_scope(scope_n);
  ScanReport rep{"alpha3", 1, scope_n, "connected, alpha = 3", {}, {}, {}, 0};
  for (int n = 1; n <= scope_n; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int alpha = independence_number(g);
      if (alpha != 3) continue;
      DdmResult r = dd_m_exact(g);
      ScanRecord rec = detail::base_record(g, alpha, r);
      if (r.status == DdmStatus::budget_exceeded)
        rep.counterexamples.push_back({rec.id, to_edge_list(g), "exact search over budget"});
      if (r.k && *r.k > 3) rep.counterexamples.push_back({rec.id, to_edge_list(g), "ddm <= alpha for alpha = 3"});
      if (n >= 6) {
        try {
          Alpha3Swap s = alpha3_swap_exists(g);
          rec.certificate_size = static_cast<int>(s.certificate.size());
          rec.note = std::string(to_string(s.path));
          if (s.path == Alpha3Path::fallback) ++rep.fallbacks;
          if (!verify_certificate(g, s.certificate))
            rep.counterexamples.push_back({rec.id, to_edge_list(g), "alpha3 swap set: certificate does not verify"});
        } catch (const ConstructionError&) {
          rep.counterexamples.push_back({rec.id, to_edge_list(g), "alpha3 swap set exists for n >= 6"});
        }
      }
      rep.records.push_back(std::move(rec));
    }
  return rep;
}

/// Every connected graph up to scope_n: DD_m <= alpha among graphs with a
/// swap set, plus the largest swap-free order seen for each alpha. The
/// nine-vertex subdivided doubled triangle is added as a named extra.
inline ScanReport conjecture_scan(int scope_n) {
  detail::require_scope(scope_n);
  ScanReport rep{"conjectures", 1, scope_n, "connected", {}, {}, {}, 0};
  std::map<int, ThresholdRow> table;
  auto consider = [&](const Graph& g, const std::string& note) {
    const int alpha = independence_number(g);
    DdmResult r = dd_m_exact(g);
    ScanRecord rec = detail::base_record(g, alpha, r);
    rec.note = note;
    if (r.k) rec.certificate_size = *r.k;
    if (r.status == DdmStatus::budget_exceeded)
      rep.counterexamples.push_back({rec.id, to_edge_list(g), "exact search over budget"});
    if (r.k && *r.k > alpha) rep.counterexamples.push_back({rec.id, to_edge_list(g), "ddm <= alpha for graphs with a swap set"});
    if (r.status == DdmStatus::infinite) {
      ThresholdRow& row = table[alpha];
      row.alpha = alpha;
      ++row.graphs_without_swap;
      if (rec.n >= row.largest_n_without_swap) {
        row.largest_n_without_swap = rec.n;
        row.witness = rec.id;
      }
    }
    rep.records.push_back(std::move(rec));
  };
  for (int n = 1; n <= scope_n; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) consider(g, "");
  consider(subdivided_doubled_triangle(), "subdivided doubled triangle");
  for (auto& [alpha, row] : table) rep.thresholds.push_back(row);
  return rep;
}

inline std::string scan_tsv(const ScanReport& rep) {
  std::ostringstream out;
  out << "id\tn\talpha\tgamma\tddm\tcertificate_size\tnote\n";
  for (const auto& r : rep.records) {
    out << r.id << '\t' << r.n << '\t' << r.alpha << '\t' << r.gamma << '\t';
    if (r.ddm)
      out << *r.ddm;
    else
      out << (r.status == DdmStatus::budget_exceeded ? "budget" : "infinity");
    out << '\t';
    if (r.certificate_size)
      out << *r.certificate_size;
    else
      out << '-';
    out << '\t' << (r.note.empty() ? "-" : r.note) << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const ScanReport& rep) {
  nlohmann::json j;
  j["scan"] = rep.name;
  j["n_range"] = {rep.min_n, rep.max_n};
  j["filter"] = rep.filter;
  j["graphs"] = rep.records.size();
  j["fallbacks"] = rep.fallbacks;
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& c : rep.counterexamples) ce.push_back({{"id", c.id}, {"claim", c.claim}, {"edge_list", c.edge_list}});
  j["counterexamples"] = std::move(ce);
  if (!rep.thresholds.empty()) {
    nlohmann::json th = nlohmann::json::array();
    for (const auto& t : rep.thresholds)
      th.push_back({{"alpha", t.alpha},
                    {"largest_n_without_swap", t.largest_n_without_swap},
                    {"graphs_without_swap", t.graphs_without_swap},
                    {"witness", t.witness}});
    j["thresholds"] = std::move(th);
  }
  return j;
}

} // namespace swapset
