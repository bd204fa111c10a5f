#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "swapset/errors.hpp"
#include "swapset/graph.hpp"
#include "swapset/matching.hpp"
#include "swapset/parameters.hpp"
#include "swapset/vertex_set.hpp"

namespace swapset {

/// Claim that DD_m(G) <= |d|: disjoint dominating sets d, d_prime and a
/// perfect matching between them (d-side endpoint first in each pair).
struct SwapCertificate {
  VertexSet d;
  VertexSet d_prime;
  Matching matching;

  std::size_t size() const { return d.count(); }

  friend bool operator==(const SwapCertificate&, const SwapCertificate&) = default;
};

enum class Violation {
  none,
  wrong_graph,
  vertex_out_of_range,
  size_mismatch,
  not_disjoint,
  pair_not_edge,
  pair_wrong_sides,
  vertex_matched_twice,
  vertex_unmatched,
  d_not_dominating,
  d_prime_not_dominating,
};

inline std::string_view to_string(Violation v) {
  switch (v) {
  case Violation::none: return "none";
  case Violation::wrong_graph: return "wrong_graph";
  case Violation::vertex_out_of_range: return "vertex_out_of_range";
  case Violation::size_mismatch: return "size_mismatch";
  case Violation::not_disjoint: return "not_disjoint";
  case Violation::pair_not_edge: return "pair_not_edge";
  case Violation::pair_wrong_sides: return "pair_wrong_sides";
  case Violation::vertex_matched_twice: return "vertex_matched_twice";
  case Violation::vertex_unmatched: return "vertex_unmatched";
  case Violation::d_not_dominating: return "d_not_dominating";
  case Violation::d_prime_not_dominating: return "d_prime_not_dominating";
  }
  return "unknown";
}

struct Verdict {
  Violation violation = Violation::none;
  std::string detail;

  bool ok() const noexcept { return violation == Violation::none; }
  explicit operator bool() const noexcept { return ok(); }
};

inline Verdict verify_certificate(const Graph& g, const SwapCertificate& c) {
  auto fail = [](Violation v, std::string detail = {}) { return Verdict{v, std::move(detail)}; };
  if (c.d.universe() != g.order() || c.d_prime.universe() != g.order())
    return fail(Violation::wrong_graph, "certificate universe differs from graph order");
  const std::size_t k = c.d.count();
  if (c.d_prime.count() != k || c.matching.pairs.size() != k)
    return fail(Violation::size_mismatch, "|d|=" + std::to_string(k) + " |d'|=" + std::to_string(c.d_prime.count()) +
                                              " |M|=" + std::to_string(c.matching.pairs.size()));
  if (c.d.intersects(c.d_prime)) return fail(Violation::not_disjoint);

  std::set<Vertex> used;
  for (auto [u, v] : c.matching.pairs) {
    std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g.order() || static_cast<std::size_t>(v) >= g.order())
      return fail(Violation::vertex_out_of_range, pair);
    if (!c.d.contains(u) || !c.d_prime.contains(v)) return fail(Violation::pair_wrong_sides, pair);
    if (!g.adjacent(u, v)) return fail(Violation::pair_not_edge, pair);
    if (!used.insert(u).second || !used.insert(v).second) return fail(Violation::vertex_matched_twice, pair);
  }
  // With |pairs| = k and no repeats every member of d and d' is covered; the
  // check stays for clarity of the reported reason.
  if (used.size() != 2 * k) return fail(Violation::vertex_unmatched);
  if (!is_dominating(g, c.d)) return fail(Violation::d_not_dominating);
  if (!is_dominating(g, c.d_prime)) return fail(Violation::d_prime_not_dominating);
  return {};
}

/// The same certificate with the roles of d and d_prime exchanged.
inline SwapCertificate swapped(const SwapCertificate& c) {
  SwapCertificate s{c.d_prime, c.d, {}};
  for (auto [u, v] : c.matching.pairs) s.matching.pairs.emplace_back(v, u);
  std::sort(s.matching.pairs.begin(), s.matching.pairs.end());
  return s;
}

/// Builds a certificate from explicit pairs (d-side first).
inline SwapCertificate certificate_from_pairs(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  SwapCertificate c{VertexSet(n), VertexSet(n), {}};
  for (auto [u, v] : pairs) {
    c.d.insert(u);
    c.d_prime.insert(v);
  }
  std::sort(pairs.begin(), pairs.end());
  c.matching.pairs = std::move(pairs);
  return c;
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::json to_json(const SwapCertificate& c) {
  nlohmann::json j;
  j["d"] = c.d.members();
  j["d_prime"] = c.d_prime.members();
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [u, v] : c.matching.pairs) pairs.push_back({u, v});
  j["matching"] = std::move(pairs);
  return j;
}

/// Raised for certificates that cannot even be represented against the
/// host graph; `violation()` is the reason reported to callers.
class CertificateFormatError : public std::runtime_error {
public:
  CertificateFormatError(Violation v, const std::string& what) : std::runtime_error(what), violation_(v) {}
  Violation violation() const noexcept { return violation_; }

private:
  Violation violation_;
};

inline SwapCertificate certificate_from_json(const nlohmann::json& j, std::size_t n) {
  auto read_list = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array())
      throw CertificateFormatError(Violation::none, std::string("certificate lacks array \"") + key + "\"");
    std::vector<Vertex> out;
    for (const auto& x : j[key]) {
      if (!x.is_number_integer()) throw CertificateFormatError(Violation::none, "non-integer vertex");
      long long v = x.get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw CertificateFormatError(Violation::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
      out.push_back(static_cast<Vertex>(v));
    }
    return out;
  };
  auto d = read_list("d");
  auto dp = read_list("d_prime");
  if (!j.contains("matching") || !j["matching"].is_array())
    throw CertificateFormatError(Violation::none, "certificate lacks array \"matching\"");
  SwapCertificate c{VertexSet(n, d), VertexSet(n, dp), {}};
  if (c.d.count() != d.size() || c.d_prime.count() != dp.size())
    throw CertificateFormatError(Violation::vertex_matched_twice, "repeated vertex in d or d_prime");
  for (const auto& p : j["matching"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw CertificateFormatError(Violation::none, "matching entries must be [u, v]");
    c.matching.pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
  }
  return c;
}

} // namespace swapset
