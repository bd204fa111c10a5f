// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "swapset/enumerate.hpp"
#include "swapset/exact.hpp"
#include "swapset/grid.hpp"
#include "swapset/product.hpp"
#include "swapset/small_alpha.hpp"
#include "swapset/tree.hpp"

using namespace swapset;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  std::string transcript; // everything the criterion computed, for the determinism check
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string show(const DdmResult& r) {
  if (r.status == DdmStatus::budget_exceeded) return "budget";
  return r.k ? std::to_string(*r.k) : "infinity";
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.note = why;
  else if (o.note.size() < 200) o.note += "; " + why;
  o.pass = false;
}

// --- 1 ----------------------------------------------------------------------

Outcome known_constants() {
  Outcome o;
  struct Case {
    std::string name;
    Graph g;
    std::optional<int> expect;
  };
  std::vector<Case> cases{{"P4", path_graph(4), 2},
                          {"K1,3", star_graph(3), std::nullopt},
                          {"C4", cycle_graph(4), 2},
                          {"subdivided doubled K3", subdivided_doubled_triangle(), std::nullopt}};
  const Graph& tri = cases.back().g;
  if (tri.order() != 9 || independence_number(tri) != 6 || oracle::alpha(tri) != 6) fail(o, "subdivided doubled K3 is not the 9-vertex alpha=6 graph");
  for (const auto& c : cases) {
    DdmResult r = dd_m_exact(c.g);
    o.transcript += c.name + " " + show(r) + "\n";
    if (r.status == DdmStatus::budget_exceeded || r.k != c.expect)
      fail(o, c.name + ": expected " + (c.expect ? std::to_string(*c.expect) : "infinity") + ", got " + show(r));
    if (r.certificate && !verify_certificate(c.g, *r.certificate)) fail(o, c.name + ": certificate does not verify");
  }
  return o;
}

// --- 2 ----------------------------------------------------------------------

Outcome star_products() {
  Outcome o;
  int checked = 0;
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= p && p + q <= 6; ++q) {
      const int expect = std::max(2, p + q - 1);
      StarProductSwap s = star_product_swap(p, q);
      DdmResult r = dd_m_exact(s.product.graph);
      o.transcript += std::to_string(p) + "," + std::to_string(q) + " " + show(r) + " " + to_json(s.certificate).dump() + "\n";
      if (r.k != expect) fail(o, "K1," + std::to_string(p) + " x K1," + std::to_string(q) + ": exact " + show(r));
      if (!verify_certificate(s.product.graph, s.certificate) || static_cast<int>(s.certificate.size()) != expect)
        fail(o, "star_product_swap(" + std::to_string(p) + "," + std::to_string(q) + ") wrong");
      ++checked;
    }
  if (o.pass) o.note = std::to_string(checked) + " (p,q) pairs";
  return o;
}

// --- 3 ----------------------------------------------------------------------

Outcome trees() {
  Outcome o;
  const auto all = nontrivial_trees_up_to(10);
  std::size_t weak = 0;
  for (const Graph& t : all) {
    const std::string id = tree_code(t);
    const bool is_weak = is_weak_tree(t);
    weak += is_weak;
    SearchOptions plain;
    plain.strong_shortcut = false;
    DdmResult searched = dd_m_search(t, plain);
    if (searched.finite() != is_weak) fail(o, "(a) " + id);

    const WeightedPartition w = s_weight(t);
    if (w.weight != star_partition_weight_oracle(t).weight) fail(o, "(c) " + id);
    const WeakReduction red = weak_reduction(t);
    const int s_red = s_weight(red.reduced).weight;
    if (w.weight != s_red + static_cast<int>(red.removed.size())) fail(o, "(d) " + id);

    DdmResult exact = dd_m_exact(t);
    if (is_weak) {
      DdmResult viatree = dd_m_tree(t);
      if (viatree.k != exact.k || exact.k != w.weight) fail(o, "(b) " + id);
    }
    const int alpha = oracle::alpha(t);
    const int n = static_cast<int>(t.order());
    const bool reduced_balanced = 2 * s_red == static_cast<int>(red.reduced.order());
    if (reduced_balanced != (alpha == w.weight) || alpha_equals_eviction(t) != (alpha == w.weight)) fail(o, "(e) alpha = S " + id);
    const bool weak_and_half = is_weak && 2 * w.weight == n;
    const bool alpha_is_ddm = exact.k && *exact.k == alpha;
    if (weak_and_half != alpha_is_ddm || alpha_equals_ddm(t) != alpha_is_ddm) fail(o, "(e) alpha = DD_m " + id);
    if (is_weak && (!exact.k || *exact.k > alpha)) fail(o, "(f) " + id);
    o.transcript += id + " " + std::to_string(w.weight) + " " + show(exact) + " " + std::to_string(alpha) + "\n";
  }
  if (o.pass) o.note = std::to_string(all.size()) + " trees, " + std::to_string(weak) + " weak";
  return o;
}

// --- 4 ----------------------------------------------------------------------

Outcome grids() {
  Outcome o;
  int count = 0, max_changes = 0;
  for (int n = 8; n <= 30; ++n)
    for (int m = n; m <= 30; ++m) {
      const std::string tag = std::to_string(m) + "x" + std::to_string(n);
      try {
        GridSwap g = grid_swap_construct(m, n);
        ++count;
        max_changes = std::max(max_changes, g.repair_changes);
        o.transcript += tag + " " + std::to_string(g.certificate.size()) + "\n" + g.board.render();
        if (!verify_certificate(g.graph, g.certificate)) fail(o, tag + " does not verify");
        if (static_cast<long long>(g.certificate.size()) > grid_swap_bound(m, n)) fail(o, tag + " over bound");
        if (m == 16 && n == 12 && g.certificate.size() > 53) fail(o, "16x12 larger than 53");
      } catch (const ConstructionError& e) {
        fail(o, tag + ": " + e.what());
      }
    }
  if (o.pass) o.note = std::to_string(count) + " grids, 16x12 size " + std::to_string(grid_swap_construct(16, 12).certificate.size());
  return o;
}

// --- 5 ----------------------------------------------------------------------

Outcome strips() {
  Outcome o;
  for (int k = 3; k <= 25; ++k) {
    StripSwap s = p3_strip_swap(k);
    const int gamma = gamma_grid_dp(3, 4 * k + 1);
    o.transcript += std::to_string(k) + " " + std::to_string(s.certificate.size()) + " " + std::to_string(gamma) + "\n";
    if (!verify_certificate(s.graph, s.certificate) || static_cast<int>(s.certificate.size()) != 3 * k + 2)
      fail(o, "k=" + std::to_string(k) + " size " + std::to_string(s.certificate.size()));
    if (gamma != 3 * k + 1) fail(o, "k=" + std::to_string(k) + " gamma " + std::to_string(gamma));
  }
  if (o.pass) o.note = "k = 3..25";
  return o;
}

// --- 6 ----------------------------------------------------------------------

Outcome perfect_domination() {
  Outcome o;
  long long violations = 0;
  for (int t = 0; t <= 4; ++t)
    for (long long x = -25; x < 25; ++x)
      for (long long y = -25; y < 25; ++y) {
        int hits = perfect_dom_member(x, y, t) + perfect_dom_member(x - 1, y, t) + perfect_dom_member(x + 1, y, t) +
                   perfect_dom_member(x, y - 1, t) + perfect_dom_member(x, y + 1, t);
        violations += hits != 1;
      }
  o.transcript = std::to_string(violations);
  if (violations) fail(o, std::to_string(violations) + " vertices not dominated exactly once");
  else o.note = "5 x 2500 vertices";
  return o;
}

// --- 7 ----------------------------------------------------------------------

Outcome small_alpha() {
  Outcome o;
  ScanReport a2 = alpha2_scan(8), a3 = alpha3_bound_check(8), cj = conjecture_scan(8);
  o.transcript = scan_tsv(a2) + scan_tsv(a3) + scan_tsv(cj) + to_json(a2).dump() + to_json(a3).dump() + to_json(cj).dump();

  if (!a2.counterexamples.empty()) fail(o, "alpha=2 construction: " + std::to_string(a2.counterexamples.size()) + " counterexamples");
  std::size_t bound = 0, existence = 0, strong = 0;
  for (const auto& c : a3.counterexamples) {
    if (c.claim == "alpha3 swap set exists for n >= 6") {
      ++existence;
      strong += is_strong_graph(parse_graph(c.edge_list));
    } else {
      ++bound;
    }
  }
  if (bound) fail(o, "alpha=3 bound: " + std::to_string(bound) + " counterexamples");
  if (existence)
    fail(o, "alpha=3 existence: " + std::to_string(existence) + " alpha=3 graphs with n>=6 have no swap set (" + std::to_string(strong) +
                " of them strong, e.g. " + a3.counterexamples.front().id + ")");
  if (!cj.counterexamples.empty()) fail(o, "DD_m <= alpha: " + std::to_string(cj.counterexamples.size()) + " counterexamples");
  if (o.pass) o.note = std::to_string(cj.records.size()) + " graphs scanned";
  return o;
}

// --- 8 ----------------------------------------------------------------------

Outcome products() {
  Outcome o;
  std::vector<std::vector<Graph>> by_order(9);
  for (int n = 2; n <= 8; ++n) by_order[static_cast<std::size_t>(n)] = enumerate_connected_graphs(n);
  std::size_t pairs = 0;
  std::ostringstream sizes;
  for (int a = 2; a <= 8; ++a)
    for (int b = a; b <= 8 && a * b <= 24; ++b) {
      const auto& left = by_order[static_cast<std::size_t>(a)];
      const auto& right = by_order[static_cast<std::size_t>(b)];
      for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = a == b ? i : 0; j < right.size(); ++j) {
          ++pairs;
          try {
            ProductSwap s = product_swap_general(left[i], right[j]);
            sizes << s.certificate.size() << ' ';
            if (!verify_certificate(s.product.graph, s.certificate)) fail(o, graph6(left[i]) + " x " + graph6(right[j]));
          } catch (const ConstructionError& e) {
            fail(o, e.what());
          }
        }
    }
  ProductScan scan = product_question_scan(24);
  o.transcript = sizes.str() + "\n" + product_scan_tsv(scan);
  if (scan.gamma_violations) fail(o, std::to_string(scan.gamma_violations) + " gamma*gamma violations");
  if (scan.budget_exceeded) fail(o, std::to_string(scan.budget_exceeded) + " products over budget");
  if (o.pass)
    o.note = std::to_string(pairs) + " factor pairs; scan: 0 gamma*gamma and " + std::to_string(scan.min_violations) +
             " min-expression violations";
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "known constants", 1.0, known_constants},
      {2, "star products", 120.0, star_products},
      {3, "trees up to 10 vertices", 300.0, trees},
      {4, "grids 8 <= n <= m <= 30", 60.0, grids},
      {5, "P3 strips", 60.0, strips},
      {6, "perfect domination window", 1.0, perfect_domination},
      {7, "small independence number up to 8 vertices", 1800.0, small_alpha},
      {8, "products up to 24 vertices", 600.0, products},
  };
  const double determinism_limit = 2 * (1.0 + 120 + 300 + 60 + 60 + 1 + 1800 + 600);

  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };

  bool all_pass = true;
  std::vector<std::uint64_t> digests;
  for (const auto& c : criteria) {
    auto t0 = clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    const double took = seconds(t0, clock::now());
    if (took > c.limit_seconds) fail(o, "time limit exceeded");
    digests.push_back(fnv1a(o.transcript));
    all_pass = all_pass && o.pass;
    std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title.c_str(), took,
                c.limit_seconds, o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }

  auto t0 = clock::now();
  Outcome det;
  std::size_t matched = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string transcript;
    try {
      transcript = criteria[i].run().transcript;
    } catch (const std::exception& e) {
      transcript = std::string("exception: ") + e.what();
    }
    if (fnv1a(transcript) == digests[i]) ++matched;
    else fail(det, "criterion " + std::to_string(criteria[i].id) + " output differs between runs");
  }
  const double took = seconds(t0, clock::now());
  if (took > determinism_limit) fail(det, "time limit exceeded");
  if (det.pass) det.note = std::to_string(matched) + " criterion outputs identical on rerun";
  all_pass = all_pass && det.pass;
  std::printf("criterion 9: %s  determinism (%.2f s, limit %.0f s)%s%s\n", det.pass ? "PASS" : "FAIL", took, determinism_limit,
              det.note.empty() ? "" : ": ", det.note.c_str());
  return all_pass ? 0 : 1;
}
