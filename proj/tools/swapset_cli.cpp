// Command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 verification failed / counterexample, 2 usage or
// input error, 3 search budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "swapset/certificate.hpp"
#include "swapset/exact.hpp"
#include "swapset/graph.hpp"
#include "swapset/grid.hpp"
#include "swapset/product.hpp"
#include "swapset/small_alpha.hpp"
#include "swapset/tree.hpp"

using nlohmann::json;
using namespace swapset;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// pN, cN, k1,N, grid:MxN, otherwise an edge-list file.
Graph load_graph(const std::string& spec) {
  std::smatch m;
  static const std::regex path_re(R"(p(\d+))"), cycle_re(R"(c(\d+))"), star_re(R"(k1,(\d+))"),
      grid_re(R"(grid:(\d+)x(\d+))");
  auto num = [](const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); };
  if (std::regex_match(spec, m, path_re)) return path_graph(num(m[1]));
  if (std::regex_match(spec, m, cycle_re)) return cycle_graph(num(m[1]));
  if (std::regex_match(spec, m, star_re)) return star_graph(num(m[1]));
  if (std::regex_match(spec, m, grid_re)) return grid_graph(num(m[1]), num(m[2]));
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open graph file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

json ddm_value(const std::optional<int>& k) { return k ? json(*k) : json("infinity"); }

void write_file(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

struct ConstructOut {
  std::string graph_out;
  std::string cert_out;
};

int finish_construct(const Graph& g, const SwapCertificate& c, json extra, const ConstructOut& files) {
  Verdict v = verify_certificate(g, c);
  extra["n"] = g.order();
  extra["m"] = g.size();
  extra["size"] = c.size();
  extra["verified"] = v.ok();
  extra["certificate"] = to_json(c);
  write_file(files.graph_out, to_edge_list(g));
  write_file(files.cert_out, to_json(c).dump(2) + "\n");
  emit(extra);
  return v.ok() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swap sets and the swap number DD_m of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = default_node_budget;
  app.add_option("--budget", budget, "node budget for exact searches")->check(CLI::PositiveNumber);

  std::string graph_a, graph_b, cert_path;

  auto* compute = app.add_subcommand("compute", "exact DD_m of a graph");
  compute->add_option("graph", graph_a, "edge-list file or generator (pN, cN, k1,N, grid:MxN)")->required();

  auto* verify = app.add_subcommand("verify", "check a swap certificate against a graph");
  verify->add_option("graph", graph_a)->required();
  verify->add_option("certificate", cert_path, "certificate JSON")->required();

  auto* tree = app.add_subcommand("tree", "tree parameters: S(T), weak reduction, DD_m");
  tree->add_option("graph", graph_a)->required();

  ConstructOut files;
  auto* construct = app.add_subcommand("construct", "explicit swap-set constructions");
  construct->require_subcommand(1);
  construct->add_option("--graph-out", files.graph_out, "write the host graph as an edge list");
  construct->add_option("--cert-out", files.cert_out, "write the certificate as JSON");
  int p = 0, q = 0, gm = 0, gn = 0, k = 0;
  bool ascii = false;
  auto* c_star = construct->add_subcommand("star-product", "K_{1,p} x K_{1,q}");
  c_star->add_option("p", p)->required();
  c_star->add_option("q", q)->required();
  auto* c_grid = construct->add_subcommand("grid", "token construction on the m x n grid (m >= n >= 8)");
  c_grid->add_option("m", gm)->required();
  c_grid->add_option("n", gn)->required();
  c_grid->add_flag("--ascii", ascii, "print the token board instead of JSON");
  auto* c_strip = construct->add_subcommand("p3-strip", "P3 x P_{4k+1}");
  c_strip->add_option("k", k)->required();
  auto* c_prod = construct->add_subcommand("product", "G x H via spanning trees");
  c_prod->add_option("left", graph_a, "first factor")->required();
  c_prod->add_option("right", graph_b, "second factor")->required();

  int rows = 0, cols = 0;
  auto* gamma = app.add_subcommand("gamma-dp", "domination number of a grid (rows <= 8)");
  gamma->add_option("rows", rows)->required();
  gamma->add_option("cols", cols)->required();

  std::string scan_kind, format = "json";
  int max_n = 0;
  auto* scan = app.add_subcommand("scan", "exhaustive scans over small connected graphs");
  scan->add_option("kind", scan_kind)->required()->check(CLI::IsMember({"alpha2", "alpha3", "conjectures", "products"}));
  scan->add_option("--max-n", max_n, "largest order (for products: largest product order)")->required();
  scan->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  std::string report_kind;
  int max_mn = 0;
  auto* report = app.add_subcommand("report", "tabulated reports");
  report->add_option("kind", report_kind)->required()->check(CLI::IsMember({"grid"}));
  report->add_option("--max-mn", max_mn)->required();
  std::string report_format = "tsv";
  report->add_option("--format", report_format)->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*compute) {
      Graph g = load_graph(graph_a);
      DdmResult r = dd_m_exact(g, budget);
      json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
      if (r.status == DdmStatus::budget_exceeded) {
        emit(j);
        return exit_budget;
      }
      j["ddm"] = ddm_value(r.k);
      if (r.certificate) j["certificate"] = to_json(*r.certificate);
      emit(j);
      return exit_ok;
    }

    if (*verify) {
      Graph g = load_graph(graph_a);
      std::ifstream in(cert_path);
      if (!in) throw UsageError("cannot open certificate '" + cert_path + "'");
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("certificate is not JSON: ") + e.what());
      }
      if (doc.is_object() && doc.contains("certificate")) doc = doc["certificate"];
      Verdict v;
      try {
        v = verify_certificate(g, certificate_from_json(doc, g.order()));
      } catch (const CertificateFormatError& e) {
        Violation why = e.violation() == Violation::none ? Violation::wrong_graph : e.violation();
        v = Verdict{why, e.what()};
      }
      json j{{"valid", v.ok()}, {"violation", to_string(v.violation)}};
      if (!v.detail.empty()) j["detail"] = v.detail;
      emit(j);
      return v.ok() ? exit_ok : exit_failed;
    }

    if (*tree) {
      Graph t = load_graph(graph_a);
      WeightedPartition w = s_weight(t);
      WeakReduction red = weak_reduction(t);
      DdmResult d = dd_m_tree(t);
      json removed = json::array();
      for (auto [stem, leaf] : red.removed) removed.push_back({stem, leaf});
      json j{{"n", t.order()},
             {"weak", is_weak_tree(t)},
             {"s_weight", w.weight},
             {"partition", to_json(w.partition)},
             {"weak_reduction", {{"order", red.reduced.order()}, {"removed", removed}, {"embedding", red.embedding}}},
             {"ddm", ddm_value(d.k)},
             {"four_way_equality", four_way_equality(t)},
             {"alpha_equals_ddm", alpha_equals_ddm(t)},
             {"alpha_equals_eviction", alpha_equals_eviction(t)}};
      if (d.certificate) j["certificate"] = to_json(*d.certificate);
      emit(j);
      return exit_ok;
    }

    if (*construct) {
      if (*c_star) {
        StarProductSwap s = star_product_swap(p, q);
        return finish_construct(s.product.graph, s.certificate, {{"construction", "star-product"}, {"p", p}, {"q", q}}, files);
      }
      if (*c_grid) {
        GridSwap s = grid_swap_construct(gm, gn);
        if (ascii) {
          write_file(files.graph_out, to_edge_list(s.graph));
          write_file(files.cert_out, to_json(s.certificate).dump(2) + "\n");
          std::cout << s.board.render();
          return exit_ok;
        }
        json extra{{"construction", "grid"},
                   {"columns", gm},
                   {"rows", gn},
                   {"bound", grid_swap_bound(gm, gn)},
                   {"repaired_corners", s.repaired_corners}};
        return finish_construct(s.graph, s.certificate, extra, files);
      }
      if (*c_strip) {
        StripSwap s = p3_strip_swap(k);
        return finish_construct(s.graph, s.certificate, {{"construction", "p3-strip"}, {"k", k}}, files);
      }
      ProductSwap s = product_swap_general(load_graph(graph_a), load_graph(graph_b));
      return finish_construct(s.product.graph, s.certificate, {{"construction", "product"}, {"formula_bound", s.formula_bound}}, files);
    }

    if (*gamma) {
      emit({{"rows", rows}, {"cols", cols}, {"gamma", gamma_grid_dp(rows, cols)}});
      return exit_ok;
    }

    if (*scan) {
      if (scan_kind == "products") {
        ProductScan s = product_question_scan(max_n, budget);
        if (format == "tsv") {
          std::cout << product_scan_tsv(s);
        } else {
          emit({{"scan", "products"},
                {"max_vertices", max_n},
                {"pairs", s.rows.size()},
                {"gamma_violations", s.gamma_violations},
                {"min_violations", s.min_violations},
                {"budget_exceeded", s.budget_exceeded}});
        }
        if (s.budget_exceeded) return exit_budget;
        return s.gamma_violations + s.min_violations ? exit_failed : exit_ok;
      }
      ScanReport rep = scan_kind == "alpha2"   ? alpha2_scan(max_n)
                       : scan_kind == "alpha3" ? alpha3_bound_check(max_n)
                                               : conjecture_scan(max_n);
      if (format == "tsv")
        std::cout << scan_tsv(rep);
      else
        emit(to_json(rep));
      return rep.counterexamples.empty() ? exit_ok : exit_failed;
    }

    if (*report) {
      auto rows_out = grid_density_report(max_mn);
      if (report_format == "json") {
        json arr = json::array();
        for (const auto& r : rows_out) {
          json row{{"m", r.m}, {"n", r.n}, {"size", r.size}, {"mn_over_5", r.mn_over_5}, {"bound", r.bound}};
          row["gamma"] = r.gamma >= 0 ? json(r.gamma) : json(nullptr);
          arr.push_back(row);
        }
        emit(arr);
      } else {
        std::cout << density_report_tsv(rows_out);
      }
      return exit_ok;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ContractError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}
