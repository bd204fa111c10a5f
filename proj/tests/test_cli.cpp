#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(SWAPSET_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(p) << text;
  return p.string();
}

} // namespace

TEST(Cli, ComputePathOnFourVertices) {
  std::string p4 = temp_file("p4.edges", "4 3\n0 1\n1 2\n2 3\n");
  Outcome r = run("compute " + p4);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "finite");
  EXPECT_EQ(j["ddm"], 2);
  EXPECT_EQ(j["certificate"]["d"], nlohmann::json({0, 2}));
}

TEST(Cli, ComputeInfinityIsAString) {
  Outcome r = run("compute k1,3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["ddm"], "infinity");
}

TEST(Cli, BudgetExceeded) { EXPECT_EQ(run("--budget 1 compute grid:6x6").code, 3); }

TEST(Cli, StarProductFiveFour) {
  Outcome r = run("construct star-product 5 4");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 8);
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, ConstructOutputsRoundTripThroughVerify) {
  for (std::string what : {"star-product 3 2", "grid 12 9", "p3-strip 4", "product c4 k1,3"}) {
    std::string g = (std::filesystem::path(testing::TempDir()) / "rt.edges").string();
    std::string c = (std::filesystem::path(testing::TempDir()) / "rt.json").string();
    ASSERT_EQ(run("construct --graph-out " + g + " --cert-out " + c + " " + what).code, 0) << what;
    Outcome v = run("verify " + g + " " + c);
    EXPECT_EQ(v.code, 0) << what;
    EXPECT_EQ(nlohmann::json::parse(v.out)["valid"], true);
  }
}

TEST(Cli, VerifyRejectsBadCertificate) {
  std::string p4 = temp_file("p4b.edges", "4 3\n0 1\n1 2\n2 3\n");
  std::string bad = temp_file("bad.json", R"({"d":[0,1],"d_prime":[2,3],"matching":[[0,2],[1,3]]})");
  Outcome r = run("verify " + p4 + " " + bad);
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["valid"], false);
  EXPECT_NE(j["violation"], "none");
}

TEST(Cli, TreeReport) {
  Outcome r = run("tree p4");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["s_weight"], 2);
  EXPECT_EQ(j["weak"], true);
  EXPECT_EQ(j["four_way_equality"], true);
  EXPECT_EQ(nlohmann::json::parse(run("tree k1,3").out)["ddm"], "infinity");
}

TEST(Cli, GammaDpAndGridAscii) {
  Outcome g = run("gamma-dp 3 13");
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out)["gamma"], 10);
  Outcome a = run("construct grid 16 12 --ascii");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 12);
}

TEST(Cli, ScansAndReports) {
  Outcome s = run("scan alpha2 --max-n 5 --format tsv");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, 2), "id");
  EXPECT_EQ(run("scan alpha3 --max-n 6").code, 1);
  Outcome p = run("scan products --max-n 8 --format json");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(nlohmann::json::parse(p.out)["gamma_violations"], 0);
  Outcome rep = run("report grid --max-mn 9");
  EXPECT_EQ(rep.code, 0);
  EXPECT_EQ(rep.out.substr(0, rep.out.find('\n')), "m\tn\tswap_size\tmn_over_5\tbound\tgamma");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("compute").code, 2);
  EXPECT_EQ(run("compute /nonexistent/file").code, 2);
  EXPECT_EQ(run("construct grid 7 7").code, 2);
  EXPECT_EQ(run("scan nothing --max-n 4").code, 2);
  std::string broken = temp_file("broken.edges", "3 1\n0 7\n");
  EXPECT_EQ(run("compute " + broken).code, 2);
}

TEST(Cli, Deterministic) {
  for (std::string args : {"compute grid:4x4", "construct grid 10 9", "scan conjectures --max-n 5"}) EXPECT_EQ(run(args).out, run(args).out);
}
