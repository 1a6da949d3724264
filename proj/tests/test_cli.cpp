#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "support/oracles.hpp"

using namespace quandle;
using namespace quandle::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("quandle_cli_test_" + name)).string();
}

}  // namespace

TEST(Cli, PolynomialFromExpression) {
  const Result r = run({"poly", "P 3 (1 2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s^4t^4 + 2s^3t^4 + s^4t^2\n");
}

TEST(Cli, VerifyFixture) {
  const Result ok = run({"verify", data_path("quandles/T3.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "quandle: OK (order 3)\n");
  const Result bad = run({"verify", data_path("quandles/not_distributive.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("self-distributivity"), std::string::npos);
  const Result bad_json = run({"verify", data_path("quandles/not_idempotent.json"), "--json"});
  EXPECT_EQ(bad_json.code, 1);
  const Json j = Json::parse(bad_json.out);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["axiom"], "idempotence");
}

TEST(Cli, CohomologyOfLongCycle) {
  EXPECT_EQ(run({"cohomology", "P 3 (1 2 3)", "--degree", "2", "--coeff", "Z"}).out, "Z^2\n");
  EXPECT_EQ(run({"cohomology", "P 2 (1 2)", "--coeff", "Z2", "--rho", "(1 2)"}).out, "F^2\n");
  const Result j = run({"cohomology", "T 3", "--coeff", "Q", "--json"});
  EXPECT_EQ(Json::parse(j.out)["rank"], 6);
}

TEST(Cli, ShowMatchesJsonReader) {
  const Result text = run({"show", "R 3"});
  EXPECT_EQ(text.out, "0 2 1\n2 1 0\n1 0 2\n");
  const Result json = run({"show", data_path("quandles/R3.json"), "--json"});
  EXPECT_EQ(quandle_from_json(Json::parse(json.out)), dihedral(3));
}

TEST(Cli, MorphismCommands) {
  EXPECT_EQ(run({"iso", "P 4 (1 2)", "P 4 (3 4)"}).out.rfind("isomorphic: ", 0), 0u);
  EXPECT_EQ(run({"iso", "P 4 (1 2)", "P 4 (1 2 3)"}).out, "not isomorphic\n");
  EXPECT_EQ(run({"aut", "P 3 (1 2 3)"}).out.rfind("order: 3\ncyclic: yes\n", 0), 0u);
  EXPECT_EQ(run({"inn", "P 4 (1 2)(3 4)"}).out.rfind("order: 2\n", 0), 0u);
  EXPECT_EQ(Json::parse(run({"homs", "P 2 (1 2)", "P 2 (1 2)", "--json"}).out)["count"], 7);
  const std::string out = temp_path("hom.json");
  const Result h = run({"homquandle", "P 3 (1 2 3)", "P 3 (1 2 3)", "--out", out});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out.rfind("order: 13\n", 0), 0u);
  const Result verify = run({"verify", out});
  EXPECT_EQ(verify.out, "quandle: OK (order 13)\n");
  std::filesystem::remove(out);
  const Result nonabelian = run({"homquandle", "T 2", data_path("quandles/not_distributive.json")});
  EXPECT_EQ(nonabelian.code, 1);
}

TEST(Cli, GoodInvolutions) {
  EXPECT_EQ(run({"goodinv", "P 3 (1 2 3)"}).out, "none\n");
  const Result r = run({"goodinv", "P 2 (1 2)"});
  EXPECT_EQ(r.out, "()\n(1 2)\n");
}

TEST(Cli, LinkCommands) {
  const std::string hopf = data_path("links/hopf_pos.lnk");
  EXPECT_EQ(run({"color", hopf, "P 2 (1 2)"}).out.rfind("colorings: 5\n", 0), 0u);
  EXPECT_EQ(run({"lk", data_path("links/torus_2_4.lnk")}).out, "components: 2\n0 2\n2 0\n");
  EXPECT_EQ(run({"phi", data_path("links/torus_2_4.lnk"), "P 2 (1 2)", "--theta", "2"}).out, "5 + 4t^2\n");
  EXPECT_EQ(run({"phi", hopf, "P 2 (1 2)", "--theta", "3"}).code, 1);
}

TEST(Cli, SynthesizeRoundTrip) {
  const std::string out = temp_path("synth.lnk");
  const Result r = run({"synth", data_path("graphs/mixed4.json"), "--out", out, "--shuffle", "--seed", "9"});
  EXPECT_EQ(r.code, 0);
  const Result lk = run({"lk", out, "--json"});
  const LinkingGraph g = linking_graph_from_json(Json::parse(lk.out));
  EXPECT_EQ(g, linking_graph_from_json(Json::parse(read_text(data_path("graphs/mixed4.json")))));
  std::filesystem::remove(out);
  EXPECT_EQ(run({"synth", data_path("graphs/pair_lk2.json")}).out, run({"synth", data_path("graphs/pair_lk2.json")}).out);
}

TEST(Cli, QuiverDot) {
  const Result r = run({"quiver", data_path("links/hopf_pos.lnk"), "P 2 (1 2)", "--endos", "all", "--dot", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_text(std::string(QUANDLE_GOLDEN_DIR) + "/hopf_p3_end.dot"));
  EXPECT_EQ(run({"quiver", data_path("links/hopf_pos.lnk"), "P 2 (1 2)", "--endos", "identity"}).out,
            "vertices: 5\nedges: 5\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"cohomology", "T 3", "--degree", "7"}).code, 2);
  EXPECT_EQ(run({"phi", data_path("links/hopf_pos.lnk"), "P 2 (1 2)"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"show", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run({"show", "P 3 (1 4)"}).code, 1);
  EXPECT_EQ(run({"cohomology", "P 3 (1 2 3)", "--rho", "(1 2)"}).code, 1);
  EXPECT_EQ(run({"cohomology", "T 3", "--coeff", "Z4"}).code, 1);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"homs", "P 3 (1 2 3)", "R 3"};
  EXPECT_EQ(run(args).out, run(args).out);
}
