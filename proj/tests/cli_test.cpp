#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "torext/cli.hpp"
#include "torext/oracle.hpp"
#include "torext/serialize.hpp"

using namespace torext;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("torext_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << j.dump();
    return p.string();
  }

  Outcome run(const std::string& args) {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = std::string(TOREXT_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

const json kExample4Config = json::parse(R"({"q_genus":1,"components":[{"genus":1,"boundary_count":4}]})");

json example4_word_json(long m) {
  const HomologyModel model = HomologyModel::build(example4_config());
  return to_json(example4_word(model, m));
}

}  // namespace

TEST_F(CliTest, AnalyzeEmptyWord) {
  const Outcome r = run("analyze --config " + write("c.json", kExample4Config) + " --word " +
                    write("w.json", json::parse(R"({"factors":[]})")));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  for (const char* key : {"weakly_torelli", "symmetric", "completely_reducible", "extension_by_identity_torelli",
                          "extendable_to_torelli"})
    EXPECT_TRUE(j[key].get<bool>()) << key;
  EXPECT_EQ(j["multitwist_correctable"]["exponents"], json::parse("[0,0,0,0]"));
  EXPECT_EQ(j["delta"]["matrix"], json::parse("[[0,0,0],[0,0,0],[0,0,0]]"));
}

TEST_F(CliTest, AnalyzeExample4Fixture) {
  const Outcome r =
      run("analyze --config " + write("c.json", kExample4Config) + " --word " + write("w.json", example4_word_json(1)));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["weakly_torelli"].get<bool>());
  EXPECT_TRUE(j["symmetric"].get<bool>());
  EXPECT_TRUE(j["completely_reducible"].get<bool>());
  EXPECT_TRUE(j["extendable_to_torelli"].get<bool>());
  EXPECT_FALSE(j["extension_by_identity_torelli"].get<bool>());
  EXPECT_TRUE(j["multitwist_correctable"].is_null());
  EXPECT_EQ(j["component_matrices"]["0"], json::parse("[[0,0,0],[0,1,1],[0,1,1]]"));
}

TEST_F(CliTest, TextAndJsonVerdictsAgree) {
  const std::string c = write("c.json", kExample4Config);
  const std::string w = write("w.json", example4_word_json(3));
  const Outcome js = run("analyze --config " + c + " --word " + w);
  const Outcome tx = run("analyze --config " + c + " --word " + w + " --format text");
  ASSERT_EQ(js.code, 0);
  ASSERT_EQ(tx.code, 0);
  const json j = json::parse(js.out);
  for (const char* key : {"weakly_torelli", "symmetric", "completely_reducible", "extension_by_identity_torelli",
                          "extendable_to_torelli"}) {
    const std::string line = std::string(key) + ": " + (j[key].get<bool>() ? "true" : "false") + "\n";
    EXPECT_NE(tx.out.find(line), std::string::npos) << line;
  }
  EXPECT_NE(tx.out.find("multitwist_correctable: none"), std::string::npos);
}

TEST_F(CliTest, AnalyzeAmbientFactorExits3) {
  json w = example4_word_json(1);
  w["factors"][0]["locus"] = "S";
  const Outcome r = run("analyze --config " + write("c.json", kExample4Config) + " --word " + write("w.json", w));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("factors[0]"), std::string::npos) << r.err;
}

TEST_F(CliTest, ParseErrorsExit2) {
  const std::string w = write("w.json", json::parse(R"({"factors":[]})"));
  EXPECT_EQ(run("analyze --config /nonexistent.json --word " + w).code, 2);
  const Outcome bad = run("analyze --config " + write("c.json", json::parse(R"({"q_genus":1})")) + " --word " + w);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("components"), std::string::npos) << bad.err;
  EXPECT_EQ(run("analyze --config " + write("c2.json", json::parse(R"({"q_genus":0,"components":[]})")) +
                " --word " + w)
                .code,
            2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("example4 --m 0").code, 2);
  EXPECT_EQ(run("example4 --m x").code, 2);
  EXPECT_EQ(run("check --trials 0").code, 2);
  EXPECT_EQ(run("check --bounds q=1").code, 2);
}

TEST_F(CliTest, DimensionMismatchExits3) {
  const Outcome r = run("analyze --config " + write("c.json", kExample4Config) + " --word " +
                    write("w.json", json::parse(R"({"factors":[{"class":[1,0],"exponent":1,"locus":"Q"}]})")));
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, RealizeZeroDeltaGivesEmptyWord) {
  const Outcome r = run("realize --config " + write("c.json", kExample4Config) + " --delta " +
                    write("d.json", json::parse(R"({"blocks":{}})")));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"factors":[]})"));
}

TEST_F(CliTest, RealizeIntervalBlock) {
  const std::string c = write("c.json", json::parse(R"({"q_genus":0,"components":[{"genus":0,"boundary_count":3}]})"));
  const Outcome r = run("realize --config " + c + " --delta " + write("d.json", json::parse(R"({"blocks":{"0":[[1,1],[1,1]]}})")));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["factors"].size(), 1u);
  EXPECT_EQ(j["factors"][0]["exponent"], 1);
  EXPECT_EQ(j["factors"][0]["locus"], "Q");
  const HomologyModel m = HomologyModel::build({0, {{0, 3}}});
  EXPECT_EQ(j["factors"][0]["class"], to_json((m.circle_class(0, 1) + m.circle_class(0, 2)).coords()));
  const Outcome comp = run("realize --companion --config " + c + " --delta " + (dir_ / "d.json").string());
  ASSERT_EQ(comp.code, 0);
  EXPECT_EQ(json::parse(comp.out)["factors"].size(), 2u);
}

TEST_F(CliTest, RealizeErrorsExit4And5) {
  const std::string c3 = write("c3.json", json::parse(R"({"q_genus":0,"components":[{"genus":0,"boundary_count":3}]})"));
  EXPECT_EQ(run("realize --config " + c3 + " --delta " + write("a.json", json::parse(R"({"blocks":{"0":[[0,1],[0,0]]}})")))
                .code,
            4);
  const std::string c22 = write(
      "c22.json",
      json::parse(R"({"q_genus":0,"components":[{"genus":0,"boundary_count":2},{"genus":0,"boundary_count":2}]})"));
  EXPECT_EQ(
      run("realize --config " + c22 + " --delta " + write("x.json", json::parse(R"({"matrix":[[0,1],[1,0]]})"))).code,
      5);
}

TEST_F(CliTest, Ranks) {
  const Outcome r = run("ranks --config " + write("c.json", kExample4Config));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"rank_K0":3,"rank_H1bar":3,"rank_Dc":6})"));
}

TEST_F(CliTest, CheckOneTrial) {
  const Outcome r = run("check --trials 1 --seed 9");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.size(), invariant_names().size());
  for (const auto& rep : j) EXPECT_EQ(rep["trials"], 1);
}

TEST_F(CliTest, CheckSelectedInvariantAndBounds) {
  const Outcome r = run("check --trials 5 --bounds h=1,hj=0,nj=3,r=2,m=2 --invariant mapping.symmetry");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["invariant"], "mapping.symmetry");
  EXPECT_EQ(run("check --invariant nope").code, 2);
}

TEST_F(CliTest, Example4NullCorrection) {
  const Outcome r = run("example4 --m 2");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["multitwist_correctable"].is_null());
  EXPECT_TRUE(j["extendable_to_torelli"].get<bool>());
}

TEST_F(CliTest, RealizeAnalyzeRoundTrip) {
  TrialPlan plan;
  plan.seed = 2024;
  plan.bounds = {1, 1, 4, 2};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const SubsurfaceConfig config = random_config(plan, i);
    const HomologyModel model = HomologyModel::build(config);
    auto rng = trial_rng(plan.seed, i, 3);
    const DifferenceMap delta = random_symmetric_reducible_delta(model, 3, rng);
    const std::string c = write("c.json", to_json(config));
    const Outcome real = run("realize --config " + c + " --delta " + write("d.json", to_json(delta)));
    ASSERT_EQ(real.code, 0) << real.err;
    write("w.json", json::parse(real.out));
    const Outcome an = run("analyze --config " + c + " --word " + (dir_ / "w.json").string());
    ASSERT_EQ(an.code, 0) << an.err;
    const json report = json::parse(an.out);
    EXPECT_EQ(report["delta"]["matrix"], to_json(delta.matrix())) << "trial " << i;
    EXPECT_TRUE(report["extendable_to_torelli"].get<bool>());
  }
}

TEST(CliInProcess, HelpExitsZero) {
  std::ostringstream out, err;
  EXPECT_EQ(run_cli({"--help"}, out, err), 0);
  EXPECT_NE(out.str().find("analyze"), std::string::npos);
}
