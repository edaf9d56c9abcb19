#include "flagcoh/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagcoh/presentation.hpp"

namespace flagcoh {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const char* env_seed = nullptr) {
  std::ostringstream out, err;
  const int code = main_entry(args, env_seed, out, err);
  return {code, out.str(), err.str()};
}

Json payload_of(const std::string& json_text) { return Json::parse(json_text)["payload"]; }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("flagcoh_cli_test_" + name);
}

TEST(Cli, RootsE8) {
  const auto o = invoke({"roots", "--type", "E8", "--format", "json"});
  EXPECT_EQ(o.code, 0);
  const Json p = payload_of(o.out);
  EXPECT_TRUE(p["passed"].get<bool>());
  EXPECT_EQ(p["checks"][0]["results"][0]["count"], 240);
}

TEST(Cli, VerifyE8COverQ) {
  const auto o = invoke({"verify", "e8c", "--coeff", "Q", "--format", "json"});
  EXPECT_EQ(o.code, 0) << o.out;
  const Json p = payload_of(o.out);
  const Json& gb = p["checks"][2];
  EXPECT_EQ(gb["check"], "e8c-groebner");
  EXPECT_EQ(gb["results"][1]["total_dimension"], 240);
  EXPECT_TRUE(gb["results"][1]["palindromic"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"roots"}).code, 2);
  EXPECT_EQ(invoke({"roots", "--type", "E8", "--format", "yaml"}).code, 2);
  EXPECT_EQ(invoke({"verify"}).code, 2);
  EXPECT_EQ(invoke({"roots", "--type", "E8"}, "not-a-number").code, 2);
}

TEST(Cli, FeasibilityErrorsExitTwoWithReport) {
  const auto cap = invoke({"schubert", "--type", "E8", "--cap", "5", "--format", "json"});
  EXPECT_EQ(cap.code, 2);
  const Json p = payload_of(cap.out);
  EXPECT_FALSE(p["passed"].get<bool>());
  EXPECT_EQ(p["checks"][0]["check"], "error");
  EXPECT_NE(cap.err.find("cap"), std::string::npos);

  EXPECT_EQ(invoke({"verify", "toda", "--j", "14"}).code, 2);
  EXPECT_EQ(invoke({"roots", "--type", "F4"}).code, 2);
  EXPECT_EQ(invoke({"groebner", "--space", "E8T"}).code, 2);
}

TEST(Cli, FailedCheckExitsOne) {
  // r15 made inhomogeneous: the audit fails but the run completes.
  const auto path = temp_path("bad.json");
  Json j = builtin_presentation("E8C").to_json();
  bool edited = false;
  for (auto& r : j["relations"]) {
    if (r["name"] == "r15") {
      r["poly"] = r["poly"].get<std::string>() + " + u^2";
      edited = true;
    }
  }
  ASSERT_TRUE(edited) << j.dump();
  std::ofstream(path) << j.dump();
  const auto o = invoke({"presentation", "--input", path.string(), "--format", "json"});
  EXPECT_EQ(o.code, 1) << o.out;
  EXPECT_FALSE(payload_of(o.out)["checks"][0]["passed"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Cli, PresentationEmitRoundTrip) {
  for (const char* space : {"E8C", "E8T"}) {
    const auto path = temp_path(std::string(space) + ".json");
    const auto o = invoke({"presentation", "--space", space, "--emit", path.string(), "--format", "json"});
    EXPECT_EQ(o.code, 0) << o.out;
    std::ifstream in(path);
    const auto back = GradedPresentation::from_json(Json::parse(in));
    EXPECT_TRUE(back == builtin_presentation(space));
    EXPECT_EQ(back.relations().size(), std::string(space) == "E8C" ? 4u : 16u);
    std::filesystem::remove(path);
  }
}

TEST(Cli, GroebnerFromFileMatchesBuiltin) {
  const auto path = temp_path("e8c_in.json");
  emit_presentation("E8C", path.string());
  const auto a = invoke({"groebner", "--input", path.string(), "--format", "json"});
  const auto b = invoke({"groebner", "--space", "E8C", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(payload_of(a.out)["checks"][0]["results"], payload_of(b.out)["checks"][0]["results"]);
  EXPECT_EQ(payload_of(a.out)["checks"][0]["results"][0]["total_dimension"], 240);
  std::filesystem::remove(path);
}

TEST(Cli, OutFileReceivesReport) {
  const auto path = temp_path("report.json");
  const auto o = invoke({"roots", "--type", "G2", "--format", "json", "--out", path.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["format"], kReportFormat);
  EXPECT_EQ(j["payload"]["checks"][0]["results"][0]["count"], 12);
  std::filesystem::remove(path);
}

TEST(Cli, SeedFromEnvironmentAndFlag) {
  const auto env = invoke({"invariants", "--type", "B2", "--format", "json"}, "77");
  EXPECT_EQ(payload_of(env.out)["seed"], 77);
  const auto flag = invoke({"invariants", "--type", "B2", "--format", "json", "--seed", "5"}, "77");
  EXPECT_EQ(payload_of(flag.out)["seed"], 5);
}

TEST(Cli, SameSeedSamePayload) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"invariants", "--type", "E8", "--degree", "2,8", "--jobs", "3"},
        std::vector<std::string>{"verify", "schubert-props", "--trials", "20"},
        std::vector<std::string>{"verify", "e8t-betti", "--cutoff", "4", "--jobs", "2"}}) {
    auto with = args;
    with.insert(with.end(), {"--seed", "1234", "--format", "json"});
    const auto a = invoke(with), b = invoke(with);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(payload_of(a.out).dump(), payload_of(b.out).dump()) << args[0];
  }
}

TEST(Cli, SeedChangesRandomizedPayload) {
  const auto a = invoke({"invariants", "--type", "A2", "--format", "json", "--seed", "1"});
  const auto b = invoke({"invariants", "--type", "A2", "--format", "json", "--seed", "2"});
  EXPECT_NE(payload_of(a.out).dump(), payload_of(b.out).dump());
}

TEST(Cli, JobsDoNotChangeResults) {
  const auto a = invoke({"verify", "e8t-betti", "--cutoff", "4", "--jobs", "1", "--format", "json"});
  const auto b = invoke({"verify", "e8t-betti", "--cutoff", "4", "--jobs", "4", "--format", "json"});
  EXPECT_EQ(payload_of(a.out)["checks"][1]["results"], payload_of(b.out)["checks"][1]["results"]);
}

TEST(Cli, SchubertEmitBasis) {
  const auto o = invoke({"schubert", "--type", "A2", "--cap", "3", "--emit-basis", "--format", "json"});
  EXPECT_EQ(o.code, 0) << o.out;
  const Json basis = payload_of(o.out)["checks"][0]["results"][1]["basis"];
  EXPECT_EQ(basis["degree_profile"], (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(basis["tables"].size(), 3u);
  EXPECT_EQ(basis["classes"][3]["word"], (std::vector<int>{1, 2}));
}

}  // namespace
}  // namespace flagcoh
