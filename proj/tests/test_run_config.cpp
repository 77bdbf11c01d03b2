#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "common.hpp"

using namespace fuchsian;
using namespace fuchsian::cli;

namespace {

struct result {
  int code;
  std::string out, err;
};

result invoke(const run_config& c) {
  std::ostringstream out, err;
  int code = run(c, io_streams{out, err});
  return {code, out.str(), err.str()};
}

run_config make(const std::string& command, const std::string& sig) {
  run_config c;
  c.command = command;
  c.signature = sig;
  return c;
}

}  // namespace

TEST(RunConfig, JsonRoundTrip) {
  run_config c = make("simulate", "1;2,3,7;2");
  c.partition = "custom=0.5,1.25";
  c.seed = 123456789012345ull;
  c.samples = 17;
  c.max_iters = 99;
  c.vertex = 3;
  c.survey = true;
  c.checks = {"polygon", "markov"};
  c.csv_path = "x.csv";
  c.tolerance_profile = "strict";
  c.tolerance_overrides = {{"snap", 1e-11}, {"geometry", 2.5e-9}};
  EXPECT_EQ(run_config_from_json(to_json(c)), c);
  EXPECT_EQ(run_config_from_json(json::parse(to_json(c).dump())), c);
  EXPECT_EQ(run_config_from_json(to_json(run_config{})), run_config{});
}

TEST(RunConfig, MissingFieldsKeepDefaults) {
  auto c = run_config_from_json(json::parse(R"({"signature": "0;2,3;1"})"));
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.samples, 10000u);
  EXPECT_EQ(c.partition, "midpoint");
  EXPECT_THROW(run_config_from_json(json::parse(R"({"seed": "x"})")), error);
}

TEST(RunConfig, PartitionSpecRoundTrip) {
  for (const char* text : {"left", "right", "midpoint", "custom=0.5,1.25", "custom=3.1415926535897931"}) {
    auto p = parse_partition(text);
    EXPECT_EQ(parse_partition(format_partition(p)), p) << text;
  }
  EXPECT_EQ(parse_partition("custom=1,2").angles, (std::vector<double>{1.0, 2.0}));
  EXPECT_THROW(parse_partition("middle"), error);
  EXPECT_THROW(parse_partition("custom=1,x"), error);
  EXPECT_THROW(parse_partition("custom=1.0abc"), error);
}

TEST(RunConfig, ToleranceOverrides) {
  run_config c;
  c.tolerance_profile = "default";
  c.tolerance_overrides["snap"] = 1e-9;
  EXPECT_EQ(resolve_tolerances(c).snap, 1e-9);
  EXPECT_EQ(resolve_tolerances(c).geometry, tolerances{}.geometry);
  c.tolerance_overrides["nonsense"] = 1.0;
  EXPECT_THROW(resolve_tolerances(c), error);
  c.tolerance_overrides = {{"snap", -1.0}};
  EXPECT_THROW(resolve_tolerances(c), error);
  auto [name, value] = parse_tolerance_override("geometry=1e-8");
  EXPECT_EQ(name, "geometry");
  EXPECT_EQ(value, 1e-8);
  EXPECT_THROW(parse_tolerance_override("geometry"), error);
}

TEST(RunConfig, CheckSelection) {
  EXPECT_EQ(resolve_checks({"all"}), (std::vector<std::string>{"polygon", "cycle", "markov", "bijectivity"}));
  EXPECT_EQ(resolve_checks({"markov,polygon", "markov"}), (std::vector<std::string>{"markov", "polygon"}));
  EXPECT_THROW(resolve_checks({"nonsense"}), error);
  EXPECT_THROW(resolve_checks({}), error);
}

TEST(Commands, PolygonReportsBlocksAndArea) {
  auto r = invoke(make("polygon", "1;2,3,7;2"));
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["polygon"]["ell"], 5);
  EXPECT_TRUE(j["validation"]["passed"].get<bool>());
  auto m = json::parse(invoke(make("polygon", "0;2,3;1")).out);
  EXPECT_NEAR(m["validation"]["area"].get<double>(), pi / 3, 1e-9);
}

TEST(Commands, InvalidSignaturesExitTwo) {
  auto r = invoke(make("polygon", "0;2;1"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("-1/2 <= 0"), std::string::npos) << r.err;
  auto t = invoke(make("polygon", "1;2;0"));
  EXPECT_EQ(t.code, 2);
  EXPECT_NE(t.err.find("t >= 1"), std::string::npos);
  EXPECT_EQ(invoke(make("polygon", "")).code, 2);
  EXPECT_EQ(invoke(make("frobnicate", "1;;1")).code, 2);
}

TEST(Commands, VerifyAllPasses) {
  auto c = make("verify", "0;2,3;1");
  auto r = invoke(c);
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["warnings"].empty());
  for (const char* name : {"polygon", "cycle", "markov", "bijectivity"}) EXPECT_TRUE(j["checks"].contains(name));
}

TEST(Commands, VerifyOutsideGuaranteeRangeWarns) {
  auto c = make("verify", "0;2,3;1");
  c.partition = "custom=1.0,3.5";
  c.checks = {"bijectivity"};
  auto r = invoke(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(json::parse(r.out)["warnings"].size(), 1u);
}

TEST(Commands, VerifyFailureExitsOne) {
  auto c = make("verify", "0;2,3;1");
  c.checks = {"polygon"};
  c.tolerance_overrides["geometry"] = 1e-300;
  c.tolerance_overrides["structural"] = 1e-300;
  c.tolerance_overrides["spectral"] = 1e-300;
  EXPECT_EQ(invoke(c).code, 1);
}

TEST(Commands, VerifyUnknownCheckExitsTwo) {
  auto c = make("verify", "0;2,3;1");
  c.checks = {"nonsense"};
  EXPECT_EQ(invoke(c).code, 2);
}

TEST(Commands, CycleOutput) {
  auto c = make("cycle", "0;2,3;1");
  c.vertex = 3;
  auto j = json::parse(invoke(c).out);
  EXPECT_EQ(j["I"].get<int>() + j["J"].get<int>(), 1);
  c.vertex = 1;
  j = json::parse(invoke(c).out);
  EXPECT_EQ(j["I"], 0);
  EXPECT_EQ(j["J"], 0);
  c.vertex = 0;
  EXPECT_EQ(invoke(c).code, 2);
  c.vertex = 99;
  EXPECT_EQ(invoke(c).code, 2);
}

TEST(Commands, SimulateContract) {
  auto c = make("simulate", "0;2,3;1");
  c.samples = 0;
  EXPECT_EQ(invoke(c).code, 2);
  c.samples = 200;
  auto a = invoke(c), b = invoke(c);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "sample,seed,u0,w0,K,escape_step,entered");
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 201);
  c.max_iters = 0;
  EXPECT_EQ(invoke(c).code, 1);
  c.survey = true;
  EXPECT_EQ(invoke(c).code, 0);
}

TEST(Commands, JsonIsByteIdenticalAcrossRuns) {
  auto c = make("attractor", "2;2,5,8;2");
  auto a = invoke(c), b = invoke(c);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = json::parse(a.out);
  EXPECT_EQ(j["rects"].size(), 23u);
}

TEST(Commands, DoublesRoundTripThroughJson) {
  auto j = json::parse(invoke(make("polygon", "1;2,3,7;2")).out);
  const auto& p = testing_support::polygon("1;2,3,7;2");
  for (int k = 0; k < p.N; ++k) {
    EXPECT_EQ(j["polygon"]["vertices"][k]["re"].get<double>(), p.V(k).z.real());
    EXPECT_EQ(j["polygon"]["vertices"][k]["im"].get<double>(), p.V(k).z.imag());
  }
}
