#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "smc/io.hpp"
#include "zoo.hpp"

namespace smc {
namespace {
using namespace smc::testing;
using io::Json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome smc_run(std::vector<std::string> args) {
  args.insert(args.begin(), "smc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("smc_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, HomologyOfSphereFixture) {
  for (int n : {-1, 0, 1, 4}) {
    const Outcome r = smc_run({"--json", "homology", "@sphere:" + std::to_string(n)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["homology"].dump(), "{\"" + std::to_string(n) + "\":1}");
  }
}

TEST(Cli, CounterexampleReport) {
  const Outcome r = smc_run({"--json", "counterexample", "reedy-sm7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["level_we"], false);
  EXPECT_EQ(j["realization_we"], true);
  EXPECT_EQ(j["flag"], "exact");
  EXPECT_EQ(j["sm7_reedy"]["expected_failure"], true);
  // The emitted instance parses back to the map that was classified.
  const auto pair = io::reedy_sm7_pair(2, F);
  EXPECT_EQ(io::smap_from_json(j["instance"]["box"]), pushout_product(pair.f, pair.i));
}

TEST(Cli, RealizationAxiomCheck) {
  const Outcome r = smc_run({"--json", "check", "realization-axiom", "--samples", "50", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json rep = r.json()["report"];
  EXPECT_EQ(rep["violations"], 0);
  EXPECT_EQ(rep["premise"], 50);
  EXPECT_EQ(rep["seed"], 7);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"--json", "check", "prop-i-cof", "--samples", "5", "--seed", "3"};
  EXPECT_EQ(smc_run(args).out, smc_run(args).out);
  const std::vector<std::string> text = {"classify", "@reedy-sm7:f"};
  EXPECT_EQ(smc_run(text).out, smc_run(text).out);
}

TEST(Cli, SyntaxErrorExitsTwoWithLine) {
  const Outcome r = smc_run({"homology", temp_file("syntax.json", "{\n\"type\": \"complex\",\n\"lo\": }")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, MissingFieldExitsTwoNamingIt) {
  Json j = io::to_json(constant(sphere(F, 0), 2));
  j.erase("degeneracies");
  const Outcome r = smc_run({"classify", temp_file("truncated.json", j.dump())});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("degeneracies"), std::string::npos) << r.err;
}

TEST(Cli, MixedPrimesRejected) {
  const std::string f7 = temp_file("p7.json", io::to_json(sphere(Field(7), 0)).dump());
  EXPECT_EQ(smc_run({"homology", f7, "--p", "7"}).code, 0);
  const Outcome r = smc_run({"homology", f7});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("mixed primes"), std::string::npos) << r.err;
  const std::string f101 = temp_file("p101.json", io::to_json(disk(F, 1)).dump());
  EXPECT_EQ(smc_run({"validate", f101, f7}).code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
  const Outcome r = smc_run({"--cap", "4", "realize", "@const:disk:1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(Cli, InvalidObjectIsAViolation) {
  const std::string bad = temp_file(
      "dd.json", R"({"type":"complex","p":101,"lo":0,"dims":[1,1,1],"diffs":[[[1]],[[1]]]})");
  const Outcome r = smc_run({"--json", "validate", bad, "@disk:2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["results"][0]["valid"], false);
  EXPECT_EQ(r.json()["results"][1]["valid"], true);
}

TEST(Cli, OutputFileRoundTrips) {
  const std::string path = temp_file("sing.json", "");
  ASSERT_EQ(smc_run({"sing", "@disk:1", "-o", path}).code, 0);
  EXPECT_EQ(io::read_file(path), io::Value(sing(disk(F, 1), 2)));
  EXPECT_EQ(smc_run({"validate", path}).code, 0);
  const Outcome h = smc_run({"--json", "homology", path});
  EXPECT_EQ(h.json()["homotopically_constant"], true);
}

TEST(Cli, EnvironmentOverridesDefaults) {
  ::setenv("SMC_TRUNC", "3", 1);
  const Outcome env = smc_run({"--json", "homology", "@const:sphere:0"});
  const Outcome flag = smc_run({"--json", "--trunc", "1", "homology", "@const:sphere:0"});
  ::unsetenv("SMC_TRUNC");
  EXPECT_EQ(env.json()["manifest"]["N"], 3);
  EXPECT_EQ(env.json()["levels"].size(), 4u);
  EXPECT_EQ(flag.json()["manifest"]["N"], 1);
}

TEST(Cli, BadManifest) {
  EXPECT_EQ(smc_run({"--p", "100", "homology", "@sphere:0"}).code, 2);
  EXPECT_EQ(smc_run({"--trunc", "0", "homology", "@sphere:0"}).code, 2);
  EXPECT_EQ(smc_run({"--window", "3..1", "generators", "I"}).code, 2);
  EXPECT_EQ(smc_run({"homology", "@cube:1"}).code, 2);
  EXPECT_EQ(smc_run({"frobnicate"}).code, 2);
  EXPECT_EQ(smc_run({"check", "nonsense"}).code, 2);
}

TEST(Cli, GeneratorsMatchLibrary) {
  for (const std::string fam : {"I", "J'", "J''"}) {
    const Outcome r = smc_run({"--json", "--window", "0..2", "generators", fam});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto expected = generators(parse_family(fam), Window{0, 2, 0, 2}, 2, F).members.size();
    EXPECT_EQ(r.json()["count"], expected) << fam;
  }
}

TEST(Cli, RlpAgreesWithLibrary) {
  const ChainMap i = sphere_into_disk(F, 1);
  const ChainMap p = disk_onto_sphere(F, 1);
  const std::string fi = temp_file("i.json", io::to_json(i).dump());
  const std::string fp = temp_file("p.json", io::to_json(p).dump());
  const Outcome r = smc_run({"--json", "rlp", fi, fp});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["lifts_against"], lifts_against(constant(i, 2), constant(p, 2)));
}

TEST(Cli, StructuralCommands) {
  const Outcome lat = smc_run({"--json", "latching", "1", "@interval-kernel"});
  ASSERT_EQ(lat.code, 0) << lat.err;
  EXPECT_EQ(io::complex_from_json(lat.json()["result"]), latching(interval_kernel(F, 2), 1).object);

  const Outcome mat = smc_run({"--json", "matching", "2", "@reedy-sm7:f"});
  ASSERT_EQ(mat.code, 0) << mat.err;
  EXPECT_EQ(mat.json()["relative_map"]["epi"], true);

  const Outcome cot = smc_run({"--json", "cotensor", "@const:sphere:0", "@boundary:1"});
  ASSERT_EQ(cot.code, 0) << cot.err;
  // ∂Δ[1] is two points, so the cotensor is S⁰ ⊕ S⁰.
  EXPECT_EQ(cot.json()["summary"]["homology"].dump(), R"({"0":2})");

  const Outcome box = smc_run({"--json", "tensor", "--box", "@reedy-sm7:f", "@reedy-sm7:i"});
  ASSERT_EQ(box.code, 0) << box.err;
  const auto pair = io::reedy_sm7_pair(2, F);
  EXPECT_EQ(io::smap_from_json(box.json()["result"]), pushout_product(pair.f, pair.i));

  const Outcome tot = smc_run({"--json", "--normalized", "total-complex", "@reduced-interval"});
  ASSERT_EQ(tot.code, 0) << tot.err;
  EXPECT_EQ(tot.json()["mode"], "normalized");

  const Outcome rz = smc_run({"--json", "realize", "@const:disk:2"});
  ASSERT_EQ(rz.code, 0) << rz.err;
  EXPECT_EQ(rz.json()["summary"]["homology"], rz.json()["normalized_total_homology"]);
}

TEST(Cli, TextModeRenders) {
  const Outcome r = smc_run({"check", "lem-match", "--samples", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("violations: 0"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace smc
