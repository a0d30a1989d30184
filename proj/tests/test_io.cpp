#include <gtest/gtest.h>

#include "smc/error.hpp"
#include "smc/io.hpp"
#include "zoo.hpp"

namespace smc {
namespace {
using namespace smc::testing;
using io::Json;

template <class T>
T round_trip(const T& x) {
  const std::string text = io::dump(io::to_json(x), false);
  return std::get<T>(io::parse(text));
}

std::string parse_error(const std::string& text) {
  try {
    io::parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(IoRoundTrip, Complexes) {
  for (const auto& c : {sphere(F, 3), disk(F, -1), zero_complex(F), direct_sum(disk(F, 2), sphere(F, 0))}) {
    EXPECT_EQ(round_trip(c), c);
  }
  const ChainMap m = disk_onto_sphere(F, 2);
  EXPECT_EQ(round_trip(m), m);
}

TEST(IoRoundTrip, SimplicialObjectsAndMaps) {
  for (const auto& x : zoo(2)) EXPECT_EQ(round_trip(x), x);
  SampleParams p;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const SimplicialMap f = sample(SampleKind::random_map, p, s);
    EXPECT_EQ(round_trip(f), f) << "seed " << s;
  }
}

TEST(IoRoundTrip, SerializationIsCanonical) {
  const SimplicialMap f = sample(SampleKind::reedy_cofibration, SampleParams{}, 3);
  const std::string once = io::dump(io::to_json(f), true);
  EXPECT_EQ(io::dump(io::to_json(round_trip(f)), true), once);
}

TEST(IoRoundTrip, SimplicialSets) {
  for (const auto& k : {standard_simplex(2, 3), boundary(2, 2), horn(2, 1, 2), empty_sset(1)}) {
    EXPECT_EQ(round_trip(k), k);
  }
  const SSetMap g = horn_inclusion(2, 0, 2);
  const SSetMap back = round_trip(g);
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.weak_equivalence(), WeakEquivalence::yes);
  EXPECT_TRUE(back.injective());
}

TEST(IoParse, MissingFieldIsNamed) {
  Json j = io::to_json(constant(sphere(F, 0), 2));
  j.erase("degeneracies");
  const std::string msg = parse_error(j.dump());
  EXPECT_NE(msg.find("$"), std::string::npos) << msg;
  EXPECT_NE(msg.find("degeneracies"), std::string::npos) << msg;
}

TEST(IoParse, NestedPathInDiagnostic) {
  Json j = io::to_json(constant(disk(F, 1), 2));
  j["faces"][1][0]["blocks"][0] = Json::array({Json::array({1, 2})});
  const std::string msg = parse_error(j.dump());
  EXPECT_NE(msg.find("$.faces[1][0].blocks[0]"), std::string::npos) << msg;
}

TEST(IoParse, SyntaxErrorReportsLine) {
  const std::string msg = parse_error("{\n  \"type\": \"complex\",\n  \"p\": 101,\n  \"lo\": ,\n}");
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(IoParse, MixedPrimesRejected) {
  Json j = io::to_json(sphere_into_disk(F, 1));
  j["source"]["p"] = 7;
  const std::string msg = parse_error(j.dump());
  EXPECT_NE(msg.find("mixed primes"), std::string::npos) << msg;
  // Restating the same prime is allowed.
  j["source"]["p"] = 101;
  EXPECT_EQ(std::get<ChainMap>(io::parse(j.dump())), sphere_into_disk(F, 1));
}

TEST(IoParse, RejectsBadPrimeAndType) {
  Json j = io::to_json(sphere(F, 0));
  j["p"] = 100;
  EXPECT_NE(parse_error(j.dump()).find("$.p"), std::string::npos);
  j["p"] = 101;
  j["type"] = "cube";
  EXPECT_NE(parse_error(j.dump()).find("unknown type"), std::string::npos);
}

TEST(IoParse, EntriesReducedModP) {
  const Json j = Json::parse(R"({"type":"complex","p":5,"lo":0,"dims":[1,1],"diffs":[[[-4]]]})");
  const ChainComplex c = io::complex_from_json(j);
  EXPECT_EQ(c.diff(1)(0, 0), 1u);
  EXPECT_TRUE(homology_dims(c).empty());
}

TEST(IoParse, InvalidDifferentialParsesButFailsValidation) {
  // d∘d ≠ 0 is a property, not a shape problem.
  const Json j = Json::parse(
      R"({"type":"complex","p":101,"lo":0,"dims":[1,1,1],"diffs":[[[1]],[[1]]]})");
  const ChainComplex c = io::complex_from_json(j);
  EXPECT_FALSE(validate_complex(c).ok);
}

TEST(IoFixtures, Basic) {
  EXPECT_EQ(std::get<ChainComplex>(io::fixture("disk:2", 2, F)), disk(F, 2));
  const auto cs = std::get<SimplicialObject>(io::fixture("const:sphere:0", 3, F));
  EXPECT_EQ(cs.truncation(), 3);
  EXPECT_EQ(cs, constant(sphere(F, 0), 3));
  EXPECT_EQ(std::get<FinSimplicialSet>(io::fixture("horn:2:1", 2, F)), horn(2, 1, 2));
  EXPECT_EQ(std::get<SSetMap>(io::fixture("face:2:0", 2, F)), face_inclusion(1, 0, 2));
}

TEST(IoFixtures, HornOneIsAPoint) {
  const auto h = std::get<FinSimplicialSet>(io::fixture("horn:1:0", 3, F));
  const auto pt = standard_simplex(0, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(h.size(n), 1u);
  EXPECT_EQ(h.faces(), pt.faces());
  EXPECT_EQ(h.degeneracies(), pt.degeneracies());
  EXPECT_TRUE(io::fixture_self_test(3, F).ok);
}

TEST(IoFixtures, Sm7Pair) {
  const auto f = std::get<SimplicialMap>(io::fixture("reedy-sm7:f", 2, F));
  EXPECT_TRUE(f.source().is_zero());
  EXPECT_EQ(f.target(), constant(sphere(F, 0), 2));
  EXPECT_EQ(std::get<SSetMap>(io::fixture("reedy-sm7:i", 2, F)), horn_inclusion(1, 0, 2));
}

TEST(IoFixtures, UnknownNames) {
  for (const char* name : {"cube:1", "sphere", "sphere:x", "const:torus:1", "face:0:0", "delta:-1"}) {
    EXPECT_THROW(io::fixture(name, 2, F), InvalidInput) << name;
  }
}

TEST(IoReports, ClassificationCarriesFlag) {
  const auto pair = io::reedy_sm7_pair(2, F);
  const Json j = io::to_json(classify(pushout_product(pair.f, pair.i)));
  EXPECT_EQ(j["level_we"], false);
  EXPECT_EQ(j["realization_we"], true);
  EXPECT_EQ(j["realization_flag"], "exact");
  EXPECT_TRUE(j["witnesses"].contains("level_we"));
}

TEST(IoReports, Homology) {
  EXPECT_EQ(io::homology_json(homology_dims(sphere(F, 4))).dump(), R"({"4":1})");
}

}  // namespace
}  // namespace smc
