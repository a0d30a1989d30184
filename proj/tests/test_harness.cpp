#include <gtest/gtest.h>

#include "smc/error.hpp"
#include "smc/harness.hpp"
#include "zoo.hpp"

namespace smc {
namespace {
using namespace smc::testing;

SampleParams params(int n) {
  SampleParams p;
  p.truncation = n;
  return p;
}

TEST(Sample, DeterministicInSeed) {
  for (auto k : {SampleKind::random_map, SampleKind::reedy_cofibration, SampleKind::equifibered_fibration}) {
    EXPECT_EQ(sample(k, params(2), 11), sample(k, params(2), 11)) << to_string(k);
  }
  EXPECT_FALSE(sample(SampleKind::random_map, params(2), 11) == sample(SampleKind::random_map, params(2), 12));
}

TEST(Sample, LandsInItsClass) {
  for (std::uint64_t s = 1; s <= 6; ++s) {
    EXPECT_TRUE(classify(sample(SampleKind::reedy_cofibration, params(2), s)).reedy_cof);
    EXPECT_TRUE(classify(sample(SampleKind::reedy_fibration, params(2), s)).reedy_fib);
    EXPECT_TRUE(classify(sample(SampleKind::equifibered_fibration, params(2), s)).equifibered);
    const Classification t = classify(sample(SampleKind::reedy_trivial_fibration, params(2), s));
    EXPECT_TRUE(t.reedy_fib && t.level_we);
    EXPECT_EQ(exactness(sample(SampleKind::skeletal_sobj, params(2), s).source()), Exactness::exact);
  }
}

TEST(Sample, RespectsLevelBound) {
  SampleParams p = params(2);
  p.max_level_dim = 3;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const SimplicialMap f = sample(SampleKind::random_map, p, s);
    for (int n = 0; n <= 2; ++n) {
      EXPECT_LE(f.source().level(n).total_dim(), 3u);
      EXPECT_LE(f.target().level(n).total_dim(), 3u);
    }
  }
}

TEST(Sample, ZeroDimensionsGiveZeroMap) {
  SampleParams p = params(2);
  p.max_cells = 0;
  const SimplicialMap f = sample(SampleKind::reedy_cofibration, p, 3);
  EXPECT_TRUE(f.source().is_zero());
  const Classification c = classify(f);
  EXPECT_TRUE(c.level_we && c.reedy_cof && c.reedy_fib && c.equifibered && c.realization_we);
}

TEST(Sample, KindNames) {
  EXPECT_EQ(parse_sample_kind("reedy_cofibration"), SampleKind::reedy_cofibration);
  EXPECT_THROW(parse_sample_kind("nope"), InvalidInput);
}

TEST(Sample, RandomComplexesAreValid) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const ChainComplex c = random_complex(rng, params(2), k % 2 == 0);
    EXPECT_TRUE(validate_complex(c));
    if (k % 2 == 0) {
      EXPECT_TRUE(homology_dims(c).empty());
    }
  }
}

TEST(Building, IntervalKernelIsFibrantAndSkeletal) {
  const SimplicialObject u = interval_kernel(F, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(u.level(n).total_dim(), static_cast<std::size_t>(n + 1));
  EXPECT_TRUE(classify(SimplicialMap::zero(u, zero_sobj(F, 3))).reedy_fib);
  EXPECT_EQ(exactness(u), Exactness::exact);
}

TEST(Building, ReducedIntervalIsFibrant) {
  EXPECT_TRUE(classify(SimplicialMap::zero(reduced_interval(F, 3), zero_sobj(F, 3))).reedy_fib);
}

TEST(Building, CircleIsNotFibrantAtLevelTwo) {
  // Δ[1]/∂Δ[1]: two edges determine the third face of a 2-simplex, so M_2 is too big.
  const SimplicialObject c0 = constant(sphere(F, 0), 2);
  const SimplicialObject circle = cokernel(tensor(c0, boundary_inclusion(1, 2))).object;
  const Classification c = classify(SimplicialMap::zero(circle, zero_sobj(F, 2)));
  EXPECT_FALSE(c.reedy_fib);
  ASSERT_TRUE(c.reedy_fib_witness);
  EXPECT_EQ(c.reedy_fib_witness->level, 2);
}

TEST(Sm7, CanonicalCounterexample) {
  const SimplicialMap f = SimplicialMap::zero(zero_sobj(F, 2), constant(sphere(F, 0), 2));
  const SSetMap i = horn_inclusion(1, 0, 2);
  const Sm7Report real = check_sm7(f, i, Structure::realization);
  EXPECT_TRUE(real.ok());
  EXPECT_TRUE(real.cofibration);
  ASSERT_TRUE(real.acyclic);
  EXPECT_TRUE(*real.acyclic);
  EXPECT_EQ(real.box.realization_flag, Exactness::exact);
  const Sm7Report reedy = check_sm7(f, i, Structure::reedy);
  EXPECT_TRUE(reedy.ok());
  EXPECT_TRUE(reedy.expected_failure);
  ASSERT_TRUE(reedy.witness);
  EXPECT_EQ(reedy.witness->level, 0);
}

TEST(Sm7, LevelTrivialMonoOfConstants) {
  const SimplicialMap f = constant(pair(ChainMap::identity(sphere(F, 0)), ChainMap::zero(sphere(F, 0), disk(F, 1))), 2);
  for (const auto& i : builtin_injections(2, 2)) {
    const Sm7Report r = check_sm7(f, i.map, Structure::realization);
    EXPECT_TRUE(r.ok()) << i.name;
    ASSERT_TRUE(r.level_trivial);
    EXPECT_TRUE(*r.level_trivial);
  }
}

TEST(Sm7, UnknownAttributeSkipsPartThree) {
  const SimplicialMap f = constant(sphere_into_disk(F, 1), 2);
  const Sm7Report r = check_sm7(f, boundary_inclusion(1, 2).with_weak_equivalence(WeakEquivalence::unknown),
                                Structure::realization);
  EXPECT_FALSE(r.acyclic.has_value());
}

TEST(Sm7, Preconditions) {
  const SimplicialObject s0 = constant(sphere(F, 0), 2);
  EXPECT_THROW(check_sm7(SimplicialMap::zero(s0, zero_sobj(F, 2)), horn_inclusion(1, 0, 2), Structure::reedy),
               InvalidInput);
}

TEST(LemMatch, HoldsOnZooMaps) {
  for (const auto& x : zoo(3)) {
    for (int n = 0; n <= 3; ++n) {
      EXPECT_TRUE(check_lem_match(SimplicialMap::identity(x), n)) << n;
      EXPECT_TRUE(check_lem_match(SimplicialMap::zero(x, reduced_interval(3)), n)) << n;
    }
  }
}

TEST(MatchingCotensor, HoldsOnZoo) {
  for (const auto& x : zoo(3))
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(check_matching_cotensor(x, n)) << n;
}

TEST(Harness, SmallRunsPass) {
  HarnessOptions o;
  o.samples = 4;
  EXPECT_TRUE(check_realization_axiom(o).ok());
  EXPECT_TRUE(check_prop_i_cof(o).ok());
  EXPECT_TRUE(check_prop_proof(o).ok());
  EXPECT_TRUE(check_lem_match_sampled(o).ok());
  o.params.max_level_dim = 4;
  EXPECT_TRUE(check_sm7_sampled(o, Structure::realization).ok());
  o.samples = 2;
  const CheckReport j = check_j_necessity(o);
  EXPECT_TRUE(j.ok());
  EXPECT_EQ(j.window, "N=2, n<=2, degrees -1..3");
}

TEST(Harness, CorruptedClassifierIsCaught) {
  HarnessOptions o;
  o.samples = 3;
  const CheckReport r = check_realization_axiom(o, [](const SimplicialMap& f) {
    Classification c = classify(f);
    c.level_we = false;
    c.level_we_witness = Witness{1, 0, std::nullopt, "injected"};
    return c;
  });
  EXPECT_EQ(r.violations, 3u);
  ASSERT_FALSE(r.details.empty());
  EXPECT_NE(r.details.front().find("level 1"), std::string::npos);
}

}  // namespace
}  // namespace smc
