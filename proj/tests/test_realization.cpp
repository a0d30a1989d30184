#include <gtest/gtest.h>

#include "smc/error.hpp"
#include "smc/limits.hpp"
#include "smc/linear_system.hpp"
#include "smc/realization.hpp"
#include "zoo.hpp"

namespace smc {
namespace {
using namespace smc::testing;
using Dims = std::map<int, std::size_t>;

ChainComplex two_term(int lo, std::size_t a, std::size_t b, std::vector<std::vector<long long>> d) {
  return ChainComplex(F, lo, {a, b}, {Matrix(0, a, F), Matrix::from_rows(a, b, d, F)});
}

TEST(MapSystem, FreeUnknownHasChainHomDim) {
  const ChainComplex a = direct_sum(disk(F, 1), sphere(F, 0));
  const ChainComplex b = direct_sum(sphere(F, 0), disk(F, 2));
  MapSystem sys(F);
  sys.add_unknown(a, b);
  EXPECT_EQ(sys.nullity(), chain_hom_dim(a, b));
}

TEST(MapSystem, SolvesForAFactorization) {
  // h ∘ (S⁰ -> D¹) = id would split H_0 through an acyclic complex.
  MapSystem sys(F);
  const std::size_t h = sys.add_unknown(disk(F, 1), sphere(F, 0));
  sys.add_constraint({sys.term(h, std::nullopt, sphere_into_disk(F, 1))}, sphere(F, 0), sphere(F, 0),
                     ChainMap::identity(sphere(F, 0)));
  EXPECT_FALSE(sys.consistent());
  EXPECT_FALSE(sys.solve().has_value());
}

TEST(MapSystem, SolutionResubstitutes) {
  // r : D¹ -> D¹ with r ∘ (S⁰ -> D¹) = (S⁰ -> D¹): the identity works, so does any solution.
  MapSystem sys(F);
  const ChainMap i = sphere_into_disk(F, 1);
  const std::size_t r = sys.add_unknown(disk(F, 1), disk(F, 1));
  sys.add_constraint({sys.term(r, std::nullopt, i)}, sphere(F, 0), disk(F, 1), i);
  auto sol = sys.solve();
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(compose((*sol)[0], i), i);
  EXPECT_TRUE(validate_map((*sol)[0]));
  EXPECT_EQ(sys.nullity(), 0u);
}

TEST(MapSystem, RawUnknownCap) {
  ScopedLimits cap({4096, 1});
  MapSystem sys(F);
  EXPECT_THROW(sys.add_unknown(disk(F, 1), disk(F, 1)), ResourceError);
}

TEST(Total, NormalizedConstantIsA) {
  const ChainComplex a = direct_sum(disk(F, 2), sphere(F, 1));
  const auto r = total_complex(constant(a, 3), TotalMode::normalized);
  EXPECT_EQ(r.complex, a.trimmed());
  EXPECT_EQ(r.flag, Exactness::exact);
}

TEST(Total, IntervalTimesSphere) {
  const auto r = total_complex(tensor(sphere(F, 0), standard_simplex(1, 3)), TotalMode::normalized);
  EXPECT_EQ(homology_dims(r.complex), (Dims{{0, 1}}));
  EXPECT_EQ(r.flag, Exactness::exact);
}

TEST(Total, CircleAndHorn) {
  // Hand counts: ∂Δ[2] is a circle, Λ¹[2] is contractible.
  EXPECT_EQ(homology_dims(total_complex(tensor(sphere(F, 0), boundary(2, 2)), TotalMode::normalized).complex),
            (Dims{{0, 1}, {1, 1}}));
  EXPECT_EQ(homology_dims(total_complex(tensor(sphere(F, 1), horn(2, 1, 2)), TotalMode::normalized).complex),
            (Dims{{1, 1}}));
}

TEST(Total, FullModeEulerCharacteristic) {
  for (const auto& x : zoo(2)) {
    long long expect = 0;
    for (int s = 0; s <= 2; ++s) expect += (s % 2 == 0 ? 1 : -1) * euler_characteristic(x.level(s));
    const auto r = total_complex(x, TotalMode::full);
    EXPECT_TRUE(validate_complex(r.complex));
    EXPECT_EQ(euler_characteristic(r.complex), expect);
  }
}

TEST(Total, ModesAgreeOnHomology) {
  for (const auto& x : zoo(3)) {
    const Dims n = homology_dims(total_complex(x, TotalMode::normalized).complex);
    EXPECT_EQ(homology_dims(total_complex(x, TotalMode::moore).complex), n);
  }
}

TEST(Total, FullModeOnConstantsSeesTheTruncation) {
  // Columns A with horizontal maps 0, id, 0, id, ...: an odd top column survives.
  const ChainComplex a = direct_sum(sphere(F, 0), sphere(F, 1));
  EXPECT_EQ(homology_dims(total_complex(constant(a, 2), TotalMode::full).complex), homology_dims(a));
  EXPECT_EQ(homology_dims(total_complex(constant(a, 4), TotalMode::full).complex), homology_dims(a));
  EXPECT_EQ(homology_dims(total_complex(constant(a, 3), TotalMode::full).complex),
            (Dims{{0, 1}, {1, 1}, {3, 1}, {4, 1}}));
}

TEST(Total, FlagTracksTopNondegenerates) {
  EXPECT_EQ(exactness(tensor(sphere(F, 0), standard_simplex(2, 2))), Exactness::truncation_limited);
  EXPECT_EQ(exactness(tensor(sphere(F, 0), standard_simplex(2, 3))), Exactness::exact);
}

TEST(Total, ShiftCommutes) {
  for (const auto& x : zoo(2)) {
    const ChainComplex a = total_complex(prolong_shift(x, 2), TotalMode::normalized).complex;
    EXPECT_EQ(homology_dims(a), homology_dims(shift(total_complex(x, TotalMode::normalized).complex, 2)));
  }
}

TEST(RealizationWe, LevelWeIsRealizationWe) {
  const SimplicialObject x = tensor(sphere(F, 0), boundary(2, 2));
  EXPECT_TRUE(realization_we(SimplicialMap::identity(x)).we);
  // Projection S⁰ ⊕ D¹ -> S⁰ is levelwise a quasi-iso.
  const SimplicialMap g = constant(summand_projection({sphere(F, 0), disk(F, 1)}, 0, F), 2);
  EXPECT_TRUE(realization_we(g).we);
  EXPECT_EQ(realization_we(g).flag, Exactness::exact);
}

TEST(RealizationWe, HornIntoSimplex) {
  const SimplicialMap f = tensor(constant(sphere(F, 0), 2), horn_inclusion(1, 0, 2));
  EXPECT_TRUE(realization_we(f).we);
  EXPECT_EQ(realization_we(f).flag, Exactness::exact);
}

TEST(RealizationWe, ZeroIntoSphere) {
  const SimplicialObject s = constant(sphere(F, 2), 2);
  EXPECT_FALSE(realization_we(SimplicialMap::zero(zero_sobj(F, 2), s)).we);
}

TEST(Realize, ConstantGivesBack) {
  const ChainComplex a = direct_sum(disk(F, 2), sphere(F, 1));
  const ChainComplex r = realize(constant(a, 3));
  EXPECT_EQ(homology_dims(r), homology_dims(a));
  std::size_t total = 0;
  for (int t = r.lo(); t <= r.hi(); ++t) total += r.dim(t);
  EXPECT_EQ(total, a.total_dim());
}

TEST(Realize, ZeroIsZero) { EXPECT_TRUE(realize(zero_sobj(F, 2)).is_zero()); }

TEST(Realize, MatchesHandCounts) {
  EXPECT_EQ(homology_dims(realize(tensor(sphere(F, 0), boundary(2, 2)))), (Dims{{0, 1}, {1, 1}}));
  EXPECT_EQ(homology_dims(realize(tensor(sphere(F, 0), standard_simplex(1, 2)))), (Dims{{0, 1}}));
  EXPECT_TRUE(homology_dims(realize(reduced_interval(2))).empty());
}

TEST(Realize, AgreesWithNormalizedTotal) {
  for (const auto& x : zoo(3)) {
    ASSERT_EQ(exactness(x), Exactness::exact);
    EXPECT_EQ(homology_dims(realize(x)), homology_dims(total_complex(x, TotalMode::normalized).complex));
  }
}

TEST(Sing, LevelZeroIsA) {
  const ChainComplex a = two_term(0, 1, 2, {{1, 0}});
  const SimplicialObject s = sing(a, 2);
  EXPECT_TRUE(validate_sobj(s));
  EXPECT_EQ(homology_dims(s.level(0)), homology_dims(a));
}

TEST(Sing, EveryLevelHasTheHomologyOfA) {
  const ChainComplex a = direct_sum(sphere(F, 1), disk(F, 1));
  const SimplicialObject s = sing(a, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(homology_dims(s.level(n)), homology_dims(a)) << n;
  EXPECT_TRUE(is_homotopically_constant(s));
}

TEST(Sing, MapIsValid) {
  const SimplicialMap g = sing(sphere_into_disk(F, 1), 2);
  EXPECT_TRUE(validate_smap(g));
  EXPECT_EQ(sing(ChainMap::identity(sphere(F, 0)), 2), SimplicialMap::identity(sing(sphere(F, 0), 2)));
}

TEST(HomDim, Scalars) {
  const SimplicialObject c = constant(sphere(F, 0), 3);
  EXPECT_EQ(hom_dim(c, c), 1u);
}

TEST(HomDim, ConstantEvaluationAdjunction) {
  const std::vector<ChainComplex> as = {sphere(F, 0), disk(F, 1), direct_sum(sphere(F, 0), sphere(F, 1))};
  for (const auto& a : as)
    for (const auto& y : zoo(2)) EXPECT_EQ(hom_dim(constant(a, 2), y), chain_hom_dim(a, y.level(0)));
}

TEST(HomDim, RealizeSingAdjunction) {
  const std::vector<ChainComplex> as = {sphere(F, 0), disk(F, 1), sphere(F, 1)};
  for (const auto& a : as)
    for (const auto& y : zoo(2)) EXPECT_EQ(hom_dim(y, sing(a, 2)), chain_hom_dim(realize(y), a));
}

TEST(HomDim, MappingLevelZero) {
  for (const auto& y : zoo(2)) EXPECT_EQ(mapping_level_dim(y, y, 0), hom_dim(y, y));
}

}  // namespace
}  // namespace smc
