#include <gtest/gtest.h>

#include "smc/error.hpp"
#include "smc/sset.hpp"

namespace smc {
namespace {

const Field F(101);
using Dims = std::map<int, std::size_t>;

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

TEST(Monotone, CountsMatchStarsAndBars) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(monotone_maps(m, n).size(), binom(m + n + 1, m + 1));
      EXPECT_EQ(injective_maps(m, n).size(), binom(n + 1, m + 1));
    }
}

TEST(Monotone, OperatorWordRebuildsMap) {
  // Rebuild θ from its word by composing cofaces and codegeneracies on [.].
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& theta : monotone_maps(m, n)) {
        const OperatorWord w = operator_word(theta, n);
        // X(θ) = S_k ... S_1 D_r ... D_1 means θ = δ^{i_1} ... δ^{i_r} σ^{j_1} ... σ^{j_k}.
        Monotone acc;
        for (int x = 0; x <= n; ++x) acc.push_back(x);
        int level = n;
        for (int i : w.faces) acc = compose(acc, coface(level--, i));
        for (int j : w.degeneracies) acc = compose(acc, codegeneracy(level++, j));
        EXPECT_EQ(level, m);
        EXPECT_EQ(acc, theta);
      }
}

TEST(Standard, SimplexLevelSizes) {
  const FinSimplicialSet d1 = standard_simplex(1, 4);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(d1.size(n), static_cast<std::size_t>(n + 2));
}

TEST(Standard, BoundaryOfIntervalIsTwoPoints) {
  const FinSimplicialSet b = boundary(1, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(b.size(n), 2u);
  EXPECT_EQ(b.nondegenerate(1).size(), 0u);
}

TEST(Standard, HornOfIntervalIsPoint) {
  const FinSimplicialSet pt = standard_simplex(0, 3);
  for (int k = 0; k <= 1; ++k) {
    const FinSimplicialSet h = horn(1, k, 3);
    ASSERT_TRUE(validate_sset(h));
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(h.size(n), pt.size(n));
    // Faces and degeneracies agree once both sides have a single simplex per level.
    EXPECT_EQ(h.faces(), pt.faces());
    EXPECT_EQ(h.degeneracies(), pt.degeneracies());
  }
}

TEST(Standard, AllValidate) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_TRUE(validate_sset(standard_simplex(n, 3)));
    EXPECT_TRUE(validate_sset(boundary(n, 3)));
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(validate_sset(horn(n, k, 3)));
  }
}

TEST(Standard, InvalidParameters) {
  EXPECT_THROW(horn(2, 3, 2), InvalidInput);
  EXPECT_THROW(standard_simplex(-1, 2), InvalidInput);
}

TEST(Standard, NondegenerateCountsAreBinomial) {
  for (int n = 0; n <= 3; ++n) {
    const FinSimplicialSet d = standard_simplex(n, 4);
    for (int m = 0; m <= 4; ++m) EXPECT_EQ(d.nondegenerate(m).size(), binom(n + 1, m + 1)) << n << " " << m;
  }
}

TEST(Standard, InclusionsAreInjective) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_TRUE(boundary_inclusion(n, 3).injective());
    EXPECT_TRUE(validate_sset_map(boundary_inclusion(n, 3)));
    for (int k = 0; n >= 1 && k <= n; ++k) {
      EXPECT_TRUE(horn_inclusion(n, k, 3).injective());
      EXPECT_TRUE(validate_sset_map(horn_inclusion(n, k, 3)));
    }
  }
  EXPECT_EQ(boundary_inclusion(1, 2).weak_equivalence(), WeakEquivalence::no);
  EXPECT_EQ(horn_inclusion(2, 1, 2).weak_equivalence(), WeakEquivalence::yes);
  EXPECT_EQ(face_inclusion(1, 0, 2).weak_equivalence(), WeakEquivalence::yes);
}

TEST(Standard, ApplyMatchesPrecomposition) {
  const FinSimplicialSet d = standard_simplex(2, 3);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& theta : monotone_maps(m, n))
        for (std::size_t x = 0; x < d.size(n); ++x) {
          const Monotone alpha = monotone_maps(n, 2)[x];
          EXPECT_EQ(d.labels(m)[d.apply(theta, n, x)], label(compose(alpha, theta)));
        }
}

TEST(Validate, CorruptedFaceIsReported) {
  const FinSimplicialSet d = standard_simplex(2, 2);
  auto faces = d.faces();
  faces[2][0][0] = (faces[2][0][0] + 1) % d.size(1);
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n <= 2; ++n) labels.push_back(d.labels(n));
  const FinSimplicialSet bad(2, labels, faces, d.degeneracies());
  const Report r = validate_sset(bad);
  EXPECT_FALSE(r);
  EXPECT_NE(r.where.find("n="), std::string::npos);
  EXPECT_NE(r.where.find("simplex="), std::string::npos);
}

TEST(Product, PointIsUnit) {
  const FinSimplicialSet k = boundary(2, 3);
  const FinSimplicialSet p = product(standard_simplex(0, 3), k);
  ASSERT_TRUE(validate_sset(p));
  EXPECT_EQ(p.faces(), k.faces());
  EXPECT_EQ(p.degeneracies(), k.degeneracies());
}

TEST(Product, SquareCountsAndValidity) {
  const FinSimplicialSet sq = product(standard_simplex(1, 2), standard_simplex(1, 2));
  EXPECT_EQ(sq.size(1), 9u);
  EXPECT_TRUE(validate_sset(sq));
  EXPECT_EQ(homology_dims(normalized_chains(sq, F)), (Dims{{0, 1}}));
}

TEST(Product, TruncationMismatch) {
  EXPECT_THROW(product(standard_simplex(1, 2), standard_simplex(1, 3)), ShapeError);
}

TEST(PushoutProduct, BoxBoundary) {
  const SSetMap i = boundary_inclusion(1, 2);
  const SSetMap pp = sset_pushout_product(i, i);
  EXPECT_TRUE(pp.injective());
  EXPECT_TRUE(validate_sset_map(pp));
  EXPECT_EQ(pp.target().size(1), 9u);
  // Edges of the square minus the two interior ones (the diagonal and the
  // degenerate-pair edge survive only if one coordinate is an endpoint).
  std::size_t expect = 0;
  const FinSimplicialSet d1 = standard_simplex(1, 2);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (d1.labels(1)[a] != "01" || d1.labels(1)[b] != "01") ++expect;
  EXPECT_EQ(expect, 8u);
  EXPECT_EQ(pp.source().size(1), expect);
  EXPECT_EQ(homology_dims(normalized_chains(pp.source(), F)), (Dims{{0, 1}, {1, 1}}));
}

TEST(PushoutProduct, IdentityGivesIso) {
  const SSetMap id = SSetMap::identity(standard_simplex(1, 2));
  const SSetMap pp = sset_pushout_product(id, boundary_inclusion(1, 2));
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(pp.source().size(n), pp.target().size(n));
}

TEST(PushoutProduct, EmptyIsUnit) {
  const SSetMap e = from_empty(standard_simplex(0, 2));
  const SSetMap g = horn_inclusion(2, 0, 2);
  const SSetMap pp = sset_pushout_product(e, g);
  for (int n = 0; n <= 2; ++n) {
    EXPECT_EQ(pp.source().size(n), g.source().size(n));
    EXPECT_EQ(pp.target().size(n), g.target().size(n));
  }
}

TEST(PushoutProduct, RejectsNonInjective) {
  const SSetMap s = simplex_map({0, 0}, 0, 2);
  EXPECT_THROW(sset_pushout_product(s, boundary_inclusion(1, 2)), InvalidInput);
}

TEST(Chains, PointIsS0) {
  EXPECT_EQ(normalized_chains(standard_simplex(0, 3), F).trimmed(), sphere(F, 0));
}

TEST(Chains, Interval) {
  const ChainComplex c = normalized_chains(standard_simplex(1, 3), F);
  EXPECT_EQ(c.dim(0), 2u);
  EXPECT_EQ(c.dim(1), 1u);
  EXPECT_EQ(c.dim(2), 0u);
  EXPECT_EQ(homology_dims(c), (Dims{{0, 1}}));
}

TEST(Chains, CircleAndSphere) {
  EXPECT_EQ(homology_dims(normalized_chains(boundary(2, 2), F)), (Dims{{0, 1}, {1, 1}}));
  EXPECT_EQ(homology_dims(normalized_chains(boundary(3, 3), F)), (Dims{{0, 1}, {2, 1}}));
  EXPECT_EQ(homology_dims(normalized_chains(horn(2, 1, 2), F)), (Dims{{0, 1}}));
}

TEST(Chains, SimplexChainsAgreeWithNormalizedChains) {
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(simplex_chains(n, F), normalized_chains(standard_simplex(n, n), F));
}

TEST(Chains, Functorial) {
  const SSetMap f = horn_inclusion(2, 0, 2);
  const SSetMap g = simplex_map({0, 0, 1}, 1, 2);
  const SSetMap gf = compose(g, f);
  EXPECT_EQ(normalized_chains(gf, F), compose(normalized_chains(g, F), normalized_chains(f, F)));
  EXPECT_TRUE(validate_map(normalized_chains(g, F)));
}

TEST(Chains, SimplexChainMapMatchesSSetMap) {
  for (const auto& theta : monotone_maps(1, 2)) {
    const ChainMap a = simplex_chain_map(theta, 2, F);
    const ChainMap b = normalized_chains(simplex_map(theta, 2, 2), F);
    for (int t = 0; t <= 1; ++t) EXPECT_EQ(a.block(t), b.block(t));
  }
}

TEST(Decompose, RebuildsSimplex) {
  const FinSimplicialSet k = product(standard_simplex(1, 3), boundary(2, 3));
  for (int n = 0; n <= 3; ++n)
    for (std::size_t x = 0; x < k.size(n); ++x) {
      const auto d = k.decompose(n, x);
      EXPECT_FALSE(k.is_degenerate(d.level, d.simplex));
      std::size_t y = d.simplex;
      int lv = d.level;
      for (int j : d.degeneracies) y = k.degeneracy(lv++, j, y);
      EXPECT_EQ(lv, n);
      EXPECT_EQ(y, x);
    }
}

}  // namespace
}  // namespace smc
