#include <gtest/gtest.h>

#include <functional>

#include "smc/chain.hpp"
#include "smc/error.hpp"

namespace smc {
namespace {

const Field F(101);

using Dims = std::map<int, std::size_t>;

// Counts chain maps A -> B over a tiny field by enumerating every block tuple.
std::size_t count_chain_maps(const ChainComplex& a, const ChainComplex& b) {
  const Field& f = a.field();
  const auto [lo, hi] = support_union(a, b);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (int t = lo; t <= hi; ++t) {
    sizes.push_back(a.dim(t) * b.dim(t));
    total += sizes.back();
  }
  std::vector<Scalar> v(total, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<Matrix> blocks;
    std::size_t off = 0;
    for (int t = lo; t <= hi; ++t) {
      Matrix m(b.dim(t), a.dim(t), f);
      for (std::size_t k = 0; k < m.size(); ++k) m.at(k / m.cols(), k % m.cols()) = v[off + k];
      off += m.size();
      blocks.push_back(std::move(m));
    }
    bool ok = true;
    for (int t = lo + 1; t <= hi && ok; ++t) {
      const std::size_t k = static_cast<std::size_t>(t - lo);
      ok = b.diff(t) * blocks[k] == blocks[k - 1] * a.diff(t);
    }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < total && ++v[pos] == f.p()) v[pos++] = 0;
    if (pos == total) break;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

ChainComplex two_term(Field f, const Matrix& d) {
  return ChainComplex(f, 0, {d.rows(), d.cols()}, {Matrix(0, d.rows(), f), d});
}

TEST(Complex, StandardObjectsValidate) {
  EXPECT_TRUE(validate_complex(disk(F, 3)));
  EXPECT_TRUE(validate_complex(sphere(F, 2)));
}

TEST(Complex, DoubleDifferentialNonzeroIsReported) {
  const Matrix one = Matrix::from_rows({{1}}, F);
  const ChainComplex c(F, 0, {1, 1, 1}, {Matrix(0, 1, F), one, one});
  const Report r = validate_complex(c);
  EXPECT_FALSE(r);
  EXPECT_NE(r.where.find("degree 2"), std::string::npos) << r.where;
}

TEST(Complex, ShapeMismatchThrows) {
  EXPECT_THROW(ChainComplex(F, 0, {1, 2}, {Matrix(0, 1, F), Matrix(1, 1, F)}), ShapeError);
}

TEST(Homology, SpheresDisksAndSums) {
  EXPECT_EQ(homology_dims(sphere(F, 4)), (Dims{{4, 1}}));
  EXPECT_EQ(homology_dims(disk(F, 4)), Dims{});
  EXPECT_EQ(homology_dims(direct_sum(sphere(F, 1), disk(F, 2))), (Dims{{1, 1}}));
}

TEST(Homology, EulerCharacteristicAgrees) {
  const ChainComplex c = direct_sum(direct_sum(sphere(F, 1), disk(F, 2)), sphere(F, -1));
  EXPECT_EQ(euler_characteristic(c), euler_characteristic(homology_dims(c)));
}

TEST(Cone, IdentityOnSphereIsDisk) {
  const ChainComplex c = mapping_cone(ChainMap::identity(sphere(F, 2)));
  EXPECT_TRUE(validate_complex(c));
  EXPECT_EQ(c.dim(2), 1u);
  EXPECT_EQ(c.dim(3), 1u);
  EXPECT_EQ(homology_dims(c), Dims{});
}

TEST(Cone, ZeroSelfMapOfSphere) {
  const ChainComplex s = sphere(F, 1);
  EXPECT_EQ(homology_dims(mapping_cone(ChainMap::zero(s, s))), (Dims{{1, 1}, {2, 1}}));
}

TEST(Cone, MapToZero) {
  const ChainComplex c = mapping_cone(ChainMap::zero(sphere(F, 0), zero_complex(F)));
  EXPECT_EQ(homology_dims(c), (Dims{{1, 1}}));
}

TEST(QuasiIso, Examples) {
  EXPECT_TRUE(is_quasi_iso(ChainMap::identity(disk(F, 1))));
  EXPECT_TRUE(is_quasi_iso(ChainMap::zero(zero_complex(F), disk(F, 2))));
  EXPECT_FALSE(is_quasi_iso(ChainMap::zero(zero_complex(F), sphere(F, 2))));
}

TEST(QuasiIso, ThreeRoutesAgree) {
  const ChainComplex a = direct_sum(sphere(F, 1), disk(F, 2));
  const ChainComplex b = sphere(F, 1);
  const ChainMap proj = summand_projection({sphere(F, 1), disk(F, 2)}, 0, F);
  const ChainMap zero = ChainMap::zero(a, b);
  for (const auto& m : {proj, zero}) {
    EXPECT_EQ(is_quasi_iso(m), is_quasi_iso_by_homology(m));
    EXPECT_EQ(is_quasi_iso(m), !first_cone_homology(m).has_value());
  }
  EXPECT_TRUE(is_quasi_iso(proj));
  EXPECT_FALSE(is_quasi_iso(zero));
}

TEST(MonoEpi, Examples) {
  const MonoEpi inc = mono_epi(sphere_into_disk(F, 3));
  EXPECT_TRUE(inc.mono);
  EXPECT_FALSE(inc.epi);
  EXPECT_TRUE(is_epi(disk_onto_sphere(F, 3)));
  EXPECT_TRUE(validate_map(disk_onto_sphere(F, 3)));
  const ChainComplex s = sphere(F, 0);
  const MonoEpi z = mono_epi(ChainMap::zero(s, s));
  EXPECT_FALSE(z.mono);
  EXPECT_FALSE(z.epi);
}

TEST(Pushout, OfZeros) {
  const ChainComplex a = disk(F, 1);
  const ChainComplex z = zero_complex(F);
  const Pushout po = pushout(ChainMap::zero(a, z), ChainMap::zero(a, z));
  EXPECT_TRUE(po.object().is_zero());
}

TEST(Pushout, DiskModBoundaryIsSphere) {
  for (int n = 1; n <= 3; ++n) {
    const ChainMap i = sphere_into_disk(F, n);
    const Pushout po = pushout(i, ChainMap::zero(i.source(), zero_complex(F)));
    EXPECT_TRUE(validate_complex(po.object()));
    EXPECT_EQ(homology_dims(po.object()), (Dims{{n, 1}})) << n;
  }
}

TEST(Pushout, MediatorSatisfiesCocone) {
  const ChainMap i = sphere_into_disk(F, 2);
  const ChainComplex d = disk(F, 2);
  const Pushout po = pushout(i, i);
  const ChainMap id = ChainMap::identity(d);
  const ChainMap m = po.mediator(id, id);
  EXPECT_EQ(compose(m, po.from_b), id);
  EXPECT_EQ(compose(m, po.from_c), id);
}

TEST(Pullback, OverZeroIsProduct) {
  const ChainComplex x = disk(F, 1), y = sphere(F, 3), z = zero_complex(F);
  const Pullback pb = pullback(ChainMap::zero(x, z), ChainMap::zero(y, z));
  EXPECT_EQ(pb.object().trimmed(), direct_sum(x, y).trimmed());
  const ChainMap m = pb.mediator(summand_projection({x, y}, 0, F), summand_projection({x, y}, 1, F));
  EXPECT_EQ(compose(pb.ker.inclusion, m), ChainMap::identity(direct_sum(x, y)));
}

TEST(Hom, SphereZeroIsIdentityFunctor) {
  const ChainComplex b = direct_sum(disk(F, 2), sphere(F, 0));
  EXPECT_EQ(hom_complex(sphere(F, 0), b).trimmed(), b.trimmed());
}

TEST(Hom, SphereNShiftsDown) {
  const ChainComplex b = direct_sum(disk(F, 2), sphere(F, 0));
  const ChainComplex h = hom_complex(sphere(F, 2), b);
  EXPECT_TRUE(validate_complex(h));
  for (int t = -4; t <= 3; ++t) EXPECT_EQ(h.dim(t), b.dim(t + 2)) << t;
  EXPECT_EQ(homology_dims(h), (Dims{{-2, 1}}));
}

TEST(Hom, CycleDimensionMatchesEnumeration) {
  const Field f2(2);
  const std::vector<std::pair<ChainComplex, ChainComplex>> cases{
      {disk(f2, 1), disk(f2, 1)},
      {disk(f2, 1), sphere(f2, 0)},
      {sphere(f2, 0), disk(f2, 1)},
      {direct_sum(disk(f2, 1), sphere(f2, 1)), direct_sum(disk(f2, 1), sphere(f2, 0))},
      {two_term(f2, Matrix::from_rows({{1, 1}}, f2)), two_term(f2, Matrix::from_rows({{1}, {0}}, f2))},
  };
  for (const auto& [a, b] : cases) {
    EXPECT_EQ(ipow(2, chain_hom_dim(a, b)), count_chain_maps(a, b));
  }
}

TEST(Hom, ElementRoundTrip) {
  const ChainMap i = sphere_into_disk(F, 2);
  const Matrix e = map_to_hom_element(i);
  EXPECT_EQ(hom_element_to_map(i.source(), i.target(), e), i);
}

TEST(Tensor, UnitAndSpheres) {
  const ChainComplex a = direct_sum(disk(F, 2), sphere(F, -1));
  EXPECT_EQ(tensor_complexes(a, sphere(F, 0)).trimmed(), a.trimmed());
  EXPECT_EQ(tensor_complexes(sphere(F, 2), sphere(F, 3)).trimmed(), sphere(F, 5));
}

TEST(Tensor, Kunneth) {
  const std::vector<ChainComplex> pieces{sphere(F, 0), sphere(F, 1), disk(F, 1),
                                         direct_sum(sphere(F, 1), disk(F, 2)),
                                         direct_sum(sphere(F, -1), sphere(F, 0))};
  for (const auto& a : pieces) {
    for (const auto& b : pieces) {
      const ChainComplex t = tensor_complexes(a, b);
      ASSERT_TRUE(validate_complex(t));
      Dims expect;
      for (auto [s, ha] : homology_dims(a))
        for (auto [u, hb] : homology_dims(b)) expect[s + u] += ha * hb;
      EXPECT_EQ(homology_dims(t), expect);
    }
  }
}

TEST(Shift, DegreesAndSign) {
  const ChainComplex d = disk(F, 1);
  const ChainComplex s = shift(d, 1);
  EXPECT_EQ(s.dim(2), 1u);
  EXPECT_EQ(s.dim(1), 1u);
  EXPECT_EQ(s.diff(2), -d.diff(1));
  EXPECT_EQ(shift(d, 0), d);
}

TEST(Fields, MixedPrimeRejected) {
  EXPECT_THROW(direct_sum(sphere(Field(3), 0), sphere(Field(5), 0)), FieldMismatch);
}

}  // namespace
}  // namespace smc
