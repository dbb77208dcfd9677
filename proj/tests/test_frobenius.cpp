#include <gtest/gtest.h>

#include <algorithm>

#include "builders.hpp"
#include "stringnet/errors.hpp"
#include "stringnet/frobenius.hpp"

using namespace sn;
using namespace sntest;

namespace {

struct Z2Fixture {
  std::shared_ptr<FusionCategory> C = vec_zn(2);
  Engine E{C};
  AlgPtr A = std::make_shared<FrobAlgebra>(group_algebra(E, "A", {0, 1}));
};

}  // namespace

TEST(Frobenius, TrivialAlgebraIsValid) {
  auto C = fibonacci();
  Engine E(C);
  auto rep = check_dssfa(E, *trivial_algebra(E));
  EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Frobenius, GroupAlgebraIsValid) {
  Z2Fixture f;
  auto rep = check_dssfa(f.E, *f.A);
  EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Frobenius, UnscaledComultiplicationIsNotSeparable) {
  Z2Fixture f;
  FrobAlgebra B = *f.A;
  B.comult = Scalar(2) * B.comult;
  B.counit = Scalar(Rational(1, 2)) * B.counit;
  auto rep = check_dssfa(f.E, B);
  ASSERT_FALSE(rep.ok());
  bool named = std::any_of(rep.violations.begin(), rep.violations.end(),
                           [](const Violation& v) { return v.axiom == "Delta-separability"; });
  EXPECT_TRUE(named) << rep.str();
}

TEST(Frobenius, RegularBimoduleEndomorphisms) {
  Z2Fixture f;
  Bimodule M = regular_bimodule(f.E, f.A);
  EXPECT_TRUE(check_bimodule(f.E, M).ok());
  // graded maps (a on g0, b on g1) intertwine the actions only when a = b
  auto homs = bimodule_hom_space(f.E, M, M);
  EXPECT_EQ(homs.size(), 1u);
  for (const auto& h : homs) EXPECT_TRUE(is_bimodule_morphism(f.E, M, M, h));
}

TEST(Frobenius, TrivialAlgebraHomsArePlainHoms) {
  auto C = fibonacci();
  Engine E(C);
  AlgPtr one = trivial_algebra(E);
  ActionCoords none;
  Bimodule M = bimodule_from_coords(E, "M", one, one, {1, 1}, none);
  Bimodule N = bimodule_from_coords(E, "N", one, one, {0, 1}, none);
  EXPECT_TRUE(check_bimodule(E, M).ok());
  EXPECT_EQ(bimodule_hom_space(E, M, M).size(), 4u);
  EXPECT_EQ(bimodule_hom_space(E, M, N).size(), 2u);
  EXPECT_EQ(int(bimodule_hom_space(E, N, N).size()), E.hom_dim(N.M(), N.M()));
}

TEST(Frobenius, RelativeTensorOverA) {
  Z2Fixture f;
  Bimodule M = regular_bimodule(f.E, f.A);
  Mor p = averaging_idempotent(f.E, M, M);
  EXPECT_EQ(p * p, p);
  RelativeTensor r = relative_tensor(f.E, M, M);
  Site got = r.product.obj, want = f.A->obj;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(r.proj * r.incl, f.E.id(r.product.M()));
  EXPECT_TRUE(check_bimodule(f.E, r.product).ok());
  // mult restricted to the image is an isomorphism onto A
  Mor m = f.A->mult * r.incl;
  Mor back = r.proj * f.A->comult;
  EXPECT_EQ(m * back, f.E.id(f.A->A()));
}

TEST(Frobenius, TensorOverTrivialAlgebraIsPlain) {
  auto C = fibonacci();
  Engine E(C);
  AlgPtr one = trivial_algebra(E);
  ActionCoords none;
  Bimodule M = bimodule_from_coords(E, "M", one, one, {1}, none);
  RelativeTensor r = relative_tensor(E, M, M);
  EXPECT_EQ(r.product.obj.size(), 2u);
}

TEST(Frobenius, MismatchedAlgebrasThrow) {
  Z2Fixture f;
  AlgPtr one = trivial_algebra(f.E);
  Bimodule M = regular_bimodule(f.E, f.A);
  Bimodule N = free_bimodule(f.E, one, {1}, one);
  EXPECT_THROW(averaging_idempotent(f.E, M, N), AlgebraMismatch);
  EXPECT_THROW(bimodule_hom_space(f.E, M, N), AlgebraMismatch);
}

TEST(Frobenius, FreeBimoduleIsValid) {
  Z2Fixture f;
  Bimodule M = free_bimodule(f.E, f.A, {1}, f.A);
  EXPECT_TRUE(check_bimodule(f.E, M).ok());
  EXPECT_EQ(M.obj.size(), 4u);
  // Hom(AXA, AXA) as bimodules equals Hom_C(X, AXA)
  EXPECT_EQ(int(bimodule_hom_space(f.E, M, M).size()), f.E.hom_dim({{1}}, M.M()));
}

TEST(Frobenius, RelativeTensorAssociatesUpToIso) {
  Z2Fixture f;
  Bimodule M = free_bimodule(f.E, f.A, {1}, f.A);
  Bimodule R = regular_bimodule(f.E, f.A);
  auto left = relative_tensor(f.E, relative_tensor(f.E, M, R).product, M);
  auto right = relative_tensor(f.E, M, relative_tensor(f.E, R, M).product);
  EXPECT_EQ(left.product.obj.size(), right.product.obj.size());
}
