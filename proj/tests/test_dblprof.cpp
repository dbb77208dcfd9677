#include <gtest/gtest.h>

#include <random>

#include "stringnet/fragment.hpp"
#include "stringnet/io.hpp"

using namespace sn;

namespace {

CategoryDoc load(const std::string& n) {
  return load_category(std::string(SN_DATA_DIR) + "/categories/" + n + ".cat");
}

void expect_ok(const CheckReport& r) {
  for (const auto& it : r.items) EXPECT_TRUE(it.pass) << it.name << ": " << it.witness;
  EXPECT_FALSE(r.items.empty());
}

std::vector<FDec> z2_circles(const CategoryDoc& d) {
  return {parse_fdec(d, {"circle", "A"}), parse_fdec(d, {"circle", "A", "R"}), parse_fdec(d, {"circle", "A", "T"}),
          trivial_decoration(*d.engine, {Manifold::circle, {}}),
          trivial_decoration(*d.engine, {Manifold::circle, simple(1)})};
}

std::vector<int> times(const std::vector<std::vector<int>>& K, const std::vector<int>& x) {
  std::vector<int> out(K.size(), 0);
  for (size_t t = 0; t < K.size(); ++t)
    for (size_t s = 0; s < x.size(); ++s) out[t] += K[t][s] * x[s];
  return out;
}

// a Mat category containing the images K a of all objects of A
FinLinCategory image_category(const std::string& name, const FinLinCategory& A, const std::vector<std::vector<int>>& K,
                              std::mt19937& rng) {
  std::vector<std::vector<int>> objs;
  for (const auto& a : A.mat_objects) {
    auto x = times(K, a);
    if (std::find(objs.begin(), objs.end(), x) == objs.end()) objs.push_back(x);
  }
  std::vector<int> extra(K.size());
  for (auto& e : extra) e = std::uniform_int_distribution<int>(0, 1)(rng);
  if (std::find(objs.begin(), objs.end(), extra) == objs.end()) objs.push_back(extra);
  return mat_category(name, int(K.size()), objs);
}

}  // namespace

TEST(FinLin, MatCategoryLaws) {
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    FinLinCategory A = random_mat_category("A", rng);
    expect_ok(A.check());
    Profunctor U = identity_profunctor(A);
    expect_ok(U.check());
  }
}

TEST(FinLin, CoendDimensionMatchesClosedForm) {
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    FinLinCategory A = random_mat_category("A", rng), B = random_mat_category("B", rng), C = random_mat_category("C", rng);
    auto K = random_multiplicities(rng, B.mat_simples, A.mat_simples, 1);
    auto L = random_multiplicities(rng, C.mat_simples, B.mat_simples, 1);
    Profunctor P = mat_profunctor(A, B, K), Q = mat_profunctor(B, C, L);
    expect_ok(P.check());
    ProfComposite PQ = prof_compose(P, Q);
    expect_ok(PQ.prof.check());
    std::vector<bool> covered(B.mat_simples, false);
    for (const auto& b : B.mat_objects)
      for (int u = 0; u < B.mat_simples; ++u) covered[u] = covered[u] || b[u] > 0;
    for (int a = 0; a < A.size(); ++a)
      for (int c = 0; c < C.size(); ++c) {
        auto Ka = times(K, A.mat_objects[a]);
        int expected = 0;
        for (int u = 0; u < B.mat_simples; ++u) {
          if (!covered[u]) continue;
          int Lc = 0;
          for (int s = 0; s < C.mat_simples; ++s) Lc += L[s][u] * C.mat_objects[c][s];
          expected += Ka[u] * Lc;
        }
        EXPECT_EQ(PQ.prof.dim(a, c), expected);
      }
  }
}

TEST(FinLin, UnitorsAndAssociatorInvertible) {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    FinLinCategory A = random_mat_category("A", rng), B = random_mat_category("B", rng),
                   C = random_mat_category("C", rng), D = random_mat_category("D", rng);
    Profunctor P = mat_profunctor(A, B, random_multiplicities(rng, B.mat_simples, A.mat_simples));
    Profunctor Q = mat_profunctor(B, C, random_multiplicities(rng, C.mat_simples, B.mat_simples));
    Profunctor R = mat_profunctor(C, D, random_multiplicities(rng, D.mat_simples, C.mat_simples));
    Profunctor UA = identity_profunctor(A), UB = identity_profunctor(B);
    std::string w;
    EXPECT_TRUE(all_invertible(left_unitor(prof_compose(UA, P)), &w)) << w;
    EXPECT_TRUE(all_invertible(right_unitor(prof_compose(P, UB)), &w)) << w;
    ProfComposite PQ = prof_compose(P, Q), QR = prof_compose(Q, R);
    ProfComposite PQ_R = prof_compose(PQ.prof, R), P_QR = prof_compose(P, QR.prof);
    EXPECT_TRUE(all_invertible(associator(PQ, PQ_R, QR, P_QR), &w)) << "triple " << t << ": " << w;
  }
}

TEST(FinLin, YankingForRandomFunctors) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    FinLinCategory A = random_mat_category("A", rng, 3, 2, 1);
    auto K = random_multiplicities(rng, std::uniform_int_distribution<int>(1, 2)(rng), A.mat_simples, 1);
    FinLinCategory B = image_category("B", A, K, rng);
    LinFunctor F = mat_functor(A, B, K);
    expect_ok(F.check());
    Profunctor UA = identity_profunctor(A), UB = identity_profunctor(B);
    expect_ok(companion(F, UA, UB).yanking);
    expect_ok(conjoint(F, UA, UB).yanking);
  }
}

TEST(FinLin, SquareCompositionLaws) {
  std::mt19937 rng(13);
  FinLinCategory A = random_mat_category("A", rng, 3, 2);
  Profunctor UA = identity_profunctor(A);
  ProfSquare id = identity_square(UA);
  expect_ok(id.check());
  ProfSquare v = vcompose(id, id);
  EXPECT_EQ(v.comp, id.comp);
  ProfComposite UU = prof_compose(UA, UA);
  ProfSquare h = hcompose(id, id, UU, UU);
  expect_ok(h.check());
  for (const auto& [k, M] : h.comp) EXPECT_EQ(M, Matrix::identity(M.rows()));
}

TEST(WeakInvertibility, IdentityAndProjection) {
  FinLinCategory A = mat_category("A", 2, {{1, 0}, {1, 1}, {0, 2}});
  Profunctor UA = identity_profunctor(A);
  EquivalenceData e = identity_equivalence(A);
  expect_ok(e.check());
  WeakInverse w = check_weak_invertibility(identity_square(UA), e, e);
  EXPECT_TRUE(w.invertible) << w.witness;
  ProfSquare proj = projection_square(A, UA, 0);
  expect_ok(proj.check());
  WeakInverse bad = check_weak_invertibility(proj, e, e);
  EXPECT_FALSE(bad.invertible);
  EXPECT_FALSE(bad.witness.empty());
}

TEST(WeakInvertibility, UcorSquareInvertsToPhi) {
  auto d = load("vec_z2");
  CircleTransform T(*d.engine, z2_circles(d));
  auto s = ucor_square(T);
  expect_ok(s->frob.check());
  expect_ok(s->field.check());
  expect_ok(s->square.check());
  expect_ok(s->left.check());
  WeakInverse w = check_weak_invertibility(s->square, s->left, s->right);
  ASSERT_TRUE(w.invertible) << w.witness;
  for (const auto& [k, X] : w.inverse) EXPECT_EQ(X, s->phi.mor.at(k));
}

TEST(WeakInvertibility, UcorRectanglesInvert) {
  auto d = load("vec_z2");
  IntervalTransform T(*d.engine, {parse_fdec(d, {"interval", "1", "P", "A", "Q", "1"}),
                                  parse_fdec(d, {"interval", "1", "P", "A", "R", "A", "Q", "1"})});
  auto s = ucor_square(T);
  WeakInverse w = check_weak_invertibility(s->square, s->left, s->right);
  EXPECT_TRUE(w.invertible) << w.witness;
}

TEST(Fold, StrongForUcorAndNotForProjection) {
  auto d = load("vec_z2");
  CircleTransform T(*d.engine, z2_circles(d));
  auto s = ucor_square(T);
  CompanionData fc = companion(s->f, s->U_frob, s->U_field);
  expect_ok(fc.yanking);
  Folded f = fold(s->square, fc, fc);
  EXPECT_TRUE(f.strong) << f.witness;

  FinLinCategory A = mat_category("A", 2, {{1, 0}, {1, 1}});
  Profunctor UA = identity_profunctor(A);
  LinFunctor I = identity_functor(A);
  CompanionData ic = companion(I, UA, UA);
  Folded g = fold(projection_square(A, UA, 1), ic, ic);
  EXPECT_FALSE(g.strong);
  EXPECT_FALSE(g.witness.empty());
}

TEST(VerticalTransformation, IdentityAndUcor) {
  auto d = load("vec_z2");
  CircleTransform T(*d.engine, z2_circles(d));
  FragmentModel F = frob_fragment(T), K = field_fragment(T);
  std::vector<Matrix> id;
  for (int dim : F.dims) id.push_back(Matrix::identity(dim));
  expect_ok(check_vertical_transformation(F, F, id));
  expect_ok(check_vertical_transformation(F, K, ucor_components(T)));
}

TEST(VerticalTransformation, RescaledSquareFails) {
  auto d = load("vec_z2");
  CircleTransform T(*d.engine, z2_circles(d));
  FragmentModel F = frob_fragment(T), K = field_fragment(T);
  auto theta = ucor_components(T);
  theta[1] *= Scalar(2);
  CheckReport r = check_vertical_transformation(F, K, theta);
  bool horizontal_failed = false;
  for (const auto& it : r.items)
    if (!it.pass && it.name.rfind("horizontal functoriality", 0) == 0) {
      horizontal_failed = true;
      EXPECT_FALSE(it.witness.empty());
    }
  EXPECT_TRUE(horizontal_failed);
}

TEST(Pants, OpenPantsPlan) {
  auto d = load("vec_z2");
  std::vector<FDec> legs{parse_fdec(d, {"interval", "1", "P", "A", "Q", "1"})};
  std::vector<FDec> outs{parse_fdec(d, {"interval", "1", "P", "A", "Q", "1"}),
                         parse_fdec(d, {"interval", "1", "P", "A", "Q", "1", "P", "A", "Q", "1"})};
  expect_ok(pants_suite(*d.engine, legs, outs));
}
