#include <gtest/gtest.h>

#include <random>

#include "stringnet/algebra.hpp"
#include "stringnet/errors.hpp"
#include "stringnet/linalg.hpp"

using namespace sn;

namespace {

std::shared_ptr<NumberField> sqrt5() {
  return std::make_shared<NumberField>("Q(sqrt5)", "r", std::vector<Rational>{-5, 0, 1}, 2.236);
}

std::shared_ptr<NumberField> cyclo3() {
  return std::make_shared<NumberField>("Q(w)", "w", std::vector<Rational>{1, 1, 1});
}

Scalar random_scalar(std::mt19937& rng, const NumberField* K) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Scalar(K, c);
}

Matrix from_rows(std::vector<std::vector<Scalar>> rows) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
  return m;
}

// left-multiplication table of a group algebra of Z/n in the basis g^0..g^{n-1}
std::vector<Matrix> cyclic_group_algebra(int n) {
  std::vector<Matrix> L;
  for (int i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) m((i + j) % n, j) = Scalar(1);
    L.push_back(m);
  }
  return L;
}

}  // namespace

TEST(NumberField, PowersReduceModuloMinimalPolynomial) {
  auto K = sqrt5();
  EXPECT_EQ(K->power(2), (std::vector<Rational>{5, 0}));
  auto w = cyclo3();
  EXPECT_EQ(w->power(2), (std::vector<Rational>{-1, -1}));
}

TEST(NumberField, RejectsReducibleMinimalPolynomials) {
  EXPECT_THROW(NumberField("bad", "x", {-4, 0, 1}), FieldError);
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational root
  EXPECT_THROW(NumberField("bad", "x", {4, 0, 0, 0, 1}), FieldError);
  EXPECT_NO_THROW(NumberField("ok", "x", {-2, 0, 0, 0, 1}));
  EXPECT_THROW(NumberField("bad", "x", {1, 2}), FieldError);
}

TEST(NumberField, HintedEmbeddingComesFirst) {
  auto K = sqrt5();
  EXPECT_NEAR(double(K->embeddings()[0].real()), 2.2360679, 1e-6);
  auto L = std::make_shared<NumberField>("Q(sqrt5)", "r", std::vector<Rational>{-5, 0, 1}, -2.2);
  EXPECT_NEAR(double(L->embeddings()[0].real()), -2.2360679, 1e-6);
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  std::vector<std::shared_ptr<NumberField>> fields{
      sqrt5(), cyclo3(),
      std::make_shared<NumberField>("Q(c)", "c", std::vector<Rational>{-2, 0, 0, 1})};
  for (const auto& K : fields) {
    for (int t = 0; t < 40; ++t) {
      Scalar a = random_scalar(rng, K.get()), b = random_scalar(rng, K.get()),
             c = random_scalar(rng, K.get());
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
    }
  }
}

TEST(Scalar, RationalPromotion) {
  auto K = sqrt5();
  Scalar r = Scalar::generator(K.get());
  EXPECT_EQ(r * r, Scalar(5));
  EXPECT_EQ((Scalar(1) + r) * Rational(1, 2) * ((Scalar(1) + r) * Rational(1, 2)),
            (Scalar(1) + r) * Rational(1, 2) + Scalar(1));
  auto other = cyclo3();
  EXPECT_THROW(r + Scalar::generator(other.get()), FieldError);
}

TEST(Linalg, SolveIdentity) {
  Matrix b(2, 1);
  b(0, 0) = Scalar(1);
  b(1, 0) = Scalar(2);
  auto x = solve_linear(Matrix::identity(2), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Linalg, SolveInconsistent) {
  Matrix A = from_rows({{1, 1}, {1, 1}});
  Matrix b = from_rows({{1}, {0}});
  EXPECT_FALSE(solve_linear(A, b));
  EXPECT_THROW(solve_linear(A, Matrix(3, 1)), ContractViolation);
}

TEST(Linalg, SolveFreeVariablesZero) {
  Matrix A = from_rows({{1, 2, 3}});
  Matrix b = from_rows({{6}});
  auto x = solve_linear(A, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, from_rows({{6}, {0}, {0}}));
}

TEST(Linalg, RandomSystemsOverSqrt5RoundTrip) {
  auto K = sqrt5();
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    Matrix A(5, 5), b(5, 1);
    for (int i = 0; i < 5; ++i) {
      b(i, 0) = random_scalar(rng, K.get());
      for (int j = 0; j < 5; ++j) A(i, j) = random_scalar(rng, K.get());
    }
    auto x = solve_linear(A, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(A * *x, b);
    auto inv = inverse(A);
    ASSERT_TRUE(inv);
    EXPECT_EQ(A * *inv, Matrix::identity(5));
  }
}

TEST(Linalg, NullspaceIsKernel) {
  Matrix A = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  Matrix N = nullspace(A);
  EXPECT_EQ(N.cols(), 1);
  EXPECT_TRUE((A * N).is_zero());
}

TEST(RankFactor, ZeroIdempotent) {
  auto [U, V] = rank_factor(Matrix(3, 3));
  EXPECT_EQ(U.rows(), 3);
  EXPECT_EQ(U.cols(), 0);
  EXPECT_EQ(V.rows(), 0);
  EXPECT_EQ(V.cols(), 3);
}

TEST(RankFactor, Identity) {
  auto [U, V] = rank_factor(Matrix::identity(3));
  EXPECT_EQ(U, Matrix::identity(3));
  EXPECT_EQ(V, Matrix::identity(3));
}

TEST(RankFactor, HalfOnesMatrix) {
  Matrix e = from_rows({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
  auto [U, V] = rank_factor(e);
  EXPECT_EQ(U.cols(), 1);
  EXPECT_EQ(U * V, e);
  EXPECT_EQ(V * U, Matrix::identity(1));
}

TEST(RankFactor, RandomConjugatedProjections) {
  auto K = sqrt5();
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    Matrix P(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) P(i, j) = random_scalar(rng, K.get());
    auto Pi = inverse(P);
    ASSERT_TRUE(Pi);
    Matrix D(4, 4);
    for (int i = 0; i <= t % 4; ++i) D(i, i) = Scalar(1);
    Matrix e = P * D * *Pi;
    auto [U, V] = rank_factor(e);
    EXPECT_EQ(U * V, e);
    EXPECT_EQ(V * U, Matrix::identity(t % 4 + 1));
  }
}

TEST(RankFactor, NonIdempotentNamesEntry) {
  Matrix e = from_rows({{1, 1}, {0, 1}});
  try {
    rank_factor(e);
    FAIL();
  } catch (const IdempotentViolation& ex) {
    EXPECT_NE(std::string(ex.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(Quotient, ReduceAndCoordinates) {
  Quotient q(3, {{Scalar(1), Scalar(-1), Scalar(0)}});
  EXPECT_EQ(q.dim(), 2);
  auto a = q.coords({Scalar(1), Scalar(0), Scalar(0)});
  auto b = q.coords({Scalar(0), Scalar(1), Scalar(0)});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(q.in_relations({Scalar(2), Scalar(-2), Scalar(0)}));
}

TEST(Decompose, OneDimensional) {
  auto es = decompose_algebra({Matrix::identity(1)});
  ASSERT_EQ(es.size(), 1u);
  EXPECT_EQ(es[0], (Vec{Scalar(1)}));
}

TEST(Decompose, GroupAlgebraZ2) {
  auto es = decompose_algebra(cyclic_group_algebra(2));
  ASSERT_EQ(es.size(), 2u);
  Vec plus{Rational(1, 2), Rational(1, 2)}, minus{Rational(1, 2), Rational(-1, 2)};
  EXPECT_TRUE((es[0] == plus && es[1] == minus) || (es[0] == minus && es[1] == plus));
}

TEST(Decompose, GroupAlgebraZ3NeedsCubeRootsOfUnity) {
  EXPECT_THROW(decompose_algebra(cyclic_group_algebra(3)), NotSplit);
  auto K = cyclo3();
  auto L = cyclic_group_algebra(3);
  for (auto& m : L) m *= Scalar::one(K.get());
  EXPECT_EQ(decompose_algebra(L).size(), 3u);
}

TEST(Decompose, TubeAlgebraOfVecZ2) {
  // basis (X, x) for X, x in Z/2, product (X,x)(X,y) = (X,x+y), zero across X
  std::vector<Matrix> L;
  for (int X = 0; X < 2; ++X)
    for (int x = 0; x < 2; ++x) {
      Matrix m(4, 4);
      for (int y = 0; y < 2; ++y) m(2 * X + (x + y) % 2, 2 * X + y) = Scalar(1);
      L.push_back(m);
    }
  // commuting pairs (g,h) in Z/2 x Z/2: all four
  EXPECT_EQ(decompose_algebra(L).size(), 4u);
}

TEST(Decompose, NotSemisimple) {
  // k[x]/x^2
  Matrix one = Matrix::identity(2);
  Matrix x(2, 2);
  x(1, 0) = Scalar(1);
  EXPECT_THROW(decompose_algebra({one, x}), NotSemisimple);
}

TEST(Decompose, MatrixAlgebraPrimitiveVersusCentral) {
  // M_2(Q) in the basis E11, E12, E21, E22
  std::vector<Matrix> L;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Matrix m(4, 4);
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c) m(2 * a + d, 2 * c + d) = Scalar(1);
      L.push_back(m);
    }
  EXPECT_EQ(decompose_algebra(L).size(), 1u);
  EXPECT_EQ(primitive_idempotents(L).size(), 2u);
}

TEST(Roots, FindsGoldenRatio) {
  auto K = sqrt5();
  auto roots = roots_in_field({Scalar(-1), Scalar(-1), Scalar(1)}, K.get());
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_EQ(r * r, r + Scalar(1));
}
