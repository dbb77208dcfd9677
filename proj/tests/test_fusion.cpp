#include <gtest/gtest.h>

#include <cmath>

#include "builders.hpp"
#include "stringnet/errors.hpp"
#include "stringnet/fusion_tree.hpp"
#include "stringnet/tensor.hpp"

using namespace sn;
using namespace sntest;

TEST(Fusion, VecZ2Validates) {
  auto C = vec_zn(2);
  auto rep = validate(*C);
  EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Fusion, FibonacciValidates) {
  auto C = fibonacci();
  auto rep = validate(*C);
  EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Fusion, FibonacciQdimIsGoldenRatio) {
  auto C = fibonacci();
  Scalar r = Scalar::generator(C->field());
  Scalar phi = (Scalar(1) + r) / Scalar(2);
  EXPECT_EQ(C->qdim(1), phi);
  EXPECT_EQ(C->qdim_left(1), phi);
  EXPECT_EQ(C->global_dim(), Scalar(1) + phi * phi);
}

TEST(Fusion, NegatedFEntryBreaksPentagon) {
  auto C = fibonacci();
  Matrix F = C->F(1, 1, 1, 1);
  F(1, 1) = -F(1, 1);
  // keep it invertible so only the pentagon can catch it
  C->set_F(1, 1, 1, 1, F);
  auto rep = check_pentagon(*C);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations[0].axiom, "pentagon");
}

TEST(Fusion, FMoveRoundTrip) {
  auto C = fibonacci();
  for (const auto& t : left_combed_trees(*C, {1, 1, 1, 1}, 1)) {
    TreeCombo start{{t, Scalar(1)}};
    auto back = f_move(*C, f_move(*C, start, "L"), "L", true);
    EXPECT_EQ(back, start) << t.str(*C);
  }
}

TEST(Fusion, AllTreesCountMatchesHomDimension) {
  auto C = fibonacci();
  Engine E(C);
  // every bracketing spans the same space
  std::vector<Label> ls{1, 1, 1, 1};
  for (Label root = 0; root < 2; ++root) {
    int lc = static_cast<int>(left_combed_trees(*C, ls, root).size());
    EXPECT_EQ(lc, E.dimV({{1}, {1}, {1}, {1}}, root));
  }
  EXPECT_EQ(static_cast<int>(left_combed_trees(*C, ls, 1).size()), 3);
  EXPECT_EQ(static_cast<int>(left_combed_trees(*C, ls, 0).size()), 2);
}

TEST(Fusion, HomDimensions) {
  auto Z2 = vec_zn(2);
  Engine E2(Z2);
  EXPECT_EQ(hom_dimension(E2, {1}, {1}), 1);
  EXPECT_EQ(hom_dimension(E2, {1}, {0}), 0);
  EXPECT_EQ(hom_dimension(E2, {1, 1}, {}), 1);
  auto F = fibonacci();
  Engine EF(F);
  EXPECT_EQ(hom_dimension(EF, {1, 1}, {1, 1}), 2);
  EXPECT_EQ(hom_dimension(EF, {1, 1, 1}, {1, 1, 1}), 5);
  EXPECT_THROW(hom_dimension(EF, {7}, {1}), UnknownLabel);
}

TEST(Fusion, TensorIsFunctorial) {
  auto C = fibonacci();
  Engine E(C);
  Obj X{{1}, {1}}, Y{{1}};
  int n = E.hom_dim(X, X);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mor f = E.basis_mor(X, X, i), g = E.basis_mor(X, X, j);
      Mor lhs = E.tensor(g * f, E.id(Y));
      Mor rhs = E.tensor(g, E.id(Y)) * E.tensor(f, E.id(Y));
      EXPECT_EQ(lhs, rhs);
      Mor l2 = E.tensor(E.id(Y), g * f);
      Mor r2 = E.tensor(E.id(Y), g) * E.tensor(E.id(Y), f);
      EXPECT_EQ(l2, r2);
    }
}

TEST(Fusion, TensorAssociatesStrictly) {
  auto C = fibonacci();
  Engine E(C);
  Obj X{{1}, {1}};
  Mor f = E.basis_mor(X, X, 1);
  Mor g = E.basis_mor(X, X, 0);
  Mor h = E.split_vertex(1, 1, 1, 0);
  EXPECT_EQ(E.tensor(E.tensor(f, g), h), E.tensor(f, E.tensor(g, h)));
  // interchange law
  Mor a = E.basis_mor(X, X, 0), b = E.basis_mor(X, X, 1);
  EXPECT_EQ(E.tensor(a * f, b * g), E.tensor(a, b) * E.tensor(f, g));
}

TEST(Fusion, DirectSumSitesSplit) {
  auto C = fibonacci();
  Engine E(C);
  Site s{0, 1};
  Mor sum = E.summand_in(s, 0) * E.summand_out(s, 0) + E.summand_in(s, 1) * E.summand_out(s, 1);
  EXPECT_EQ(sum, E.id({s}));
  EXPECT_EQ(E.summand_out(s, 1) * E.summand_in(s, 1), E.id(simple(1)));
  EXPECT_TRUE((E.summand_out(s, 0) * E.summand_in(s, 1)).is_zero());
}

TEST(Fusion, TreeInOutAreDual) {
  auto C = fibonacci();
  Engine E(C);
  Obj W{{1}, {1}, {1}};
  for (Label s = 0; s < 2; ++s) {
    int n = E.dimV(W, s);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mor p = E.tree_out(W, s, j) * E.tree_in(W, s, i);
        EXPECT_EQ(p, i == j ? E.id(simple(s)) : E.zero(simple(s), simple(s)));
      }
  }
  Mor total = E.zero(W, W);
  for (Label s = 0; s < 2; ++s)
    for (int i = 0; i < E.dimV(W, s); ++i) total = total + E.tree_in(W, s, i) * E.tree_out(W, s, i);
  EXPECT_EQ(total, E.id(W));
}

TEST(Fusion, TraceIsCyclic) {
  auto C = fibonacci();
  Engine E(C);
  Obj X{{1}, {1}}, Y{{1}};
  int n = E.hom_dim(X, Y);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mor f = E.basis_mor(X, Y, i);
      Mor g = E.basis_mor(Y, X, j);
      EXPECT_EQ(E.trace(f * g), E.trace(g * f));
      EXPECT_EQ(E.trace(f * g), E.trace_left(f * g));
    }
}

TEST(Fusion, MultiSiteZigzag) {
  auto C = fibonacci();
  Engine E(C);
  Obj X{{1}, {0, 1}};
  Obj Xd = E.dual(X);
  EXPECT_EQ(E.tensor(E.id(X), E.ev(X)) * E.tensor(E.coev(X), E.id(X)), E.id(X));
  EXPECT_EQ(E.tensor(E.ev(X), E.id(Xd)) * E.tensor(E.id(Xd), E.coev(X)), E.id(Xd));
  EXPECT_EQ(E.tensor(E.rev(X), E.id(X)) * E.tensor(E.id(X), E.rcoev(X)), E.id(X));
  EXPECT_EQ(E.tensor(E.id(Xd), E.rev(X)) * E.tensor(E.rcoev(X), E.id(Xd)), E.id(Xd));
}

namespace {

// Independent pentagon residuals for Fibonacci in floating point, with the
// unit-leg symbols fixed to 1 and F^{ttt}_t = [[a, 1], [c, d]].
std::vector<double> fib_pentagon_residuals(const std::vector<double>& v) {
  auto N = [](int a, int b, int c) { return a == 0 ? b == c : b == 0 ? a == c : (c == 0 || c == 1); };
  auto F = [&](int a, int b, int c, int d, int e, int f) -> double {
    if (!N(a, b, e) || !N(e, c, d) || !N(b, c, f) || !N(a, f, d)) return 0;
    if (a == 1 && b == 1 && c == 1 && d == 1) {
      if (e == 0) return f == 0 ? v[0] : 1.0;
      return f == 0 ? v[1] : v[2];
    }
    return 1;
  };
  std::vector<double> r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e)
            for (int x = 0; x < 2; ++x)
              for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                  for (int w = 0; w < 2; ++w) {
                    if (!N(a, b, x) || !N(x, c, y) || !N(y, d, e)) continue;
                    if (!N(c, d, z) || !N(b, z, w) || !N(a, w, e)) continue;
                    double lhs = F(x, c, d, e, y, z) * F(a, b, z, e, x, w);
                    double rhs = 0;
                    for (int u = 0; u < 2; ++u) rhs += F(a, b, c, y, x, u) * F(a, u, d, e, y, w) * F(b, c, d, w, u, z);
                    r.push_back(lhs - rhs);
                  }
  return r;
}

std::vector<double> newton_fib(std::vector<double> v) {
  for (int it = 0; it < 100; ++it) {
    auto r = fib_pentagon_residuals(v);
    std::vector<std::vector<double>> J(r.size(), std::vector<double>(3));
    for (int k = 0; k < 3; ++k) {
      auto w = v;
      w[k] += 1e-7;
      auto rk = fib_pentagon_residuals(w);
      for (size_t i = 0; i < r.size(); ++i) J[i][k] = (rk[i] - r[i]) / 1e-7;
    }
    // normal equations with partial pivoting
    double M[3][4] = {};
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q)
        for (size_t i = 0; i < r.size(); ++i) M[p][q] += J[i][p] * J[i][q];
      for (size_t i = 0; i < r.size(); ++i) M[p][3] -= J[i][p] * r[i];
    }
    for (int p = 0; p < 3; ++p) {
      int best = p;
      for (int q = p + 1; q < 3; ++q)
        if (std::abs(M[q][p]) > std::abs(M[best][p])) best = q;
      std::swap(M[p], M[best]);
      if (std::abs(M[p][p]) < 1e-14) return v;
      for (int q = 0; q < 3; ++q) {
        if (q == p) continue;
        double f = M[q][p] / M[p][p];
        for (int k = p; k < 4; ++k) M[q][k] -= f * M[p][k];
      }
    }
    for (int p = 0; p < 3; ++p) v[p] += M[p][3] / M[p][p];
  }
  return v;
}

}  // namespace

TEST(Fusion, ShippedFibonacciMatchesPentagonSolver) {
  auto sol = newton_fib({0.5, 0.5, -0.5});
  double worst = 0;
  for (double r : fib_pentagon_residuals(sol)) worst = std::max(worst, std::abs(r));
  ASSERT_LT(worst, 1e-10);
  auto C = fibonacci();
  const Matrix& F = C->F(1, 1, 1, 1);
  EXPECT_NEAR(double(F(0, 0).embed(0).real()), sol[0], 1e-9);
  EXPECT_NEAR(double(F(1, 0).embed(0).real()), sol[1], 1e-9);
  EXPECT_NEAR(double(F(1, 1).embed(0).real()), sol[2], 1e-9);
  // the loop value is the positive root of x^2 - x - 1
  EXPECT_NEAR(double(C->qdim(1).embed(0).real()), (1 + std::sqrt(5.0)) / 2, 1e-12);
}
