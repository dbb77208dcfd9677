#include <gtest/gtest.h>

#include <random>

#include "stringnet/cylinder.hpp"
#include "stringnet/errors.hpp"
#include "stringnet/io.hpp"
#include "stringnet/oracle.hpp"

using namespace sn;

namespace {

CategoryDoc load(const std::string& n) {
  return load_category(std::string(SN_DATA_DIR) + "/categories/" + n + ".cat");
}

CDec circ(Obj X) { return {Manifold::circle, std::move(X)}; }

Vec random_vec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(Scalar(long(d(rng))));
  return v;
}

// pairs of labels whose products agree in both orders, read off the fusion rules
int commuting_pairs(const FusionCategory& C) {
  int n = 0;
  for (Label a = 0; a < C.rank(); ++a)
    for (Label b = 0; b < C.rank(); ++b) {
      bool same = true;
      for (Label c = 0; c < C.rank(); ++c) same = same && C.N(a, b, c) == C.N(b, a, c);
      n += same;
    }
  return n;
}

void check_category_laws(const CylinderCategory& C, std::mt19937& rng) {
  int n = C.object_count();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec f = random_vec(C.dim(i, j), rng);
      EXPECT_EQ(C.compose(i, j, j, C.identity(j), f), f) << C.object_name(i) << " " << C.object_name(j);
      EXPECT_EQ(C.compose(i, i, j, f, C.identity(i)), f) << C.object_name(i) << " " << C.object_name(j);
      for (int k = 0; k < n; ++k) {
        Vec g = random_vec(C.dim(j, k), rng);
        Vec h = random_vec(C.dim(k, i), rng);
        EXPECT_EQ(C.compose(i, k, i, h, C.compose(i, j, k, g, f)), C.compose(i, j, i, C.compose(j, k, i, h, g), f));
      }
    }
}

}  // namespace

TEST(CCircle, PointedSimpleCounts) {
  for (auto [name, want] : {std::pair<std::string, int>{"vec_z2", 4}, {"vec_z3", 9}}) {
    auto d = load(name);
    std::vector<CDec> objs;
    objs.push_back(circ({}));
    for (Label a = 1; a < d.cat->rank(); ++a) objs.push_back(circ(simple(a)));
    CCircle C(*d.engine, objs);
    auto S = simple_objects(C);
    EXPECT_TRUE(S.complete);
    EXPECT_EQ(int(S.simples.size()), want) << name;
    EXPECT_EQ(int(S.simples.size()), commuting_pairs(*d.cat)) << name;
    for (const auto& s : S.simples) EXPECT_EQ(karoubi_split(C, s.base, s.e).rank, 1);
  }
}

TEST(CCircle, IntervalSimplesAreLabels) {
  auto d = load("ising");
  std::vector<CDec> objs;
  for (Label a = 0; a < d.cat->rank(); ++a) objs.push_back({Manifold::interval, simple(a)});
  objs.push_back({Manifold::interval, {{1}, {1}}});
  CInterval C(*d.engine, objs);
  auto S = simple_objects(C);
  EXPECT_TRUE(S.complete);
  EXPECT_EQ(int(S.simples.size()), d.cat->rank());
}

TEST(CCircle, CategoryLaws) {
  auto d = load("fibonacci");
  CCircle C(*d.engine, {circ({}), circ(simple(1)), circ({{1}, {1}})});
  std::mt19937 rng(5);
  check_category_laws(C, rng);
}

TEST(CCircle, TwistIsNaturalAndInvertible) {
  auto d = load("ising");
  CCircle C(*d.engine, {circ({}), circ(simple(1)), circ(simple(2)), circ({{1}, {1}})});
  std::mt19937 rng(9);
  for (int i = 0; i < C.object_count(); ++i) {
    const Obj& X = C.object(i).points;
    auto L = C.end_algebra(i);
    Matrix T(C.dim(i, i), C.dim(i, i));
    Vec t = C.twist(X);
    for (size_t k = 0; k < L.size(); ++k) T += t[k] * L[k];
    EXPECT_TRUE(inverse(T).has_value()) << C.object_name(i);
    for (int j = 0; j < C.object_count(); ++j) {
      Vec f = random_vec(C.dim(i, j), rng);
      const Obj& Y = C.object(j).points;
      EXPECT_EQ(C.compose(i, j, j, C.twist(Y), f), C.compose(i, i, j, f, t));
    }
  }
}

TEST(FCircle, TrivialAlgebrasReproduceCCircle) {
  auto d = load("fibonacci");
  const Engine& E = *d.engine;
  std::vector<CDec> cs{circ({}), circ(simple(1)), circ({{1}, {1}})};
  std::vector<FDec> fs;
  for (const auto& c : cs) fs.push_back(trivial_decoration(E, c));
  CCircle C(E, cs);
  FCircle F(E, fs);
  std::mt19937 rng(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ASSERT_EQ(F.dim(i, j), C.dim(i, j));
      Vec f = random_vec(C.dim(i, j), rng);
      for (int k = 0; k < 3; ++k) {
        Vec g = random_vec(C.dim(j, k), rng);
        EXPECT_EQ(F.compose(i, j, k, g, f), C.compose(i, j, k, g, f));
      }
    }
  for (int i = 0; i < 3; ++i) EXPECT_EQ(F.twist(i), C.twist(cs[i].points));
}

TEST(FCircle, DimensionsMatchOracle) {
  auto d = load("vec_z2");
  const Engine& E = *d.engine;
  std::vector<FDec> fs{parse_fdec(d, {"circle", "A"}), parse_fdec(d, {"circle", "A", "R"}),
                       parse_fdec(d, {"circle", "A", "T"}), trivial_decoration(E, circ({})),
                       trivial_decoration(E, circ(simple(1)))};
  FCircle F(E, fs);
  int checked = 0;
  for (int i = 0; i < F.object_count(); ++i)
    for (int j = 0; j < F.object_count(); ++j) {
      OracleResult r;
      try {
        r = oracle_frob_annulus(E, fs[i], fs[j]);
      } catch (const BudgetExceeded&) {
        continue;
      }
      EXPECT_EQ(F.dim(i, j), r.dim) << F.object_name(i) << " -> " << F.object_name(j);
      ++checked;
    }
  EXPECT_EQ(checked, 25);
}

TEST(FCircle, IsingDimensionsMatchOracle) {
  auto d = load("ising");
  const Engine& E = *d.engine;
  std::vector<FDec> fs{parse_fdec(d, {"circle", "B"}), parse_fdec(d, {"circle", "B", "S"}),
                       parse_fdec(d, {"circle", "B", "U"}), trivial_decoration(E, circ(simple(1)))};
  FCircle F(E, fs);
  for (int i = 0; i < F.object_count(); ++i)
    for (int j = 0; j < F.object_count(); ++j)
      EXPECT_EQ(F.dim(i, j), oracle_frob_annulus(E, fs[i], fs[j]).dim) << F.object_name(i) << " -> " << F.object_name(j);
  std::mt19937 rng(23);
  check_category_laws(F, rng);
}

TEST(FCircle, CategoryLaws) {
  auto d = load("vec_z2");
  FCircle F(*d.engine, {parse_fdec(d, {"circle", "A"}), parse_fdec(d, {"circle", "A", "T"}),
                        trivial_decoration(*d.engine, circ(simple(1)))});
  std::mt19937 rng(13);
  check_category_laws(F, rng);
}

TEST(FCircle, TwistIsNatural) {
  auto d = load("vec_z2");
  FCircle F(*d.engine, {parse_fdec(d, {"circle", "A"}), parse_fdec(d, {"circle", "A", "R"}),
                        parse_fdec(d, {"circle", "A", "T"})});
  std::mt19937 rng(17);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec f = random_vec(F.dim(i, j), rng);
      EXPECT_EQ(F.compose(i, j, j, F.twist(j), f), F.compose(i, i, j, f, F.twist(i)));
    }
}

TEST(FCircle, SimplesMatchCCircle) {
  auto d = load("vec_z2");
  FCircle F(*d.engine, {parse_fdec(d, {"circle", "A"}), parse_fdec(d, {"circle", "A", "T"}),
                        trivial_decoration(*d.engine, circ({})), trivial_decoration(*d.engine, circ(simple(1)))});
  auto S = simple_objects(F);
  EXPECT_TRUE(S.complete);
  EXPECT_EQ(S.simples.size(), 4u);
}

TEST(FInterval, AveragedHoms) {
  auto d = load("vec_z2");
  EXPECT_THROW(parse_fdec(d, {"interval", "1", "T", "1"}), MalformedDecoration);
  EXPECT_THROW(parse_fdec(d, {"interval", "A", "R", "A"}), MalformedDecoration);
  FInterval F(*d.engine, {parse_fdec(d, {"interval", "1", "P", "A", "Q", "1"}),
                          parse_fdec(d, {"interval", "1", "P", "A", "R", "A", "Q", "1"}),
                          trivial_decoration(*d.engine, {Manifold::interval, simple(1)})});
  EXPECT_EQ(F.dim(0, 0), 2);
  EXPECT_EQ(F.dim(0, 1), 2);
  EXPECT_THROW(F.add(parse_fdec(d, {"circle", "A"})), MalformedDecoration);
  std::mt19937 rng(1);
  check_category_laws(F, rng);
}
