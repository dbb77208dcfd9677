#include <gtest/gtest.h>

#include "stringnet/errors.hpp"
#include "stringnet/io.hpp"

using namespace sn;

namespace {

std::string cat_path(const std::string& n) { return std::string(SN_DATA_DIR) + "/categories/" + n + ".cat"; }
std::string mut_path(const std::string& n) { return std::string(SN_DATA_DIR) + "/mutations/" + n + ".cat"; }

ValidationReport full_check(const CategoryDoc& d) {
  if (!d.structure.ok()) return d.structure;
  return validate(*d.cat);
}

}  // namespace

TEST(Scalars, ParsesPolynomialExpressions) {
  auto K = std::make_shared<NumberField>("Q(r)", "r", std::vector<Rational>{-5, 0, 1}, 2.236);
  Scalar r = Scalar::generator(K.get());
  EXPECT_EQ(parse_scalar("(1 + r)/2", K.get()), (Scalar(1) + r) / Scalar(2));
  EXPECT_EQ(parse_scalar("r^2 - 5", K.get()), Scalar(0));
  EXPECT_EQ(parse_scalar("-3/4 * r", K.get()), Scalar(Rational(-3, 4)) * r);
  EXPECT_EQ(parse_scalar("r^-1", K.get()), r / Scalar(5));
  std::map<std::string, Scalar> vars{{"phi", (Scalar(1) + r) / Scalar(2)}};
  EXPECT_EQ(parse_scalar("phi^2 - phi", K.get(), vars), Scalar(1));
}

TEST(Scalars, RejectsBadExpressions) {
  auto Q = NumberField::rationals();
  EXPECT_THROW(parse_scalar("1.5", Q.get()), ParseError);
  EXPECT_THROW(parse_scalar("1/0", Q.get()), ParseError);
  EXPECT_THROW(parse_scalar("x", Q.get()), ParseError);
  EXPECT_THROW(parse_scalar("(1", Q.get()), ParseError);
  try {
    parse_scalar("2 + y", Q.get(), {}, 7, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 7);
    EXPECT_EQ(e.column, 14);
  }
}

TEST(CategoryFiles, ShippedCategoriesValidate) {
  for (std::string n : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
    CategoryDoc d = load_category(cat_path(n));
    auto rep = full_check(d);
    EXPECT_TRUE(rep.ok()) << n << ": " << rep.str();
  }
}

TEST(CategoryFiles, MutationsFailWithWitness) {
  std::map<std::string, std::string> expect{{"fibonacci_bad_f", "pentagon"},
                                            {"ising_bad_f", "pentagon"},
                                            {"vec_z2_bad_pivotal", "pivotal"},
                                            {"vec_z2_bad_gauge", "triangle gauge"},
                                            {"vec_z3_bad_dual", "duality"}};
  for (const auto& [n, axiom] : expect) {
    CategoryDoc d = load_category(mut_path(n));
    auto rep = full_check(d);
    ASSERT_FALSE(rep.ok()) << n;
    EXPECT_EQ(rep.violations[0].axiom, axiom) << n << ": " << rep.str();
    EXPECT_FALSE(rep.violations[0].witness.empty());
  }
}

TEST(CategoryFiles, QuantumDimensions) {
  CategoryDoc ising = load_category(cat_path("ising"));
  Scalar r = Scalar::generator(ising.cat->field());
  EXPECT_EQ(ising.cat->qdim(1), r);
  EXPECT_EQ(ising.cat->qdim(2), Scalar(1));
  EXPECT_EQ(ising.cat->global_dim(), Scalar(4));
  CategoryDoc z3 = load_category(cat_path("vec_z3"));
  for (Label a = 0; a < 3; ++a) EXPECT_EQ(z3.cat->qdim(a), Scalar(1));
}

TEST(CategoryFiles, AlgebrasAndGenerators) {
  CategoryDoc d = load_category(cat_path("vec_z2"));
  ASSERT_EQ(d.algebras.size(), 1u);
  EXPECT_TRUE(check_dssfa(*d.engine, *d.algebras[0]).ok());
  ASSERT_EQ(d.bimodules.size(), 4u);
  for (const auto& b : d.bimodules) EXPECT_TRUE(check_bimodule(*d.engine, *b).ok()) << b->name;
  EXPECT_EQ(d.generators.size(), 6u);
  EXPECT_TRUE(d.generators[5].frob);
  EXPECT_EQ(d.generators[5].f.points.size(), 1u);
}

TEST(CategoryFiles, ExplicitAlgebraCoordinates) {
  std::string text = R"(labels g0 g1
unit g0
fuse g0 g0 : g0
fuse g0 g1 : g1
fuse g1 g0 : g1
fuse g1 g1 : g0
F_default identity
algebra B on g0 g1
mult 1 1 1 = 1
mult 1 2 2 = 1
mult 2 1 2 = 1
mult 2 2 1 = 1
comult 1 1 1 = 1/2
comult 1 2 2 = 1/2
comult 2 1 2 = 1/2
comult 2 2 1 = 1/2
unit 1 = 1
counit 1 = 2
)";
  CategoryDoc d = parse_category(text);
  ASSERT_EQ(d.algebras.size(), 1u);
  auto rep = check_dssfa(*d.engine, *d.algebras[0]);
  EXPECT_TRUE(rep.ok()) << rep.str();
  FrobAlgebra g = group_algebra(*d.engine, "G", {0, 1});
  EXPECT_EQ(d.algebras[0]->mult, g.mult);
  EXPECT_EQ(d.algebras[0]->comult, g.comult);
}

TEST(CategoryFiles, ParseErrorsCarryPositions) {
  auto at = [](const std::string& text) {
    try {
      parse_category(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line, e.column);
    }
    return std::make_pair(-1, -1);
  };
  EXPECT_EQ(at("labels a b\nunit a\nbogus 3\n"), std::make_pair(3, 1));
  EXPECT_EQ(at("labels a b\nunit c\n"), std::make_pair(2, 6));
  EXPECT_EQ(at("labels a\nunit a\nfuse a a : a\nF a a a a a a = 1.5\n"), std::make_pair(4, 18));
  EXPECT_EQ(at("labels a\nunit a\nfuse a a : a\nF a a a a a a a a a a = 1\n"), std::make_pair(4, 15));
}
