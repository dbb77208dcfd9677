#include <gtest/gtest.h>

#include "stringnet/diagram.hpp"
#include "stringnet/errors.hpp"
#include "stringnet/io.hpp"
#include "stringnet/oracle.hpp"

using namespace sn;

namespace {

CategoryDoc load(const std::string& n) {
  return load_category(std::string(SN_DATA_DIR) + "/categories/" + n + ".cat");
}

StringNetElement one(PlanarDiagram D) { return {{{Scalar(1), std::move(D)}}}; }

PlanarDiagram loop(Label a) {
  PlanarDiagram D;
  D.carrier = Carrier::disk;
  D.layers = {{Box::cup_of(a)}, {Box::rcap_of(a)}};
  return D;
}

Vec random_vec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(Scalar(long(d(rng))));
  return v;
}

// A few layers of random vertices on three strands of a.
PlanarDiagram random_rect(const Engine& E, Label a, std::mt19937& rng) {
  PlanarDiagram D;
  D.carrier = Carrier::rectangle;
  Obj two{{a}, {a}};
  D.bottom = D.top = {{a}, {a}, {a}};
  for (int k = 0; k < 3; ++k) {
    Box v1 = Box::node(two, two, random_vec(E.hom_dim(two, two), rng));
    Box v2 = Box::node(simple(a), simple(a), random_vec(1, rng));
    if (k % 2) D.layers.push_back({v1, v2});
    else D.layers.push_back({v2, v1});
  }
  D.layers.push_back({Box::strand(a), Box::cup_of(a), Box::strand(a), Box::strand(a)});
  Label ad = E.cat().dual(a);
  D.layers.push_back({Box::strand(a), Box::strand(a), Box::node({{ad}, {a}, {a}}, simple(a),
                                                                  random_vec(E.hom_dim({{ad}, {a}, {a}}, simple(a)), rng))});
  return D;
}

}  // namespace

TEST(Diagram, EmptyDiskIsOne) {
  auto d = load("fibonacci");
  PlanarDiagram D;
  D.carrier = Carrier::disk;
  EXPECT_EQ(evaluate_disk(*d.engine, one(D)), Vec{Scalar(1)});
}

TEST(Diagram, LoopsEvaluateToQuantumDimensions) {
  auto z2 = load("vec_z2");
  for (Label a = 0; a < 2; ++a) EXPECT_EQ(evaluate_disk(*z2.engine, one(loop(a)))[0], Scalar(1));
  auto fib = load("fibonacci");
  Scalar phi = (Scalar(1) + Scalar::generator(fib.cat->field())) / Scalar(2);
  Scalar v = evaluate_disk(*fib.engine, one(loop(1)))[0];
  EXPECT_EQ(v, phi);
  EXPECT_EQ(v * v, v + Scalar(1));
}

TEST(Diagram, ZigzagIsStraightStrand) {
  auto d = load("ising");
  const Engine& E = *d.engine;
  for (Label a = 0; a < 3; ++a) {
    PlanarDiagram Z;
    Z.bottom = Z.top = simple(a);
    Z.layers = {{Box::cup_of(a), Box::strand(a)}, {Box::strand(a), Box::cap_of(a)}};
    EXPECT_EQ(evaluate(E, Z), E.id(simple(a)));
    PlanarDiagram R;
    R.bottom = R.top = simple(a);
    R.layers = {{Box::strand(a), Box::rcup_of(a)}, {Box::rcap_of(a), Box::strand(a)}};
    EXPECT_EQ(evaluate(E, R), E.id(simple(a)));
  }
}

TEST(Diagram, ReductionOrderDoesNotMatter) {
  auto d = load("fibonacci");
  const Engine& E = *d.engine;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    PlanarDiagram D = random_rect(E, 1, rng);
    Mor ref = evaluate(E, D);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(evaluate(E, D, &rng), ref);
  }
}

TEST(Diagram, LeftAndRightTracesAgree) {
  auto d = load("ising");
  const Engine& E = *d.engine;
  std::mt19937 rng(11);
  Label s = 1;
  Obj two{{s}, {s}};
  for (int trial = 0; trial < 5; ++trial) {
    Box f = Box::node(two, two, random_vec(E.hom_dim(two, two), rng));
    PlanarDiagram R, L;
    R.carrier = L.carrier = Carrier::disk;
    // right trace of f on s s
    R.layers = {{Box::node({}, {{s}, {s}, {s}, {s}}, E.flatten(E.coev(two)))},
                {f, Box::strand(s), Box::strand(s)},
                {Box::node({{s}, {s}, {s}, {s}}, {}, E.flatten(E.rev(two)))}};
    L.layers = {{Box::node({}, {{s}, {s}, {s}, {s}}, E.flatten(E.rcoev(two)))},
                {Box::strand(s), Box::strand(s), f},
                {Box::node({{s}, {s}, {s}, {s}}, {}, E.flatten(E.ev(two)))}};
    EXPECT_EQ(evaluate_disk(E, one(R)), evaluate_disk(E, one(L)));
  }
}

TEST(Diagram, StackingConcatenates) {
  auto d = load("fibonacci");
  const Engine& E = *d.engine;
  PlanarDiagram strip;
  strip.bottom = strip.top = simple(1);
  strip.layers = {{Box::strand(1)}};
  Mor f = E.split_vertex(1, 1, 1, 0) * E.fuse_vertex(1, 1, 1, 0);
  PlanarDiagram V = single_vertex(E, Carrier::rectangle, f);
  auto s1 = stack(E, one(V), one(V));
  ASSERT_EQ(s1.terms.size(), 1u);
  EXPECT_EQ(s1.terms[0].second.vertex_count(), 2);
  EXPECT_EQ(evaluate(E, s1), f * f);
  PlanarDiagram W = single_vertex(E, Carrier::rectangle, E.fuse_vertex(1, 1, 1, 0));
  EXPECT_EQ(evaluate(E, stack(E, one(strip), one(W))), evaluate(E, one(W)));
  try {
    stack(E, one(W), one(W));
    FAIL();
  } catch (const BoundaryMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("marked point 2"), std::string::npos) << e.what();
  }
}

TEST(Diagram, MalformedVertexIsRejected) {
  auto d = load("fibonacci");
  PlanarDiagram D;
  D.bottom = D.top = {{1}, {1}};
  D.layers = {{Box::node({{1}, {1}}, {{1}, {1}}, {Scalar(1)})}};
  EXPECT_THROW(evaluate(*d.engine, D), MalformedDiagram);
  PlanarDiagram G;
  G.bottom = simple(1);
  G.top = simple(0);
  G.layers = {{Box::strand(1)}};
  EXPECT_THROW(evaluate(*d.engine, G), MalformedDiagram);
}

TEST(Diagram, TubeStackingIsGroupAlgebra) {
  auto d = load("vec_z2");
  const Engine& E = *d.engine;
  auto wrap_elem = [&](Label g) {
    return from_coordinates(E, {}, {}, g == 0 ? Vec{Scalar(1), Scalar(0)} : Vec{Scalar(0), Scalar(1)});
  };
  for (Label a = 0; a < 2; ++a)
    for (Label b = 0; b < 2; ++b) {
      Vec got = to_coordinates(E, stack(E, wrap_elem(a), wrap_elem(b)));
      Vec want{Scalar((a + b) % 2 == 0 ? 1 : 0), Scalar((a + b) % 2 == 1 ? 1 : 0)};
      EXPECT_EQ(got, want) << a << b;
    }
}

TEST(Diagram, AnnulusCoordinatesRoundTrip) {
  auto d = load("ising");
  const Engine& E = *d.engine;
  std::mt19937 rng(3);
  Obj X = simple(1), Y = simple(1);
  // identity annulus is the unit-wrap basis vector
  PlanarDiagram I;
  I.carrier = Carrier::annulus;
  I.bottom = I.top = X;
  I.layers = {{Box::strand(1)}};
  Vec idc = to_coordinates(E, one(I));
  EXPECT_EQ(to_coordinates(E, from_coordinates(E, X, Y, idc)), idc);
  for (int trial = 0; trial < 4; ++trial) {
    // two vertices joined through a wrap strand sigma
    PlanarDiagram D;
    D.carrier = Carrier::annulus;
    D.bottom = X;
    D.top = Y;
    D.wrap = simple(1);
    Obj ss{{1}, {1}};
    D.layers = {{Box::node(ss, ss, random_vec(E.hom_dim(ss, ss), rng))},
                {Box::node(ss, ss, random_vec(E.hom_dim(ss, ss), rng))}};
    Vec v = to_coordinates(E, one(D));
    EXPECT_EQ(int(v.size()), annulus_dim(E, X, Y));
    EXPECT_EQ(to_coordinates(E, from_coordinates(E, X, Y, v)), v);
  }
  for (int k = 0; k < annulus_dim(E, X, Y); ++k) {
    Vec e(annulus_dim(E, X, Y), Scalar(0));
    e[k] = Scalar(1);
    EXPECT_EQ(to_coordinates(E, from_coordinates(E, X, Y, e)), e);
  }
}

TEST(Oracle, DiskExamples) {
  auto z2 = load("vec_z2");
  EXPECT_EQ(oracle_disk(*z2.cat, {}).dim, 1);
  auto fib = load("fibonacci");
  EXPECT_EQ(oracle_disk(*fib.cat, {1, 1, 1}).dim, 1);
  EXPECT_EQ(oracle_disk(*fib.cat, {1, 1, 1, 1}).dim, 2);
  EXPECT_THROW(oracle_disk(*fib.cat, std::vector<Label>(8, 1)), BudgetExceeded);
}

TEST(Oracle, DiskMatchesEngine) {
  for (std::string n : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
    auto d = load(n);
    const Engine& E = *d.engine;
    int r = d.cat->rank();
    for (int len = 0; len <= 4; ++len) {
      std::vector<Label> b(len, 0);
      for (int code = 0;; ++code) {
        int c = code;
        for (int i = 0; i < len; ++i) b[i] = c % r, c /= r;
        if (c) break;
        Obj X;
        for (Label a : b) X.push_back({a});
        EXPECT_EQ(oracle_disk(*d.cat, b).dim, E.hom_dim({}, X)) << n;
        if (len == 0) break;
      }
    }
  }
}

TEST(Oracle, AnnulusMatchesEngine) {
  auto z2 = load("vec_z2");
  EXPECT_EQ(oracle_annulus(*z2.engine, {}, {}).dim, 2);
  for (std::string n : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
    auto d = load(n);
    const Engine& E = *d.engine;
    for (Label a = 0; a < d.cat->rank(); ++a)
      for (Label b = 0; b < d.cat->rank(); ++b) {
        auto r = oracle_annulus(E, simple(a), simple(b));
        EXPECT_LE(r.max_vertices, kDefaultBudget);
        EXPECT_EQ(r.dim, annulus_dim(E, simple(a), simple(b))) << n << " " << a << " " << b;
      }
    EXPECT_EQ(oracle_annulus(E, {}, {}).dim, annulus_dim(E, {}, {}));
  }
}
