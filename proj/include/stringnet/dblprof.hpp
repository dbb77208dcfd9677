#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "stringnet/check.hpp"
#include "stringnet/cylinder.hpp"
#include "stringnet/linalg.hpp"

namespace sn {

// Finite linear category with explicit hom bases. comp(x, y, z)[k] is the
// matrix of g_k after -, for the k-th basis morphism g_k of hom(y, z), as a
// map hom(x, y) -> hom(x, z).
class FinLinCategory {
 public:
  using ComposeFn = std::function<Vec(int, int, int, const Vec&, const Vec&)>;
  FinLinCategory() = default;
  FinLinCategory(std::string name, std::vector<std::string> objects, std::vector<std::vector<int>> dims,
                 const ComposeFn& compose, std::vector<Vec> identities);
  static FinLinCategory tabulate(std::string name, const CylinderCategory& C);
  // full subcategory of the Karoubi envelope on the given objects, in the
  // column bases of e' Hom e
  static FinLinCategory karoubi(std::string name, const CylinderCategory& C, const std::vector<KarObject>& objs);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(objects_.size()); }
  const std::string& object(int x) const { return objects_.at(x); }
  int dim(int x, int y) const { return dims_.at(x).at(y); }
  Vec compose(int x, int y, int z, const Vec& g, const Vec& f) const;
  const Vec& identity(int x) const { return id_.at(x); }
  Vec basis(int x, int y, int k) const;
  // matrix of g after -, hom(x, y) -> hom(x, z)
  Matrix post(int x, int y, int z, const Vec& g) const;
  // matrix of - after f, hom(y, z) -> hom(x, z)
  Matrix pre(int x, int y, int z, const Vec& f) const;
  CheckReport check() const;

  // multiplicity vectors when built by mat_category
  std::vector<std::vector<int>> mat_objects;
  int mat_simples = 0;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::vector<int>> dims_;
  std::map<std::tuple<int, int, int>, std::vector<Matrix>> comp_;
  std::vector<Vec> id_;
};

// Semisimple category with m simples; objects are multiplicity vectors and
// hom(x, y) is the direct sum over s of y_s x x_s matrices, basis by matrix
// units in order (s, row, column).
FinLinCategory mat_category(std::string name, int simples, const std::vector<std::vector<int>>& objects);

struct LinFunctor {
  const FinLinCategory* src = nullptr;
  const FinLinCategory* tgt = nullptr;
  std::vector<int> obj;
  std::map<std::pair<int, int>, Matrix> mor;  // hom(x, y) -> hom(Fx, Fy)

  Vec apply(int x, int y, const Vec& f) const { return mul(mor.at({x, y}), f); }
  static Vec mul(const Matrix& M, const Vec& v);
  CheckReport check() const;
};
LinFunctor identity_functor(const FinLinCategory& A);
LinFunctor compose_functors(const LinFunctor& G, const LinFunctor& F);  // G after F
bool same_functor(const LinFunctor& F, const LinFunctor& G);

// Functor between Mat categories induced by a multiplicity matrix K
// (target simples x source simples); every image object must be listed.
LinFunctor mat_functor(const FinLinCategory& A, const FinLinCategory& B, const std::vector<std::vector<int>>& K);

// Profunctor A -|-> B: spaces P(a, b), B acting on the left, A on the right.
struct Profunctor {
  std::string name;
  const FinLinCategory* src = nullptr;  // A
  const FinLinCategory* tgt = nullptr;  // B
  std::vector<std::vector<int>> dims;   // [a][b]
  // (a, b, b') -> per basis g of hom_B(b, b'): P(a, b) -> P(a, b')
  std::map<std::tuple<int, int, int>, std::vector<Matrix>> left;
  // (a', a, b) -> per basis f of hom_A(a', a): P(a, b) -> P(a', b)
  std::map<std::tuple<int, int, int>, std::vector<Matrix>> right;

  int dim(int a, int b) const { return dims.at(a).at(b); }
  Matrix left_matrix(int a, int b, int b2, const Vec& g) const;
  Matrix right_matrix(int a2, int a, int b, const Vec& f) const;
  Vec act_left(int a, int b, int b2, const Vec& g, const Vec& p) const;
  Vec act_right(int a2, int a, int b, const Vec& f, const Vec& p) const;
  CheckReport check() const;
};

// hom_A as a profunctor A -|-> A
Profunctor identity_profunctor(const FinLinCategory& A);
// P(a, b) = Mat-hom(K a, b) for Mat categories, with K as in mat_functor
// but without listing the image objects.
Profunctor mat_profunctor(const FinLinCategory& A, const FinLinCategory& B, const std::vector<std::vector<int>>& K);

// Coend of P(a, b) (x) Q(b, c) over b, as a quotient of the direct sum
// over b with [p (x) q] at offset(a, c)[b] + p * dim Q(b, c) + q.
struct ProfComposite {
  Profunctor prof;
  const Profunctor* P = nullptr;
  const Profunctor* Q = nullptr;
  std::map<std::pair<int, int>, std::vector<int>> offsets;
  std::map<std::pair<int, int>, Quotient> quot;

  // class of p (x) q for p in P(a, b), q in Q(b, c)
  Vec cls(int a, int b, int c, const Vec& p, const Vec& q) const;
  // representative in the direct sum
  Vec lift(int a, int c, const Vec& x) const;
  // for each b, the P(a, b) (x) Q(b, c) block of a representative
  Vec block(int a, int b, int c, const Vec& rep) const;
};
// without actions only the spaces are built; enough for maps out of them
ProfComposite prof_compose(const Profunctor& P, const Profunctor& Q, bool with_actions = true);

// U (x) P -> P and P (x) U -> P on every component
std::map<std::pair<int, int>, Matrix> left_unitor(const ProfComposite& UP);
std::map<std::pair<int, int>, Matrix> right_unitor(const ProfComposite& PU);
// ((P Q) R) -> (P (Q R)) from the projections
std::map<std::pair<int, int>, Matrix> associator(const ProfComposite& PQ, const ProfComposite& PQ_R,
                                                 const ProfComposite& QR, const ProfComposite& P_QR);
bool all_invertible(const std::map<std::pair<int, int>, Matrix>& comps, std::string* witness = nullptr);

// Square with top P: A -|-> B, bottom Q: A' -|-> B', sides F: A -> A' and
// G: B -> B'; comp[(a, b)]: P(a, b) -> Q(Fa, Gb).
struct ProfSquare {
  const Profunctor* top = nullptr;
  const Profunctor* bottom = nullptr;
  LinFunctor left, right;
  std::map<std::pair<int, int>, Matrix> comp;

  CheckReport check() const;
};
ProfSquare identity_square(const Profunctor& P);
// square U_A => U_B with both sides F
ProfSquare functor_square(const LinFunctor& F, const Profunctor& UA, const Profunctor& UB);
ProfSquare vcompose(const ProfSquare& beta, const ProfSquare& alpha);  // beta below alpha
// side by side; alpha.right must equal beta.left
ProfSquare hcompose(const ProfSquare& alpha, const ProfSquare& beta, const ProfComposite& top,
                    const ProfComposite& bottom);

struct CompanionData {
  std::shared_ptr<Profunctor> prof;
  const Profunctor* UA = nullptr;
  const Profunctor* UB = nullptr;
  ProfSquare unit, counit;
  CheckReport yanking;
};
// F_*(a, b) = hom_B(Fa, b)
CompanionData companion(const LinFunctor& F, const Profunctor& UA, const Profunctor& UB);
// F^*(b, a) = hom_B(b, Fa)
CompanionData conjoint(const LinFunctor& F, const Profunctor& UA, const Profunctor& UB);
void check_yanking(CompanionData& c, bool is_companion, const LinFunctor& F);

// Adjoint equivalence F -| Finv with invertible unit and counit components.
struct EquivalenceData {
  LinFunctor F, Finv;
  std::vector<Vec> unit, unit_inv;        // a -> Finv F a and back
  std::vector<Vec> counit, counit_inv;    // F Finv a' -> a' and back
  CheckReport check() const;
};
EquivalenceData identity_equivalence(const FinLinCategory& A);

struct WeakInverse {
  bool invertible = false;
  std::string witness;
  std::map<std::pair<int, int>, Matrix> inverse;  // Q(a', b') -> P(Finv a', Ginv b')
};
WeakInverse check_weak_invertibility(const ProfSquare& alpha, const EquivalenceData& left,
                                     const EquivalenceData& right);

// Folding: the globular cell P (x) G_* => F_* (x) Q with its components and
// whether each is invertible.
struct Folded {
  ProfComposite src, tgt;
  std::map<std::pair<int, int>, Matrix> comp;
  bool strong = true;
  std::string witness;
};
Folded fold(const ProfSquare& alpha, const CompanionData& F_comp, const CompanionData& G_comp);

// Linear model of a finite bordism fragment: one space per horizontal cell,
// bilinear sewing tables, identity cylinders and vertical actions.
struct FragmentModel {
  struct Sewing {
    std::string name;
    int outer = 0, inner = 0, result = 0;
    std::function<Vec(const Vec&, const Vec&)> sew;  // (outer, inner) -> result
  };
  struct Unit {
    std::string name;
    int cell = 0;
    Vec element;
  };
  struct Vertical {
    std::string name;
    int src = 0, tgt = 0;
    Matrix action;
  };
  std::vector<std::string> cells;
  std::vector<int> dims;
  std::vector<Sewing> sewings;
  std::vector<Unit> units;
  std::vector<Vertical> verticals;
};

// theta[c]: dom cell c -> cod cell c. Sewings, units and verticals are
// matched by index.
CheckReport check_vertical_transformation(const FragmentModel& dom, const FragmentModel& cod,
                                          const std::vector<Matrix>& theta);

// Random Mat category with at most max_objects objects.
FinLinCategory random_mat_category(std::string name, std::mt19937& rng, int max_objects = 3, int max_simples = 2,
                                   int max_mult = 2);
std::vector<std::vector<int>> random_multiplicities(std::mt19937& rng, int rows, int cols, int max = 2);

}  // namespace sn
