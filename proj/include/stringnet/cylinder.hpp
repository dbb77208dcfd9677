#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "stringnet/decoration.hpp"
#include "stringnet/linalg.hpp"
#include "stringnet/tensor.hpp"

namespace sn {

// A linear category with finitely many listed objects and morphism spaces in
// fixed coordinates. Composition is g after f for f: i -> j, g: j -> k.
class CylinderCategory {
 public:
  virtual ~CylinderCategory() = default;
  virtual int object_count() const = 0;
  virtual std::string object_name(int i) const = 0;
  virtual int dim(int i, int j) const = 0;
  virtual Vec compose(int i, int j, int k, const Vec& g, const Vec& f) const = 0;
  virtual Vec identity(int i) const = 0;

  Vec basis(int i, int j, int k) const;
  // left multiplication matrices of End(i)
  std::vector<Matrix> end_algebra(int i) const;
};

// Circle coloured by C: morphisms X -> Y in the coordinates of the direct sum
// over simples s of Hom(s X, Y s).
class CCircle : public CylinderCategory {
 public:
  CCircle(const Engine& E, std::vector<CDec> objs);
  const Engine& engine() const { return E_; }
  const CDec& object(int i) const { return objs_.at(i); }
  int add(const CDec& d);

  int object_count() const override { return static_cast<int>(objs_.size()); }
  std::string object_name(int i) const override;
  int dim(int i, int j) const override;
  Vec compose(int i, int j, int k, const Vec& g, const Vec& f) const override;
  Vec identity(int i) const override;

  // psi in Hom(W X, Y W) as a morphism X -> Y
  Vec from_wrap(const Obj& W, const Obj& X, const Obj& Y, const Mor& psi) const;
  // s-component of v as a morphism s X -> Y s
  Mor component(const Obj& X, const Obj& Y, const Vec& v, Label s) const;
  Vec compose(const Obj& X, const Obj& Y, const Obj& Z, const Vec& g, const Vec& f) const;
  Vec identity(const Obj& X) const;
  // full turn of the inner boundary
  Vec twist(const Obj& X) const;

 private:
  const Engine& E_;
  std::vector<CDec> objs_;
};

// Interval coloured by C: Hom_C(X, Y) in engine coordinates.
class CInterval : public CylinderCategory {
 public:
  CInterval(const Engine& E, std::vector<CDec> objs);
  const CDec& object(int i) const { return objs_.at(i); }
  int add(const CDec& d);

  int object_count() const override { return static_cast<int>(objs_.size()); }
  std::string object_name(int i) const override;
  int dim(int i, int j) const override;
  Vec compose(int i, int j, int k, const Vec& g, const Vec& f) const override;
  Vec identity(int i) const override;

 private:
  const Engine& E_;
  std::vector<CDec> objs_;
};

// Underlying data of a Frob(C) decoration: the concatenated points X with the
// cut algebra acting on either side and the internal averaging idempotent.
// With no points X is the cut algebra itself, or empty if that is trivial.
struct RawDec {
  Obj X;
  AlgPtr cut;    // circle only
  Mor lam, rho;  // cut X -> X, X cut -> X (circle only)
  Mor p;         // X -> X
  Mor delta() const;  // X -> X cut, via the right action
  Mor delta_left() const;  // X -> cut X, via the left action
  const Engine* E = nullptr;
};
RawDec raw_decoration(const Engine& E, const FDec& d);

// Frob(C)-coloured circle. A morphism a -> b is a class of psi in the direct
// sum over simples z of Hom(z X, Y z), modulo the internal idempotents and the
// relation moving a morphism z -> B z' A across the cut.
class FCircle : public CylinderCategory {
 public:
  FCircle(const Engine& E, std::vector<FDec> objs);
  const Engine& engine() const { return E_; }
  const FDec& object(int i) const { return objs_.at(i); }
  const RawDec& raw(int i) const { return raw_.at(i); }
  int add(const FDec& d);

  int object_count() const override { return static_cast<int>(objs_.size()); }
  std::string object_name(int i) const override;
  int dim(int i, int j) const override;
  Vec compose(int i, int j, int k, const Vec& g, const Vec& f) const override;
  Vec identity(int i) const override;

  const Quotient& hom(int i, int j) const;
  // class of psi in Hom(W X, Y W)
  Vec from_wrap(int i, int j, const Obj& W, const Mor& psi) const;
  // representative p_Y psi p_X in the ambient coordinates
  Vec lift(int i, int j, const Vec& q) const;
  Vec twist(int i) const;

 private:
  Quotient build_hom(int i, int j) const;

  const Engine& E_;
  std::vector<FDec> objs_;
  std::vector<RawDec> raw_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, Quotient> homs_;
};

// Frob(C)-coloured interval: p_Y Hom_C(X, Y) p_X.
class FInterval : public CylinderCategory {
 public:
  FInterval(const Engine& E, std::vector<FDec> objs);
  const FDec& object(int i) const { return objs_.at(i); }
  const RawDec& raw(int i) const { return raw_.at(i); }
  int add(const FDec& d);

  int object_count() const override { return static_cast<int>(objs_.size()); }
  std::string object_name(int i) const override;
  int dim(int i, int j) const override;
  Vec compose(int i, int j, int k, const Vec& g, const Vec& f) const override;
  Vec identity(int i) const override;

  const Quotient& hom(int i, int j) const;
  Vec from_mor(int i, int j, const Mor& f) const;
  Mor to_mor(int i, int j, const Vec& q) const;

 private:
  const Engine& E_;
  std::vector<FDec> objs_;
  std::vector<RawDec> raw_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, Quotient> homs_;
};

// Object of the Karoubi envelope: a listed object with an idempotent.
struct KarObject {
  int base = 0;
  Vec e;
};

// Split of an idempotent: u: (base, e) -> (base, id) and v back, with
// v u = e and u v = e in End(base). rank is dim e End(base) e.
struct KarSplit {
  int rank = 0;
  Vec u, v;
};
KarSplit karoubi_split(const CylinderCategory& C, int base, const Vec& e);

// e' Hom(i, j) e as columns in the coordinates of Hom(i, j).
Matrix karoubi_hom(const CylinderCategory& C, const KarObject& a, const KarObject& b);
bool isomorphic(const CylinderCategory& C, const KarObject& a, const KarObject& b);

struct SimpleList {
  std::vector<KarObject> simples;
  // multiplicity[i][s]: copies of simple s in listed object i
  std::vector<std::vector<int>> multiplicity;
  bool complete = true;
  std::vector<std::string> notes;
};
// Primitive idempotents of every listed End algebra, deduplicated up to
// isomorphism. Throws NotSplit or NotSemisimple from the decomposition.
SimpleList simple_objects(const CylinderCategory& C);

}  // namespace sn
