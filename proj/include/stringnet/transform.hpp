#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stringnet/check.hpp"
#include "stringnet/cylinder.hpp"

namespace sn {

// Underlying C decoration of a Frob(C) decoration.
CDec underlying(const RawDec& r, Manifold m);

// Frob(C)- and C-coloured circles over the same decorations. Frob objects
// 0..n-1 are the given decorations a_i, objects n..2n-1 are iota(f(a_i));
// C object i is the underlying decoration of a_i.
class CircleTransform {
 public:
  CircleTransform(const Engine& E, const std::vector<FDec>& objs);
  int size() const { return n_; }
  const FCircle& frob() const { return F_; }
  const CCircle& bc() const { return C_; }
  int iota_index(int i) const { return n_ + i; }

  // Frob Hom(k, l) -> C Hom(c(k), c(l)) for any Frob indices k, l
  Vec ucor(int k, int l, const Vec& q) const;
  // idempotent of f(a_i) on the underlying decoration
  Vec field_idempotent(int i) const;
  KarObject field_object(int i) const { return {i, field_idempotent(i)}; }
  // C Hom(i, j) -> Frob Hom(iota f a_i, iota f a_j)
  Vec iota(int i, int j, const Vec& G) const;
  Vec counit(int i) const;      // iota f a_i -> a_i
  Vec counit_inv(int i) const;  // a_i -> iota f a_i
  Vec phi(int i, int j, const Vec& G) const;

  // matrices in the quotient basis of Frob Hom(i, j) and the column basis
  // of e_j Hom(i, j) e_i
  Matrix ucor_matrix(int i, int j) const;
  Matrix phi_matrix(int i, int j) const;
  Matrix karoubi_basis(int i, int j) const;

 private:
  const Engine& E_;
  int n_;
  FCircle F_;
  CCircle C_;
  mutable std::vector<Vec> e_;
};

// Same for intervals; all boundary segments are trivial so the counit is
// the internal averaging idempotent.
class IntervalTransform {
 public:
  IntervalTransform(const Engine& E, const std::vector<FDec>& objs);
  int size() const { return F_.object_count(); }
  const FInterval& frob() const { return F_; }
  const CInterval& bc() const { return C_; }

  Vec ucor(int i, int j, const Vec& q) const;
  Vec field_idempotent(int i) const;
  Vec phi(int i, int j, const Vec& G) const;
  Matrix ucor_matrix(int i, int j) const;
  Matrix phi_matrix(int i, int j) const;
  Matrix karoubi_basis(int i, int j) const;

 private:
  const Engine& E_;
  FInterval F_;
  CInterval C_;
};

// coordinates of v in the column span of B (columns independent)
Vec coords_in_columns(const Matrix& B, const Vec& v);

// f iota = Id, counit invertible, triangle identities, naturality on
// random morphisms (seeded).
CheckReport feq_suite(const CircleTransform& T, unsigned seed = 1);
// Ucor Phi = id and Phi Ucor = id on every listed pair.
CheckReport ucor_iso_suite(const CircleTransform& T);
CheckReport ucor_iso_suite(const IntervalTransform& T);

}  // namespace sn
