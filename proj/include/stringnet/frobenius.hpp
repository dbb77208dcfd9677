#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stringnet/tensor.hpp"
#include "stringnet/validate.hpp"

namespace sn {

// Frobenius algebra on A = (obj) with structure maps as engine morphisms.
struct FrobAlgebra {
  std::string name;
  Site obj;
  Mor mult, unit, comult, counit;
  // the monoidal unit with its trivial structure
  bool trivial = false;

  Obj A() const { return {obj}; }
};
using AlgPtr = std::shared_ptr<const FrobAlgebra>;

// A-B bimodule on M = (obj); left action A M -> M, right action M B -> M.
struct Bimodule {
  std::string name;
  AlgPtr left, right;
  Site obj;
  Mor lact, ract;

  Obj M() const { return {obj}; }
};
using BimPtr = std::shared_ptr<const Bimodule>;

AlgPtr trivial_algebra(const Engine& E);

// Builds an algebra from coordinates in the summand bases: mult[(i,j,k,mu)],
// comult[(k,i,j,mu)], unit[k], counit[k] with 0-based summand indices.
struct AlgebraCoords {
  std::map<std::tuple<int, int, int, int>, Scalar> mult, comult;
  std::map<int, Scalar> unit, counit;
};
FrobAlgebra algebra_from_coords(const Engine& E, std::string name, Site obj, const AlgebraCoords& c);

// Group algebra k[G] on a set of invertible labels closed under fusion,
// with comultiplication scaled by 1/|G|.
FrobAlgebra group_algebra(const Engine& E, std::string name, Site elements);

ValidationReport check_dssfa(const Engine& E, const FrobAlgebra& A);

struct ActionCoords {
  // (algebra summand, module summand, module summand, mu)
  std::map<std::tuple<int, int, int, int>, Scalar> left, right;
};
Bimodule bimodule_from_coords(const Engine& E, std::string name, AlgPtr left, AlgPtr right, Site obj,
                              const ActionCoords& c);
// A as an A-A-bimodule.
Bimodule regular_bimodule(const Engine& E, AlgPtr A, std::string name = "");
// underlying X with the free structure A X B
Bimodule free_bimodule(const Engine& E, AlgPtr A, const Site& X, AlgPtr B, std::string name = "");

ValidationReport check_bimodule(const Engine& E, const Bimodule& M);

// x -> comult(unit) split around x: A-averaged insertions.
Mor left_coaction(const Engine& E, const Bimodule& M);   // M -> A M
Mor right_coaction(const Engine& E, const Bimodule& M);  // M -> M B
// idempotent on M N averaging over the middle algebra
Mor averaging_idempotent(const Engine& E, const Bimodule& M, const Bimodule& N);

// Morphisms X -> Y intertwining both actions, as a basis of engine morphisms.
std::vector<Mor> bimodule_hom_space(const Engine& E, const Bimodule& M, const Bimodule& N);
bool is_bimodule_morphism(const Engine& E, const Bimodule& M, const Bimodule& N, const Mor& f);

struct RelativeTensor {
  Bimodule product;
  Mor incl;  // product -> M N
  Mor proj;  // M N -> product
};
RelativeTensor relative_tensor(const Engine& E, const Bimodule& M, const Bimodule& N);

// Splits an idempotent on X into an object on a single site with maps.
struct Splitting {
  Site image;
  Mor incl, proj;
};
Splitting split_idempotent(const Engine& E, const Mor& e);

}  // namespace sn
