#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "stringnet/algebra.hpp"
#include "stringnet/fusion_data.hpp"

namespace sn {

// A site is a direct sum of simples (repetition allowed); an object is an
// ordered tensor product of sites. The empty object is the monoidal unit.
using Site = std::vector<Label>;
using Obj = std::vector<Site>;

Obj concat(const Obj& a, const Obj& b);
Obj concat(std::initializer_list<Obj> parts);
Obj simple(Label a);

// Morphism X -> Y stored per channel c as the matrix of post-composition
// V_c(X) -> V_c(Y), where V_c(X) = Hom(c, X) has the left-combed tree basis.
struct Mor {
  Obj src, tgt;
  std::vector<Matrix> blocks;
  bool operator==(const Mor& o) const {
    return src == o.src && tgt == o.tgt && blocks == o.blocks;
  }
  bool is_zero() const;
};

Mor operator*(const Mor& g, const Mor& f);  // g after f
Mor operator+(Mor a, const Mor& b);
Mor operator-(Mor a, const Mor& b);
Mor operator*(const Scalar& s, Mor a);

// Left-combed basis tree of V_c(X): summand choices per site, running
// channels chan[k] after the first k+1 sites, and vertex indices.
struct LTree {
  std::vector<int> choice;
  std::vector<Label> chan;
  std::vector<int> mu;
  auto operator<=>(const LTree&) const = default;
};

class Engine {
 public:
  explicit Engine(CategoryPtr C);
  const FusionCategory& cat() const { return *C_; }
  CategoryPtr cat_ptr() const { return C_; }
  const NumberField* field() const { return C_->field(); }

  int dimV(const Obj& X, Label c) const;
  const std::vector<LTree>& basisV(const Obj& X, Label c) const;
  int index_of(const Obj& X, Label c, const LTree& t) const;
  int hom_dim(const Obj& X, const Obj& Y) const;

  Mor zero(const Obj& X, const Obj& Y) const;
  Mor id(const Obj& X) const;
  Mor tensor(const Mor& f, const Mor& g) const;
  Mor tensor(const std::vector<Mor>& fs) const;

  // coordinates in the basis ordered by channel, target tree, source tree
  Vec flatten(const Mor& f) const;
  Mor unflatten(const Obj& X, const Obj& Y, const Vec& v) const;
  Mor basis_mor(const Obj& X, const Obj& Y, int k) const;

  Site dual(const Site& s) const;
  Obj dual(const Obj& X) const;
  Mor coev(const Obj& X) const;   // 1 -> X X*
  Mor ev(const Obj& X) const;     // X* X -> 1
  Mor rev(const Obj& X) const;    // X X* -> 1 (pivotal)
  Mor rcoev(const Obj& X) const;  // 1 -> X* X (pivotal)

  Mor split_vertex(Label a, Label b, Label c, int mu) const;  // (c) -> (a)(b)
  Mor fuse_vertex(Label a, Label b, Label c, int mu) const;   // (a)(b) -> (c)
  Mor tree_in(const Obj& W, Label s, int i) const;            // (s) -> W, i-th basis tree
  Mor tree_out(const Obj& W, Label s, int i) const;           // W -> (s), dual basis
  Mor summand_in(const Site& s, int k) const;                 // (s[k]) -> (s)
  Mor summand_out(const Site& s, int k) const;                // (s) -> (s[k])
  Mor unit_in() const;                                        // 1 -> (unit)
  Mor unit_out() const;                                       // (unit) -> 1

  // scalar of an endomorphism of the unit object
  Scalar scalar(const Mor& f) const;
  Scalar trace(const Mor& f) const;       // right trace
  Scalar trace_left(const Mor& f) const;  // left trace

  std::string obj_str(const Obj& X) const;

 private:
  struct BasisData {
    std::vector<std::vector<LTree>> trees;
    std::vector<std::map<LTree, int>> index;
  };
  const BasisData& basis(const Obj& X) const;
  const std::vector<Matrix>& recoupling(const Obj& X, const Obj& Xp) const;
  const std::vector<Matrix>& recoupling_inv(const Obj& X, const Obj& Xp) const;
  std::vector<Matrix> build_recoupling(const Obj& X, const Obj& Xp) const;
  int split_pos(const Obj& X, const Obj& Xp, Label c, Label a, Label b, int lam, int i, int j) const;

  CategoryPtr C_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Obj, BasisData> basis_;
  mutable std::map<std::pair<Obj, Obj>, std::vector<Matrix>> T_, Tinv_;
};

}  // namespace sn
