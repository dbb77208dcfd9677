#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "stringnet/matrix.hpp"

namespace sn {

using Label = int;

// Index into the F-block of (a,b,c;d): row (e,alpha,beta), column (f,gamma,delta).
struct FIndex {
  Label x;
  int m1, m2;
  bool operator==(const FIndex&) const = default;
};

// Presentation of a pivotal fusion category by fusion rules, F-symbols and
// pivotal coefficients. Labels are numbered in declaration order.
class FusionCategory {
 public:
  FusionCategory(std::string name, std::shared_ptr<const NumberField> field,
                 std::vector<std::string> labels, Label unit, std::vector<Label> dual);

  const std::string& name() const { return name_; }
  const NumberField* field() const { return field_.get(); }
  std::shared_ptr<const NumberField> field_ptr() const { return field_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  Label unit() const { return unit_; }
  Label dual(Label a) const { return dual_.at(a); }
  const std::string& label_name(Label a) const { return labels_.at(a); }
  Label label(const std::string& name) const;  // throws UnknownLabel
  void check_label(Label a) const;

  int N(Label a, Label b, Label c) const { return N_[(a * rank() + b) * rank() + c]; }
  void set_N(Label a, Label b, Label c, int n);

  // F-block rows and columns in enumeration order.
  std::vector<FIndex> F_rows(Label a, Label b, Label c, Label d) const;
  std::vector<FIndex> F_cols(Label a, Label b, Label c, Label d) const;
  int F_row_pos(Label a, Label b, Label c, Label d, const FIndex& r) const;
  int F_col_pos(Label a, Label b, Label c, Label d, const FIndex& r) const;
  bool has_F(Label a, Label b, Label c, Label d) const;
  const Matrix& F(Label a, Label b, Label c, Label d) const;
  const Matrix& F_inv(Label a, Label b, Label c, Label d) const;
  void set_F(Label a, Label b, Label c, Label d, Matrix block);
  // fills unit-leg blocks with identities and unset 1x1 blocks with 1
  void fill_default_F();
  std::vector<std::tuple<Label, Label, Label, Label>> missing_F() const;

  const Scalar& pivotal(Label a) const { return t_.at(a); }
  void set_pivotal(Label a, Scalar t) { t_.at(a) = std::move(t); }
  bool spherical_declared() const { return spherical_; }
  void set_spherical_declared(bool s) { spherical_ = s; }

  // ev_a : dual(a) a -> 1 has coordinate kappa(a) against coev_a = 1
  const Scalar& kappa(Label a) const { return kappa_.at(a); }
  void set_kappa(std::vector<Scalar> k) { kappa_ = std::move(k); }
  Scalar qdim(Label a) const;       // right trace of id_a
  Scalar qdim_left(Label a) const;  // left trace of id_a
  Scalar global_dim() const;

  std::string str(Label a) const { return label_name(a); }

 private:
  std::string name_;
  std::shared_ptr<const NumberField> field_;
  std::vector<std::string> labels_;
  Label unit_;
  std::vector<Label> dual_;
  std::vector<int> N_;
  std::map<std::tuple<Label, Label, Label, Label>, Matrix> F_;
  std::map<std::tuple<Label, Label, Label, Label>, Matrix> Finv_;
  std::vector<Scalar> t_, kappa_;
  bool spherical_ = false;
};

using CategoryPtr = std::shared_ptr<const FusionCategory>;

}  // namespace sn
