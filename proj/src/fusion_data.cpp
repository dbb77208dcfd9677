#include "stringnet/fusion_data.hpp"

#include "stringnet/errors.hpp"
#include "stringnet/linalg.hpp"

namespace sn {

FusionCategory::FusionCategory(std::string name, std::shared_ptr<const NumberField> field,
                               std::vector<std::string> labels, Label unit, std::vector<Label> dual)
    : name_(std::move(name)),
      field_(std::move(field)),
      labels_(std::move(labels)),
      unit_(unit),
      dual_(std::move(dual)) {
  int n = rank();
  if (unit_ < 0 || unit_ >= n) throw ContractViolation("unit label out of range");
  if (static_cast<int>(dual_.size()) != n) throw ContractViolation("dual map has wrong size");
  for (Label d : dual_) check_label(d);
  N_.assign(static_cast<size_t>(n) * n * n, 0);
  t_.assign(n, Scalar::one(field_.get()));
  kappa_.assign(n, Scalar::one(field_.get()));
}

Label FusionCategory::label(const std::string& name) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<Label>(i);
  throw UnknownLabel("unknown label '" + name + "'");
}

void FusionCategory::check_label(Label a) const {
  if (a < 0 || a >= rank()) throw UnknownLabel("unknown label id " + std::to_string(a));
}

void FusionCategory::set_N(Label a, Label b, Label c, int n) {
  check_label(a);
  check_label(b);
  check_label(c);
  if (n < 0) throw ContractViolation("negative fusion multiplicity");
  N_[(a * rank() + b) * rank() + c] = n;
}

std::vector<FIndex> FusionCategory::F_rows(Label a, Label b, Label c, Label d) const {
  std::vector<FIndex> out;
  for (Label e = 0; e < rank(); ++e)
    for (int al = 0; al < N(a, b, e); ++al)
      for (int be = 0; be < N(e, c, d); ++be) out.push_back({e, al, be});
  return out;
}

std::vector<FIndex> FusionCategory::F_cols(Label a, Label b, Label c, Label d) const {
  std::vector<FIndex> out;
  for (Label f = 0; f < rank(); ++f)
    for (int ga = 0; ga < N(b, c, f); ++ga)
      for (int de = 0; de < N(a, f, d); ++de) out.push_back({f, ga, de});
  return out;
}

int FusionCategory::F_row_pos(Label a, Label b, Label c, Label d, const FIndex& r) const {
  auto rows = F_rows(a, b, c, d);
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == r) return static_cast<int>(i);
  throw ContractViolation("F row index not admissible");
}

int FusionCategory::F_col_pos(Label a, Label b, Label c, Label d, const FIndex& r) const {
  auto cols = F_cols(a, b, c, d);
  for (size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == r) return static_cast<int>(i);
  throw ContractViolation("F column index not admissible");
}

bool FusionCategory::has_F(Label a, Label b, Label c, Label d) const {
  return F_.count({a, b, c, d}) > 0;
}

const Matrix& FusionCategory::F(Label a, Label b, Label c, Label d) const {
  auto it = F_.find({a, b, c, d});
  if (it == F_.end())
    throw ContractViolation("missing F-block (" + str(a) + "," + str(b) + "," + str(c) + ";" +
                            str(d) + ")");
  return it->second;
}

const Matrix& FusionCategory::F_inv(Label a, Label b, Label c, Label d) const {
  auto it = Finv_.find({a, b, c, d});
  if (it == Finv_.end())
    throw ContractViolation("F-block (" + str(a) + "," + str(b) + "," + str(c) + ";" + str(d) +
                            ") is missing or not invertible");
  return it->second;
}

void FusionCategory::set_F(Label a, Label b, Label c, Label d, Matrix block) {
  int nr = static_cast<int>(F_rows(a, b, c, d).size());
  int nc = static_cast<int>(F_cols(a, b, c, d).size());
  if (block.rows() != nr || block.cols() != nc)
    throw ContractViolation("F-block (" + str(a) + "," + str(b) + "," + str(c) + ";" + str(d) +
                            ") has shape " + std::to_string(block.rows()) + "x" +
                            std::to_string(block.cols()) + ", expected " + std::to_string(nr) +
                            "x" + std::to_string(nc));
  Finv_.erase({a, b, c, d});
  if (nr == nc) {
    auto inv = inverse(block);
    if (inv) Finv_[{a, b, c, d}] = *inv;
  }
  F_[{a, b, c, d}] = std::move(block);
}

void FusionCategory::fill_default_F() {
  int n = rank();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d) {
          if (has_F(a, b, c, d)) continue;
          int nr = static_cast<int>(F_rows(a, b, c, d).size());
          int nc = static_cast<int>(F_cols(a, b, c, d).size());
          if (nr == 0 || nr != nc) continue;
          bool unit_leg = a == unit_ || b == unit_ || c == unit_;
          if (unit_leg || nr == 1) set_F(a, b, c, d, Matrix::identity(nr));
        }
}

std::vector<std::tuple<Label, Label, Label, Label>> FusionCategory::missing_F() const {
  std::vector<std::tuple<Label, Label, Label, Label>> out;
  int n = rank();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d)
          if (!has_F(a, b, c, d) && !F_rows(a, b, c, d).empty()) out.emplace_back(a, b, c, d);
  return out;
}

Scalar FusionCategory::qdim(Label a) const { return pivotal(a) * kappa(dual(a)); }

Scalar FusionCategory::qdim_left(Label a) const { return kappa(a) / pivotal(a); }

Scalar FusionCategory::global_dim() const {
  Scalar s = Scalar::zero(field());
  for (Label a = 0; a < rank(); ++a) s += qdim(a) * qdim_left(a);
  return s;
}

}  // namespace sn
