#include "stringnet/fusion_tree.hpp"

#include <algorithm>

#include "stringnet/errors.hpp"

namespace sn {

std::vector<Label> FusionTree::leaves() const {
  if (is_leaf()) return {label};
  auto l = kids[0].leaves();
  auto r = kids[1].leaves();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

bool FusionTree::operator==(const FusionTree& o) const {
  return label == o.label && mu == o.mu && kids == o.kids;
}

bool FusionTree::operator<(const FusionTree& o) const {
  if (label != o.label) return label < o.label;
  if (mu != o.mu) return mu < o.mu;
  return std::lexicographical_compare(kids.begin(), kids.end(), o.kids.begin(), o.kids.end());
}

int FusionTree::vertex_count() const {
  if (is_leaf()) return 0;
  return 1 + kids[0].vertex_count() + kids[1].vertex_count();
}

std::string FusionTree::str(const FusionCategory& C) const {
  if (is_leaf()) return C.label_name(label);
  std::string s = "(" + kids[0].str(C) + " " + kids[1].str(C) + ")_" + C.label_name(label);
  if (mu) s += "#" + std::to_string(mu + 1);
  return s;
}

bool tree_admissible(const FusionCategory& C, const FusionTree& t) {
  if (t.label < 0 || t.label >= C.rank()) return false;
  if (t.is_leaf()) return true;
  if (t.kids.size() != 2) return false;
  if (t.mu < 0 || t.mu >= C.N(t.kids[0].label, t.kids[1].label, t.label)) return false;
  return tree_admissible(C, t.kids[0]) && tree_admissible(C, t.kids[1]);
}

namespace {

FusionTree* locate(FusionTree& t, const std::string& path) {
  FusionTree* cur = &t;
  for (char ch : path) {
    if (cur->is_leaf()) return nullptr;
    if (ch == 'L') cur = &cur->kids[0];
    else if (ch == 'R') cur = &cur->kids[1];
    else return nullptr;
  }
  return cur;
}

void add_to(TreeCombo& out, const FusionTree& t, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = out.emplace(t, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

TreeCombo f_move(const FusionCategory& C, const FusionTree& t, const std::string& path,
                 bool inverse) {
  FusionTree copy = t;
  FusionTree* n = locate(copy, path);
  if (!n || n->is_leaf())
    throw ContractViolation("f_move: path '" + path + "' does not address an internal node");
  TreeCombo out;
  Label d = n->label;
  if (!inverse) {
    if (n->kids[0].is_leaf())
      throw ContractViolation("f_move: left child at '" + path + "' is not a branching");
    FusionTree A = n->kids[0].kids[0], B = n->kids[0].kids[1], Cc = n->kids[1];
    Label a = A.label, b = B.label, c = Cc.label, e = n->kids[0].label;
    const Matrix& F = C.F(a, b, c, d);
    int r = C.F_row_pos(a, b, c, d, {e, n->kids[0].mu, n->mu});
    auto cols = C.F_cols(a, b, c, d);
    for (size_t k = 0; k < cols.size(); ++k) {
      const Scalar& coef = F(r, static_cast<int>(k));
      if (coef.is_zero()) continue;
      *n = FusionTree::node(d, cols[k].m2, A, FusionTree::node(cols[k].x, cols[k].m1, B, Cc));
      add_to(out, copy, coef);
    }
  } else {
    if (n->kids[1].is_leaf())
      throw ContractViolation("f_move: right child at '" + path + "' is not a branching");
    FusionTree A = n->kids[0], B = n->kids[1].kids[0], Cc = n->kids[1].kids[1];
    Label a = A.label, b = B.label, c = Cc.label, f = n->kids[1].label;
    const Matrix& Fi = C.F_inv(a, b, c, d);
    int col = C.F_col_pos(a, b, c, d, {f, n->kids[1].mu, n->mu});
    auto rows = C.F_rows(a, b, c, d);
    for (size_t k = 0; k < rows.size(); ++k) {
      const Scalar& coef = Fi(col, static_cast<int>(k));
      if (coef.is_zero()) continue;
      *n = FusionTree::node(d, rows[k].m2, FusionTree::node(rows[k].x, rows[k].m1, A, B), Cc);
      add_to(out, copy, coef);
    }
  }
  return out;
}

TreeCombo f_move(const FusionCategory& C, const TreeCombo& x, const std::string& path,
                 bool inverse) {
  TreeCombo out;
  for (const auto& [t, s] : x)
    for (const auto& [u, c] : f_move(C, t, path, inverse)) add_to(out, u, s * c);
  return out;
}

namespace {

void trees_rec(const FusionCategory& C, const std::vector<Label>& leaves, size_t lo, size_t hi,
               Label root, std::vector<FusionTree>& out) {
  if (hi - lo == 1) {
    if (leaves[lo] == root) out.push_back(FusionTree::leaf(root));
    return;
  }
  for (size_t split = lo + 1; split < hi; ++split)
    for (Label l = 0; l < C.rank(); ++l)
      for (Label r = 0; r < C.rank(); ++r) {
        int n = C.N(l, r, root);
        if (!n) continue;
        std::vector<FusionTree> L, R;
        trees_rec(C, leaves, lo, split, l, L);
        if (L.empty()) continue;
        trees_rec(C, leaves, split, hi, r, R);
        for (const auto& a : L)
          for (const auto& b : R)
            for (int mu = 0; mu < n; ++mu) out.push_back(FusionTree::node(root, mu, a, b));
      }
}

}  // namespace

std::vector<FusionTree> all_trees(const FusionCategory& C, const std::vector<Label>& leaves,
                                  Label root) {
  std::vector<FusionTree> out;
  if (leaves.empty()) return out;
  trees_rec(C, leaves, 0, leaves.size(), root, out);
  return out;
}

std::vector<FusionTree> left_combed_trees(const FusionCategory& C,
                                          const std::vector<Label>& leaves, Label root) {
  std::vector<FusionTree> out;
  if (leaves.empty()) return out;
  std::vector<FusionTree> cur{FusionTree::leaf(leaves[0])};
  for (size_t k = 1; k < leaves.size(); ++k) {
    std::vector<FusionTree> next;
    for (const auto& t : cur)
      for (Label e = 0; e < C.rank(); ++e)
        for (int mu = 0; mu < C.N(t.label, leaves[k], e); ++mu)
          next.push_back(FusionTree::node(e, mu, t, FusionTree::leaf(leaves[k])));
    cur = std::move(next);
  }
  for (auto& t : cur)
    if (t.label == root) out.push_back(std::move(t));
  return out;
}

}  // namespace sn
