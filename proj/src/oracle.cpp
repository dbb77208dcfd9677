#include "stringnet/oracle.hpp"

#include <map>

#include "stringnet/errors.hpp"
#include "stringnet/fusion_tree.hpp"
#include "stringnet/linalg.hpp"

namespace sn {

namespace {

void internal_paths(const FusionTree& t, const std::string& here, std::vector<std::string>& out) {
  if (t.is_leaf()) return;
  if (!t.kids[0].is_leaf()) out.push_back(here);
  internal_paths(t.kids[0], here + "L", out);
  internal_paths(t.kids[1], here + "R", out);
}

void over_budget(int need, int budget, const std::string& what) {
  if (need > budget)
    throw BudgetExceeded(what + " needs " + std::to_string(need) + " vertices, budget is " + std::to_string(budget));
}

// coordinates of m in the span of basis (assumed independent)
Vec coords_in(const Engine& E, const std::vector<Mor>& basis, const Mor& m) {
  Vec target = E.flatten(m);
  if (basis.empty()) {
    for (const auto& x : target)
      if (!x.is_zero()) throw ContractViolation("morphism outside the expected span");
    return {};
  }
  Matrix A(int(target.size()), int(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) {
    Vec v = E.flatten(basis[k]);
    for (size_t i = 0; i < v.size(); ++i) A(int(i), int(k)) = v[i];
  }
  auto x = solve_linear(A, Matrix::column(target));
  if (!x) throw ContractViolation("morphism outside the expected span");
  return x->col(0);
}

// X~ for a circle decoration: the points tensored over the internal algebras,
// an A-A-bimodule for the cut algebra A.
Bimodule circle_bimodule(const Engine& E, const FDec& d) {
  if (d.points.empty()) return regular_bimodule(E, d.segs[0]);
  Bimodule acc = *d.points[0];
  for (size_t i = 1; i < d.points.size(); ++i) acc = relative_tensor(E, acc, *d.points[i]).product;
  return acc;
}

}  // namespace

OracleResult oracle_disk(const FusionCategory& C, const std::vector<Label>& boundary, int budget) {
  for (Label a : boundary) C.check_label(a);
  OracleResult r;
  int n = static_cast<int>(boundary.size());
  r.max_vertices = std::max(0, n - 1);
  over_budget(r.max_vertices, budget, "disk oracle");
  if (n == 0) {
    r.dim = r.spanning = 1;
    return r;
  }
  auto trees = all_trees(C, boundary, C.unit());
  std::map<FusionTree, int> index;
  for (const auto& t : trees) index.emplace(t, static_cast<int>(index.size()));
  r.spanning = static_cast<int>(trees.size());
  std::vector<Vec> rels;
  for (const auto& t : trees) {
    std::vector<std::string> paths;
    internal_paths(t, "", paths);
    for (const auto& p : paths) {
      Vec v(trees.size(), Scalar::zero(C.field()));
      v[index.at(t)] += Scalar(1);
      for (const auto& [u, c] : f_move(C, t, p)) v[index.at(u)] -= c;
      rels.push_back(std::move(v));
    }
  }
  r.relations = static_cast<int>(rels.size());
  r.dim = Quotient(r.spanning, rels).dim();
  return r;
}

OracleResult oracle_annulus(const Engine& E, const Obj& X, const Obj& Y, int budget) {
  const FusionCategory& C = E.cat();
  int nx = static_cast<int>(X.size()), ny = static_cast<int>(Y.size());
  auto cost = [&](int m) { return std::max(0, m + nx - 1) + std::max(0, ny + m - 1) + 1; };
  over_budget(cost(1), budget, "annulus oracle");
  int L = cost(2) <= budget ? 2 : 1;
  OracleResult r;
  r.max_vertices = cost(L);
  std::vector<Obj> wraps{{}};
  for (int len = 1; len <= L; ++len) {
    std::vector<Obj> next;
    for (const auto& w : wraps)
      if (int(w.size()) == len - 1)
        for (Label a = 0; a < C.rank(); ++a) next.push_back(concat(w, simple(a)));
    wraps.insert(wraps.end(), next.begin(), next.end());
  }
  std::vector<int> offset;
  for (const auto& w : wraps) {
    offset.push_back(r.spanning);
    r.spanning += E.hom_dim(concat(w, X), concat(Y, w));
  }
  std::vector<Vec> rels;
  Mor idX = E.id(X), idY = E.id(Y);
  for (size_t i = 0; i < wraps.size(); ++i)
    for (size_t j = 0; j < wraps.size(); ++j) {
      const Obj &w = wraps[i], &w2 = wraps[j];
      int ng = E.hom_dim(w, w2);
      if (!ng) continue;
      Obj src = concat(w2, X), tgt = concat(Y, w);
      int np = E.hom_dim(src, tgt);
      for (int g = 0; g < ng; ++g)
        for (int p = 0; p < np; ++p) {
          Mor G = E.basis_mor(w, w2, g), P = E.basis_mor(src, tgt, p);
          Vec v(r.spanning, Scalar::zero(E.field()));
          Vec a = E.flatten(P * E.tensor(G, idX));
          Vec b = E.flatten(E.tensor(idY, G) * P);
          for (size_t k = 0; k < a.size(); ++k) v[offset[i] + k] += a[k];
          for (size_t k = 0; k < b.size(); ++k) v[offset[j] + k] -= b[k];
          rels.push_back(std::move(v));
        }
    }
  r.relations = static_cast<int>(rels.size());
  r.dim = Quotient(r.spanning, rels).dim();
  return r;
}

OracleResult oracle_frob_annulus(const Engine& E, const FDec& a, const FDec& b, int budget) {
  if (a.man != Manifold::circle || b.man != Manifold::circle)
    throw MalformedDecoration("annulus oracle needs circle decorations");
  check_decoration(a);
  check_decoration(b);
  int pa = static_cast<int>(a.points.size()), pb = static_cast<int>(b.points.size());
  OracleResult r;
  r.max_vertices = 4 + pa + pb + std::max(0, pa - 1) + std::max(0, pb - 1);
  over_budget(r.max_vertices, budget, "Frobenius annulus oracle");
  AlgPtr A = a.segs[0], B = b.segs[0];
  Bimodule X = circle_bimodule(E, a), Y = circle_bimodule(E, b);
  const FusionCategory& C = E.cat();
  struct Wrap {
    Bimodule W;
    RelativeTensor WX, YW;
    std::vector<Mor> basis;  // Hom_{B|A}(W x_A X, Y x_B W)
    int offset = 0;
  };
  std::vector<Wrap> wraps;
  for (Label z = 0; z < C.rank(); ++z) {
    Wrap w;
    w.W = free_bimodule(E, B, {z}, A);
    w.WX = relative_tensor(E, w.W, X);
    w.YW = relative_tensor(E, Y, w.W);
    w.basis = bimodule_hom_space(E, w.WX.product, w.YW.product);
    w.offset = r.spanning;
    r.spanning += static_cast<int>(w.basis.size());
    wraps.push_back(std::move(w));
  }
  std::vector<Vec> rels;
  Mor idX = E.id(X.M()), idY = E.id(Y.M());
  for (size_t i = 0; i < wraps.size(); ++i)
    for (size_t j = 0; j < wraps.size(); ++j) {
      const Wrap &wi = wraps[i], &wj = wraps[j];
      auto gs = bimodule_hom_space(E, wi.W, wj.W);
      // psi in Hom(Wj x X, Y x Wi)
      auto mixed_src = wj.WX;
      auto mixed_tgt = wi.YW;
      auto ps = bimodule_hom_space(E, mixed_src.product, mixed_tgt.product);
      for (const auto& g : gs) {
        Mor g_x = wj.WX.proj * E.tensor(g, idX) * wi.WX.incl;  // Wi x X -> Wj x X
        Mor y_g = wj.YW.proj * E.tensor(idY, g) * wi.YW.incl;  // Y x Wi -> Y x Wj
        for (const auto& p : ps) {
          Vec v(r.spanning, Scalar::zero(E.field()));
          Vec lhs = coords_in(E, wi.basis, p * g_x);
          Vec rhs = coords_in(E, wj.basis, y_g * p);
          for (size_t k = 0; k < lhs.size(); ++k) v[wi.offset + k] += lhs[k];
          for (size_t k = 0; k < rhs.size(); ++k) v[wj.offset + k] -= rhs[k];
          rels.push_back(std::move(v));
        }
      }
    }
  r.relations = static_cast<int>(rels.size());
  r.dim = Quotient(r.spanning, rels).dim();
  return r;
}

}  // namespace sn
