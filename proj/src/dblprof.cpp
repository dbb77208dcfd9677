#include "stringnet/dblprof.hpp"

#include <numeric>

#include "stringnet/errors.hpp"
#include "stringnet/transform.hpp"

namespace sn {

namespace {

Vec zeros(int n) { return Vec(n, Scalar(0)); }

Vec unit_vec(int n, int k) {
  Vec v = zeros(n);
  v.at(k) = Scalar(1);
  return v;
}

Matrix combine(const std::vector<Matrix>& Ms, const Vec& c, int rows, int cols) {
  Matrix out(rows, cols);
  for (size_t k = 0; k < Ms.size(); ++k)
    if (!c[k].is_zero()) out += c[k] * Ms[k];
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

std::string pair_name(const FinLinCategory& A, int a, const FinLinCategory& B, int b) {
  return "(" + A.object(a) + ", " + B.object(b) + ")";
}

// ---- Mat categories: hom blocks per simple

using Blocks = std::vector<Matrix>;

Blocks to_blocks(const std::vector<int>& x, const std::vector<int>& y, const Vec& v) {
  Blocks B;
  size_t k = 0;
  for (size_t s = 0; s < x.size(); ++s) {
    Matrix M(y[s], x[s]);
    for (int i = 0; i < y[s]; ++i)
      for (int j = 0; j < x[s]; ++j) M(i, j) = v.at(k++);
    B.push_back(std::move(M));
  }
  return B;
}

Vec from_blocks(const Blocks& B) {
  Vec v;
  for (const auto& M : B)
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) v.push_back(M(i, j));
  return v;
}

int mat_dim(const std::vector<int>& x, const std::vector<int>& y) {
  int d = 0;
  for (size_t s = 0; s < x.size(); ++s) d += x[s] * y[s];
  return d;
}

std::vector<int> apply_mult(const std::vector<std::vector<int>>& K, const std::vector<int>& x) {
  std::vector<int> out(K.size(), 0);
  for (size_t t = 0; t < K.size(); ++t)
    for (size_t s = 0; s < x.size(); ++s) out[t] += K[t][s] * x[s];
  return out;
}

// K applied to blocks: per target simple, the block diagonal of K[t][s] copies of f_s
Blocks apply_mult(const std::vector<std::vector<int>>& K, const std::vector<int>& x, const std::vector<int>& y,
                  const Blocks& f) {
  Blocks out;
  auto Kx = apply_mult(K, x), Ky = apply_mult(K, y);
  for (size_t t = 0; t < K.size(); ++t) {
    Matrix M(Ky[t], Kx[t]);
    int r = 0, c = 0;
    for (size_t s = 0; s < x.size(); ++s)
      for (int copy = 0; copy < K[t][s]; ++copy) {
        M.set_block(r, c, f[s]);
        r += y[s];
        c += x[s];
      }
    out.push_back(std::move(M));
  }
  return out;
}

std::string mult_str(const std::vector<int>& x) {
  std::string s = "[";
  for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + "]";
}

}  // namespace

// ---- FinLinCategory

FinLinCategory::FinLinCategory(std::string name, std::vector<std::string> objects, std::vector<std::vector<int>> dims,
                               const ComposeFn& compose, std::vector<Vec> identities)
    : name_(std::move(name)), objects_(std::move(objects)), dims_(std::move(dims)), id_(std::move(identities)) {
  int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::vector<Matrix> Ms;
        for (int k = 0; k < dim(y, z); ++k) {
          Matrix M(dim(x, z), dim(x, y));
          Vec g = unit_vec(dim(y, z), k);
          for (int j = 0; j < dim(x, y); ++j) {
            Vec c = compose(x, y, z, g, unit_vec(dim(x, y), j));
            for (int r = 0; r < dim(x, z); ++r) M(r, j) = c[r];
          }
          Ms.push_back(std::move(M));
        }
        comp_[{x, y, z}] = std::move(Ms);
      }
}

FinLinCategory FinLinCategory::tabulate(std::string name, const CylinderCategory& C) {
  int n = C.object_count();
  std::vector<std::string> objs;
  std::vector<std::vector<int>> dims(n, std::vector<int>(n));
  std::vector<Vec> ids;
  for (int x = 0; x < n; ++x) {
    objs.push_back(C.object_name(x));
    ids.push_back(C.identity(x));
    for (int y = 0; y < n; ++y) dims[x][y] = C.dim(x, y);
  }
  auto comp = [&C](int x, int y, int z, const Vec& g, const Vec& f) { return C.compose(x, y, z, g, f); };
  return FinLinCategory(std::move(name), objs, dims, comp, ids);
}

FinLinCategory FinLinCategory::karoubi(std::string name, const CylinderCategory& C,
                                       const std::vector<KarObject>& objs) {
  int n = static_cast<int>(objs.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> dims(n, std::vector<int>(n));
  std::map<std::pair<int, int>, Matrix> basis;
  for (int x = 0; x < n; ++x) {
    names.push_back(C.object_name(objs[x].base) + "^e");
    for (int y = 0; y < n; ++y) {
      basis[{x, y}] = karoubi_hom(C, objs[x], objs[y]);
      dims[x][y] = basis[{x, y}].cols();
    }
  }
  std::vector<Vec> ids;
  for (int x = 0; x < n; ++x) ids.push_back(coords_in_columns(basis.at({x, x}), objs[x].e));
  auto comp = [&](int x, int y, int z, const Vec& g, const Vec& f) {
    Vec G = LinFunctor::mul(basis.at({y, z}), g), F = LinFunctor::mul(basis.at({x, y}), f);
    return coords_in_columns(basis.at({x, z}), C.compose(objs[x].base, objs[y].base, objs[z].base, G, F));
  };
  return FinLinCategory(std::move(name), names, dims, comp, ids);
}

Vec FinLinCategory::basis(int x, int y, int k) const { return unit_vec(dim(x, y), k); }

Matrix FinLinCategory::post(int x, int y, int z, const Vec& g) const {
  return combine(comp_.at({x, y, z}), g, dim(x, z), dim(x, y));
}

Matrix FinLinCategory::pre(int x, int y, int z, const Vec& f) const {
  const auto& Ms = comp_.at({x, y, z});
  Matrix out(dim(x, z), dim(y, z));
  for (int k = 0; k < dim(y, z); ++k) {
    Vec c = LinFunctor::mul(Ms[k], f);
    for (int r = 0; r < dim(x, z); ++r) out(r, k) = c[r];
  }
  return out;
}

Vec FinLinCategory::compose(int x, int y, int z, const Vec& g, const Vec& f) const {
  return LinFunctor::mul(post(x, y, z, g), f);
}

CheckReport FinLinCategory::check() const {
  CheckReport rep;
  int n = size();
  bool unital = true, assoc = true;
  std::string wu, wa;
  for (int x = 0; x < n && unital; ++x)
    for (int y = 0; y < n && unital; ++y)
      for (int k = 0; k < dim(x, y) && unital; ++k) {
        Vec f = basis(x, y, k);
        if (compose(x, y, y, identity(y), f) != f || compose(x, x, y, f, identity(x)) != f) {
          unital = false;
          wu = "basis " + std::to_string(k) + " of hom(" + object(x) + ", " + object(y) + ")";
        }
      }
  for (int w = 0; w < n && assoc; ++w)
    for (int x = 0; x < n && assoc; ++x)
      for (int y = 0; y < n && assoc; ++y)
        for (int z = 0; z < n && assoc; ++z)
          for (int i = 0; i < dim(w, x) && assoc; ++i)
            for (int j = 0; j < dim(x, y) && assoc; ++j)
              for (int k = 0; k < dim(y, z) && assoc; ++k) {
                Vec f = basis(w, x, i), g = basis(x, y, j), h = basis(y, z, k);
                if (compose(w, y, z, h, compose(w, x, y, g, f)) != compose(w, x, z, compose(x, y, z, h, g), f)) {
                  assoc = false;
                  wa = "objects " + object(w) + ", " + object(x) + ", " + object(y) + ", " + object(z);
                }
              }
  rep.add(name_ + " unital", unital, wu);
  rep.add(name_ + " associative", assoc, wa);
  return rep;
}

FinLinCategory mat_category(std::string name, int simples, const std::vector<std::vector<int>>& objects) {
  int n = static_cast<int>(objects.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> dims(n, std::vector<int>(n));
  std::vector<Vec> ids;
  for (int x = 0; x < n; ++x) {
    if (int(objects[x].size()) != simples) throw ContractViolation("Mat object has the wrong number of simples");
    names.push_back(mult_str(objects[x]));
    for (int y = 0; y < n; ++y) dims[x][y] = mat_dim(objects[x], objects[y]);
    Blocks I;
    for (int m : objects[x]) I.push_back(Matrix::identity(m));
    ids.push_back(from_blocks(I));
  }
  auto comp = [&objects](int x, int y, int z, const Vec& g, const Vec& f) {
    Blocks G = to_blocks(objects[y], objects[z], g), F = to_blocks(objects[x], objects[y], f), H;
    for (size_t s = 0; s < G.size(); ++s) H.push_back(G[s] * F[s]);
    return from_blocks(H);
  };
  FinLinCategory C(std::move(name), names, dims, comp, ids);
  C.mat_objects = objects;
  C.mat_simples = simples;
  return C;
}

// ---- functors

Vec LinFunctor::mul(const Matrix& M, const Vec& v) {
  if (M.cols() != int(v.size())) throw ContractViolation("matrix-vector size mismatch");
  Vec out = zeros(M.rows());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!v[j].is_zero()) out[i] += M(i, j) * v[j];
  return out;
}

CheckReport LinFunctor::check() const {
  CheckReport rep;
  const FinLinCategory &A = *src, &B = *tgt;
  bool ok = true;
  std::string w;
  for (int x = 0; x < A.size() && ok; ++x) {
    if (apply(x, x, A.identity(x)) != B.identity(obj[x])) {
      ok = false;
      w = "identity of " + A.object(x);
    }
    for (int y = 0; y < A.size() && ok; ++y)
      for (int z = 0; z < A.size() && ok; ++z)
        for (int i = 0; i < A.dim(x, y) && ok; ++i)
          for (int j = 0; j < A.dim(y, z) && ok; ++j) {
            Vec f = A.basis(x, y, i), g = A.basis(y, z, j);
            if (apply(x, z, A.compose(x, y, z, g, f)) != B.compose(obj[x], obj[y], obj[z], apply(y, z, g), apply(x, y, f))) {
              ok = false;
              w = "composite through " + A.object(x) + ", " + A.object(y) + ", " + A.object(z);
            }
          }
  }
  rep.add("functoriality", ok, w);
  return rep;
}

LinFunctor identity_functor(const FinLinCategory& A) {
  LinFunctor F;
  F.src = F.tgt = &A;
  for (int x = 0; x < A.size(); ++x) {
    F.obj.push_back(x);
    for (int y = 0; y < A.size(); ++y) F.mor[{x, y}] = Matrix::identity(A.dim(x, y));
  }
  return F;
}

LinFunctor compose_functors(const LinFunctor& G, const LinFunctor& F) {
  if (F.tgt != G.src) throw CategoryMismatch("functors do not compose");
  LinFunctor H;
  H.src = F.src;
  H.tgt = G.tgt;
  for (int x = 0; x < F.src->size(); ++x) {
    H.obj.push_back(G.obj[F.obj[x]]);
    for (int y = 0; y < F.src->size(); ++y) H.mor[{x, y}] = G.mor.at({F.obj[x], F.obj[y]}) * F.mor.at({x, y});
  }
  return H;
}

bool same_functor(const LinFunctor& F, const LinFunctor& G) {
  return F.src == G.src && F.tgt == G.tgt && F.obj == G.obj && F.mor == G.mor;
}

LinFunctor mat_functor(const FinLinCategory& A, const FinLinCategory& B, const std::vector<std::vector<int>>& K) {
  LinFunctor F;
  F.src = &A;
  F.tgt = &B;
  for (int x = 0; x < A.size(); ++x) {
    auto Kx = apply_mult(K, A.mat_objects[x]);
    int found = -1;
    for (int y = 0; y < B.size() && found < 0; ++y)
      if (B.mat_objects[y] == Kx) found = y;
    if (found < 0) throw ContractViolation("image object " + mult_str(Kx) + " is not listed in " + B.name());
    F.obj.push_back(found);
  }
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y) {
      const auto &ox = A.mat_objects[x], &oy = A.mat_objects[y];
      Matrix M(B.dim(F.obj[x], F.obj[y]), A.dim(x, y));
      for (int k = 0; k < A.dim(x, y); ++k) {
        Vec img = from_blocks(apply_mult(K, ox, oy, to_blocks(ox, oy, A.basis(x, y, k))));
        for (int r = 0; r < M.rows(); ++r) M(r, k) = img[r];
      }
      F.mor[{x, y}] = std::move(M);
    }
  return F;
}

// ---- profunctors

Matrix Profunctor::left_matrix(int a, int b, int b2, const Vec& g) const {
  return combine(left.at({a, b, b2}), g, dim(a, b2), dim(a, b));
}

Matrix Profunctor::right_matrix(int a2, int a, int b, const Vec& f) const {
  return combine(right.at({a2, a, b}), f, dim(a2, b), dim(a, b));
}

Vec Profunctor::act_left(int a, int b, int b2, const Vec& g, const Vec& p) const {
  return LinFunctor::mul(left_matrix(a, b, b2, g), p);
}

Vec Profunctor::act_right(int a2, int a, int b, const Vec& f, const Vec& p) const {
  return LinFunctor::mul(right_matrix(a2, a, b, f), p);
}

CheckReport Profunctor::check() const {
  CheckReport rep;
  const FinLinCategory &A = *src, &B = *tgt;
  bool lok = true, rok = true, mix = true;
  std::string wl, wr, wm;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) {
      if (dim(a, b) == 0) continue;
      std::string at = name + pair_name(A, a, B, b);
      Matrix I = Matrix::identity(dim(a, b));
      if (lok && left_matrix(a, b, b, B.identity(b)) != I) lok = false, wl = "identity at " + at;
      if (rok && right_matrix(a, a, b, A.identity(a)) != I) rok = false, wr = "identity at " + at;
      for (int b2 = 0; b2 < B.size() && lok; ++b2)
        for (int b3 = 0; b3 < B.size() && lok; ++b3)
          for (int i = 0; i < B.dim(b, b2) && lok; ++i)
            for (int j = 0; j < B.dim(b2, b3) && lok; ++j) {
              Vec g = B.basis(b, b2, i), h = B.basis(b2, b3, j);
              if (left_matrix(a, b, b3, B.compose(b, b2, b3, h, g)) != left.at({a, b2, b3})[j] * left.at({a, b, b2})[i])
                lok = false, wl = "left action at " + at;
            }
      for (int a2 = 0; a2 < A.size() && rok; ++a2)
        for (int a3 = 0; a3 < A.size() && rok; ++a3)
          for (int i = 0; i < A.dim(a2, a) && rok; ++i)
            for (int j = 0; j < A.dim(a3, a2) && rok; ++j) {
              Vec f = A.basis(a2, a, i), f2 = A.basis(a3, a2, j);
              if (right_matrix(a3, a, b, A.compose(a3, a2, a, f, f2)) != right.at({a3, a2, b})[j] * right.at({a2, a, b})[i])
                rok = false, wr = "right action at " + at;
            }
      for (int a2 = 0; a2 < A.size() && mix; ++a2)
        for (int b2 = 0; b2 < B.size() && mix; ++b2)
          for (int i = 0; i < A.dim(a2, a) && mix; ++i)
            for (int j = 0; j < B.dim(b, b2) && mix; ++j)
              if (right.at({a2, a, b2})[i] * left.at({a, b, b2})[j] != left.at({a2, b, b2})[j] * right.at({a2, a, b})[i])
                mix = false, wm = "mixed actions at " + at;
    }
  rep.add(name + " left action", lok, wl);
  rep.add(name + " right action", rok, wr);
  rep.add(name + " actions commute", mix, wm);
  return rep;
}

Profunctor identity_profunctor(const FinLinCategory& A) {
  Profunctor P;
  P.name = "U_" + A.name();
  P.src = P.tgt = &A;
  int n = A.size();
  P.dims.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) P.dims[a][b] = A.dim(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::vector<Matrix> L, R;
        for (int k = 0; k < A.dim(b, c); ++k) L.push_back(A.post(a, b, c, A.basis(b, c, k)));
        for (int k = 0; k < A.dim(a, b); ++k) R.push_back(A.pre(a, b, c, A.basis(a, b, k)));
        P.left[{a, b, c}] = std::move(L);
        P.right[{a, b, c}] = std::move(R);
      }
  return P;
}

Profunctor mat_profunctor(const FinLinCategory& A, const FinLinCategory& B, const std::vector<std::vector<int>>& K) {
  Profunctor P;
  P.name = "P_" + A.name() + "_" + B.name();
  P.src = &A;
  P.tgt = &B;
  int na = A.size(), nb = B.size();
  P.dims.assign(na, std::vector<int>(nb));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) P.dims[a][b] = mat_dim(apply_mult(K, A.mat_objects[a]), B.mat_objects[b]);
  for (int a = 0; a < na; ++a) {
    auto Ka = apply_mult(K, A.mat_objects[a]);
    for (int b = 0; b < nb; ++b)
      for (int b2 = 0; b2 < nb; ++b2) {
        std::vector<Matrix> L;
        const auto &ob = B.mat_objects[b], &ob2 = B.mat_objects[b2];
        for (int k = 0; k < B.dim(b, b2); ++k) {
          Blocks g = to_blocks(ob, ob2, B.basis(b, b2, k));
          Matrix M(P.dims[a][b2], P.dims[a][b]);
          for (int j = 0; j < P.dims[a][b]; ++j) {
            Blocks p = to_blocks(Ka, ob, unit_vec(P.dims[a][b], j)), q;
            for (size_t t = 0; t < p.size(); ++t) q.push_back(g[t] * p[t]);
            Vec v = from_blocks(q);
            for (int r = 0; r < M.rows(); ++r) M(r, j) = v[r];
          }
          L.push_back(std::move(M));
        }
        P.left[{a, b, b2}] = std::move(L);
      }
  }
  for (int a2 = 0; a2 < na; ++a2)
    for (int a = 0; a < na; ++a) {
      auto Ka = apply_mult(K, A.mat_objects[a]), Ka2 = apply_mult(K, A.mat_objects[a2]);
      for (int b = 0; b < nb; ++b) {
        std::vector<Matrix> R;
        const auto& ob = B.mat_objects[b];
        for (int k = 0; k < A.dim(a2, a); ++k) {
          Blocks Kf = apply_mult(K, A.mat_objects[a2], A.mat_objects[a], to_blocks(A.mat_objects[a2], A.mat_objects[a], A.basis(a2, a, k)));
          Matrix M(P.dims[a2][b], P.dims[a][b]);
          for (int j = 0; j < P.dims[a][b]; ++j) {
            Blocks p = to_blocks(Ka, ob, unit_vec(P.dims[a][b], j)), q;
            for (size_t t = 0; t < p.size(); ++t) q.push_back(p[t] * Kf[t]);
            Vec v = from_blocks(q);
            for (int r = 0; r < M.rows(); ++r) M(r, j) = v[r];
          }
          R.push_back(std::move(M));
        }
        P.right[{a2, a, b}] = std::move(R);
      }
    }
  return P;
}

// ---- composites

namespace {

// Row echelon form over sparse rows; keeps only independent relations so the
// dense quotient sees at most ambient-many rows.
class SparseEchelon {
 public:
  using Row = std::map<int, Scalar>;

  void add(Row r) {
    auto it = r.begin();
    while (it != r.end()) {
      auto p = rows_.find(it->first);
      if (p == rows_.end()) {
        ++it;
        continue;
      }
      Scalar f = it->second;
      int col = it->first;
      for (const auto& [c, x] : p->second) {
        Scalar& y = r[c];
        y -= f * x;
        if (y.is_zero()) r.erase(c);
      }
      it = r.upper_bound(col);
    }
    if (r.empty()) return;
    Scalar lead = Scalar(1) / r.begin()->second;
    for (auto& [c, x] : r) x *= lead;
    int col = r.begin()->first;
    rows_.emplace(col, std::move(r));
  }

  std::vector<Vec> dense(int n) const {
    std::vector<Vec> out;
    for (const auto& [p, r] : rows_) {
      Vec v = zeros(n);
      for (const auto& [c, x] : r) v[c] = x;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::map<int, Row> rows_;
};

// Matrix of the map between composite components induced by block maps
// b -> bmap(b) with matrices mat(b) on P (x) Q blocks.
Matrix map_composite(const ProfComposite& src, int a, int c, const ProfComposite& dst, int a2, int c2,
                     const std::function<int(int)>& bmap, const std::function<Matrix(int)>& mat) {
  const Quotient& qs = src.quot.at({a, c});
  const Quotient& qd = dst.quot.at({a2, c2});
  const auto& os = src.offsets.at({a, c});
  const auto& od = dst.offsets.at({a2, c2});
  int nb = static_cast<int>(os.size()) - 1;
  std::vector<Matrix> mats;
  for (int b = 0; b < nb; ++b) mats.push_back(os[b + 1] > os[b] ? mat(b) : Matrix());
  Matrix out(qd.dim(), qs.dim());
  for (int k = 0; k < qs.dim(); ++k) {
    Vec rep = qs.lift(unit_vec(qs.dim(), k));
    Vec img = zeros(qd.ambient());
    for (int b = 0; b < nb; ++b) {
      if (os[b + 1] == os[b]) continue;
      Vec blk(rep.begin() + os[b], rep.begin() + os[b + 1]);
      Vec v = LinFunctor::mul(mats[b], blk);
      int o = od[bmap(b)];
      for (size_t t = 0; t < v.size(); ++t) img[o + t] += v[t];
    }
    Vec cd = qd.coords(img);
    for (int r = 0; r < qd.dim(); ++r) out(r, k) = cd[r];
  }
  return out;
}

}  // namespace

Vec ProfComposite::cls(int a, int b, int c, const Vec& p, const Vec& q) const {
  const Quotient& Qt = quot.at({a, c});
  Vec rep = zeros(Qt.ambient());
  Vec v = kron_vec(p, q);
  int o = offsets.at({a, c})[b];
  for (size_t t = 0; t < v.size(); ++t) rep[o + t] = v[t];
  return Qt.coords(rep);
}

Vec ProfComposite::lift(int a, int c, const Vec& x) const { return quot.at({a, c}).lift(x); }

Vec ProfComposite::block(int a, int b, int c, const Vec& rep) const {
  const auto& o = offsets.at({a, c});
  return Vec(rep.begin() + o[b], rep.begin() + o[b + 1]);
}

ProfComposite prof_compose(const Profunctor& P, const Profunctor& Q, bool with_actions) {
  if (P.tgt != Q.src) throw CategoryMismatch("profunctors " + P.name + " and " + Q.name + " do not compose");
  const FinLinCategory &A = *P.src, &B = *P.tgt, &C = *Q.tgt;
  ProfComposite R;
  R.P = &P;
  R.Q = &Q;
  R.prof.name = P.name + "." + Q.name;
  R.prof.src = &A;
  R.prof.tgt = &C;
  R.prof.dims.assign(A.size(), std::vector<int>(C.size()));
  for (int a = 0; a < A.size(); ++a)
    for (int c = 0; c < C.size(); ++c) {
      std::vector<int> off{0};
      for (int b = 0; b < B.size(); ++b) off.push_back(off.back() + P.dim(a, b) * Q.dim(b, c));
      SparseEchelon rels;
      for (int b = 0; b < B.size(); ++b)
        for (int b2 = 0; b2 < B.size(); ++b2) {
          int dp = P.dim(a, b), dq2 = Q.dim(b2, c), dq = Q.dim(b, c);
          if (dp == 0 || dq2 == 0) continue;
          for (int k = 0; k < B.dim(b, b2); ++k) {
            const Matrix& Lg = P.left.at({a, b, b2})[k];   // P(a, b) -> P(a, b2)
            const Matrix& Rg = Q.right.at({b, b2, c})[k];  // Q(b2, c) -> Q(b, c)
            for (int i = 0; i < dp; ++i)
              for (int j = 0; j < dq2; ++j) {
                SparseEchelon::Row rel;
                for (int r = 0; r < Lg.rows(); ++r)
                  if (!Lg(r, i).is_zero()) rel[off[b2] + r * dq2 + j] += Lg(r, i);
                for (int l = 0; l < Rg.rows(); ++l)
                  if (!Rg(l, j).is_zero()) rel[off[b] + i * dq + l] -= Rg(l, j);
                std::erase_if(rel, [](const auto& e) { return e.second.is_zero(); });
                if (!rel.empty()) rels.add(std::move(rel));
              }
          }
        }
      R.offsets[{a, c}] = off;
      R.quot[{a, c}] = Quotient(off.back(), rels.dense(off.back()));
      R.prof.dims[a][c] = R.quot[{a, c}].dim();
    }
  if (!with_actions) return R;
  for (int a = 0; a < A.size(); ++a)
    for (int c = 0; c < C.size(); ++c)
      for (int c2 = 0; c2 < C.size(); ++c2) {
        std::vector<Matrix> L;
        for (int k = 0; k < C.dim(c, c2); ++k) {
          Vec h = C.basis(c, c2, k);
          L.push_back(map_composite(R, a, c, R, a, c2, [](int b) { return b; }, [&](int b) {
            return kron(Matrix::identity(P.dim(a, b)), Q.left_matrix(b, c, c2, h));
          }));
        }
        R.prof.left[{a, c, c2}] = std::move(L);
      }
  for (int a2 = 0; a2 < A.size(); ++a2)
    for (int a = 0; a < A.size(); ++a)
      for (int c = 0; c < C.size(); ++c) {
        std::vector<Matrix> Rm;
        for (int k = 0; k < A.dim(a2, a); ++k) {
          Vec f = A.basis(a2, a, k);
          Rm.push_back(map_composite(R, a, c, R, a2, c, [](int b) { return b; }, [&](int b) {
            return kron(P.right_matrix(a2, a, b, f), Matrix::identity(Q.dim(b, c)));
          }));
        }
        R.prof.right[{a2, a, c}] = std::move(Rm);
      }
  return R;
}

namespace {

// component (a, c) of a map out of a composite given on P (x) Q blocks
// by act(b, p_index, q_index) in the target space
Matrix out_of_composite(const ProfComposite& R, int a, int c, int tdim,
                        const std::function<Vec(int, int, int)>& act) {
  const Quotient& Qt = R.quot.at({a, c});
  const auto& off = R.offsets.at({a, c});
  Matrix out(tdim, Qt.dim());
  for (int k = 0; k < Qt.dim(); ++k) {
    Vec rep = Qt.lift(unit_vec(Qt.dim(), k));
    Vec img = zeros(tdim);
    for (int b = 0; b + 1 < int(off.size()); ++b) {
      int dq = R.Q->dim(b, c);
      for (int t = off[b]; t < off[b + 1]; ++t) {
        if (rep[t].is_zero()) continue;
        int i = (t - off[b]) / dq, j = (t - off[b]) % dq;
        Vec v = act(b, i, j);
        for (int r = 0; r < tdim; ++r) img[r] += rep[t] * v[r];
      }
    }
    for (int r = 0; r < tdim; ++r) out(r, k) = img[r];
  }
  return out;
}

}  // namespace

std::map<std::pair<int, int>, Matrix> left_unitor(const ProfComposite& UP) {
  const Profunctor& P = *UP.Q;
  std::map<std::pair<int, int>, Matrix> out;
  for (int a = 0; a < P.src->size(); ++a)
    for (int b = 0; b < P.tgt->size(); ++b)
      out[{a, b}] = out_of_composite(UP, a, b, P.dim(a, b), [&](int a2, int i, int j) {
        return P.act_right(a, a2, b, P.src->basis(a, a2, i), unit_vec(P.dim(a2, b), j));
      });
  return out;
}

std::map<std::pair<int, int>, Matrix> right_unitor(const ProfComposite& PU) {
  const Profunctor& P = *PU.P;
  std::map<std::pair<int, int>, Matrix> out;
  for (int a = 0; a < P.src->size(); ++a)
    for (int b = 0; b < P.tgt->size(); ++b)
      out[{a, b}] = out_of_composite(PU, a, b, P.dim(a, b), [&](int b2, int i, int j) {
        return P.act_left(a, b2, b, P.tgt->basis(b2, b, j), unit_vec(P.dim(a, b2), i));
      });
  return out;
}

std::map<std::pair<int, int>, Matrix> associator(const ProfComposite& PQ, const ProfComposite& PQ_R,
                                                 const ProfComposite& QR, const ProfComposite& P_QR) {
  const Profunctor &P = *PQ.P, &Q = *PQ.Q, &R = *QR.Q;
  std::map<std::pair<int, int>, Matrix> out;
  for (int a = 0; a < P.src->size(); ++a)
    for (int d = 0; d < R.tgt->size(); ++d)
      out[{a, d}] = out_of_composite(PQ_R, a, d, P_QR.prof.dim(a, d), [&](int c, int i, int j) {
        Vec rep = PQ.lift(a, c, unit_vec(PQ.prof.dim(a, c), i));
        Vec r = unit_vec(R.dim(c, d), j);
        Vec img = zeros(P_QR.prof.dim(a, d));
        for (int b = 0; b < P.tgt->size(); ++b) {
          int dq = Q.dim(b, c);
          Vec blk = PQ.block(a, b, c, rep);
          for (size_t t = 0; t < blk.size(); ++t) {
            if (blk[t].is_zero()) continue;
            Vec p = unit_vec(P.dim(a, b), int(t) / dq), q = unit_vec(dq, int(t) % dq);
            Vec v = P_QR.cls(a, b, d, p, QR.cls(b, c, d, q, r));
            for (size_t s = 0; s < v.size(); ++s) img[s] += blk[t] * v[s];
          }
        }
        return img;
      });
  return out;
}

bool all_invertible(const std::map<std::pair<int, int>, Matrix>& comps, std::string* witness) {
  for (const auto& [k, M] : comps)
    if (M.rows() != M.cols() || !inverse(M)) {
      if (witness)
        *witness = "component (" + std::to_string(k.first) + ", " + std::to_string(k.second) + ") of size " +
                   std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + " is singular";
      return false;
    }
  return true;
}

// ---- squares

CheckReport ProfSquare::check() const {
  CheckReport rep;
  const Profunctor &P = *top, &Q = *bottom;
  const FinLinCategory &A = *P.src, &B = *P.tgt;
  bool ok = true;
  std::string w;
  for (int a = 0; a < A.size() && ok; ++a)
    for (int b = 0; b < B.size() && ok; ++b) {
      const Matrix& M = comp.at({a, b});
      int Fa = left.obj[a], Gb = right.obj[b];
      for (int b2 = 0; b2 < B.size() && ok; ++b2)
        for (int k = 0; k < B.dim(b, b2) && ok; ++k) {
          Vec g = B.basis(b, b2, k);
          if (comp.at({a, b2}) * P.left_matrix(a, b, b2, g) != Q.left_matrix(Fa, Gb, right.obj[b2], right.apply(b, b2, g)) * M)
            ok = false, w = "left action at " + pair_name(A, a, B, b);
        }
      for (int a2 = 0; a2 < A.size() && ok; ++a2)
        for (int k = 0; k < A.dim(a2, a) && ok; ++k) {
          Vec f = A.basis(a2, a, k);
          if (comp.at({a2, b}) * P.right_matrix(a2, a, b, f) != Q.right_matrix(left.obj[a2], Fa, Gb, left.apply(a2, a, f)) * M)
            ok = false, w = "right action at " + pair_name(A, a, B, b);
        }
    }
  rep.add("square " + P.name + " => " + Q.name + " natural", ok, w);
  return rep;
}

ProfSquare identity_square(const Profunctor& P) {
  ProfSquare s;
  s.top = s.bottom = &P;
  s.left = identity_functor(*P.src);
  s.right = identity_functor(*P.tgt);
  for (int a = 0; a < P.src->size(); ++a)
    for (int b = 0; b < P.tgt->size(); ++b) s.comp[{a, b}] = Matrix::identity(P.dim(a, b));
  return s;
}

ProfSquare functor_square(const LinFunctor& F, const Profunctor& UA, const Profunctor& UB) {
  ProfSquare s;
  s.top = &UA;
  s.bottom = &UB;
  s.left = s.right = F;
  s.comp = F.mor;
  return s;
}

ProfSquare vcompose(const ProfSquare& beta, const ProfSquare& alpha) {
  if (alpha.bottom != beta.top) throw CategoryMismatch("squares do not compose vertically");
  ProfSquare s;
  s.top = alpha.top;
  s.bottom = beta.bottom;
  s.left = compose_functors(beta.left, alpha.left);
  s.right = compose_functors(beta.right, alpha.right);
  for (const auto& [k, M] : alpha.comp)
    s.comp[k] = beta.comp.at({alpha.left.obj[k.first], alpha.right.obj[k.second]}) * M;
  return s;
}

ProfSquare hcompose(const ProfSquare& alpha, const ProfSquare& beta, const ProfComposite& top,
                    const ProfComposite& bottom) {
  if (!same_functor(alpha.right, beta.left)) throw CategoryMismatch("squares do not compose horizontally");
  if (top.P != alpha.top || top.Q != beta.top || bottom.P != alpha.bottom || bottom.Q != beta.bottom)
    throw CategoryMismatch("composites do not match the squares");
  ProfSquare s;
  s.top = &top.prof;
  s.bottom = &bottom.prof;
  s.left = alpha.left;
  s.right = beta.right;
  const LinFunctor& G = alpha.right;
  for (int a = 0; a < top.prof.src->size(); ++a)
    for (int c = 0; c < top.prof.tgt->size(); ++c)
      s.comp[{a, c}] = map_composite(top, a, c, bottom, alpha.left.obj[a], beta.right.obj[c],
                                     [&](int b) { return G.obj[b]; },
                                     [&](int b) { return kron(alpha.comp.at({a, b}), beta.comp.at({b, c})); });
  return s;
}

// ---- companions and conjoints

namespace {

bool same_components(const std::map<std::pair<int, int>, Matrix>& x, const std::map<std::pair<int, int>, Matrix>& y,
                     std::string* w) {
  for (const auto& [k, M] : x)
    if (y.at(k) != M) {
      *w = "component (" + std::to_string(k.first) + ", " + std::to_string(k.second) + ")";
      return false;
    }
  return true;
}

std::map<std::pair<int, int>, Matrix> after(const std::map<std::pair<int, int>, Matrix>& g,
                                            const std::map<std::pair<int, int>, Matrix>& f) {
  std::map<std::pair<int, int>, Matrix> out;
  for (const auto& [k, M] : f) out[k] = g.at(k) * M;
  return out;
}

}  // namespace

CompanionData companion(const LinFunctor& F, const Profunctor& UA, const Profunctor& UB) {
  const FinLinCategory &A = *F.src, &B = *F.tgt;
  auto P = std::make_shared<Profunctor>();
  P->name = "comp_" + A.name();
  P->src = &A;
  P->tgt = &B;
  P->dims.assign(A.size(), std::vector<int>(B.size()));
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) P->dims[a][b] = B.dim(F.obj[a], b);
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b)
      for (int b2 = 0; b2 < B.size(); ++b2) {
        std::vector<Matrix> L;
        for (int k = 0; k < B.dim(b, b2); ++k) L.push_back(B.post(F.obj[a], b, b2, B.basis(b, b2, k)));
        P->left[{a, b, b2}] = std::move(L);
      }
  for (int a2 = 0; a2 < A.size(); ++a2)
    for (int a = 0; a < A.size(); ++a)
      for (int b = 0; b < B.size(); ++b) {
        std::vector<Matrix> R;
        for (int k = 0; k < A.dim(a2, a); ++k)
          R.push_back(B.pre(F.obj[a2], F.obj[a], b, F.apply(a2, a, A.basis(a2, a, k))));
        P->right[{a2, a, b}] = std::move(R);
      }
  CompanionData c;
  c.prof = P;
  c.UA = &UA;
  c.UB = &UB;
  c.unit.top = &UA;
  c.unit.bottom = P.get();
  c.unit.left = identity_functor(A);
  c.unit.right = F;
  c.unit.comp = F.mor;
  c.counit.top = P.get();
  c.counit.bottom = &UB;
  c.counit.left = F;
  c.counit.right = identity_functor(B);
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) c.counit.comp[{a, b}] = Matrix::identity(P->dim(a, b));
  check_yanking(c, true, F);
  return c;
}

CompanionData conjoint(const LinFunctor& F, const Profunctor& UA, const Profunctor& UB) {
  const FinLinCategory &A = *F.src, &B = *F.tgt;
  auto P = std::make_shared<Profunctor>();
  P->name = "conj_" + A.name();
  P->src = &B;
  P->tgt = &A;
  P->dims.assign(B.size(), std::vector<int>(A.size()));
  for (int b = 0; b < B.size(); ++b)
    for (int a = 0; a < A.size(); ++a) P->dims[b][a] = B.dim(b, F.obj[a]);
  for (int b = 0; b < B.size(); ++b)
    for (int a = 0; a < A.size(); ++a)
      for (int a2 = 0; a2 < A.size(); ++a2) {
        std::vector<Matrix> L;
        for (int k = 0; k < A.dim(a, a2); ++k)
          L.push_back(B.post(b, F.obj[a], F.obj[a2], F.apply(a, a2, A.basis(a, a2, k))));
        P->left[{b, a, a2}] = std::move(L);
      }
  for (int b2 = 0; b2 < B.size(); ++b2)
    for (int b = 0; b < B.size(); ++b)
      for (int a = 0; a < A.size(); ++a) {
        std::vector<Matrix> R;
        for (int k = 0; k < B.dim(b2, b); ++k) R.push_back(B.pre(b2, b, F.obj[a], B.basis(b2, b, k)));
        P->right[{b2, b, a}] = std::move(R);
      }
  CompanionData c;
  c.prof = P;
  c.UA = &UA;
  c.UB = &UB;
  c.unit.top = &UA;
  c.unit.bottom = P.get();
  c.unit.left = F;
  c.unit.right = identity_functor(A);
  c.unit.comp = F.mor;
  c.counit.top = P.get();
  c.counit.bottom = &UB;
  c.counit.left = identity_functor(B);
  c.counit.right = F;
  for (int b = 0; b < B.size(); ++b)
    for (int a = 0; a < A.size(); ++a) c.counit.comp[{b, a}] = Matrix::identity(P->dim(b, a));
  check_yanking(c, false, F);
  return c;
}

void check_yanking(CompanionData& c, bool is_companion, const LinFunctor& F) {
  CheckReport rep;
  std::string kind = is_companion ? "companion" : "conjoint";
  rep.append(c.prof->check(), kind + " ");
  rep.append(c.unit.check(), kind + " unit ");
  rep.append(c.counit.check(), kind + " counit ");
  std::string w;
  ProfSquare v = vcompose(c.counit, c.unit);
  bool ok = same_functor(v.left, F) && same_functor(v.right, F) && same_components(v.comp, F.mor, &w);
  rep.add(kind + " vertical yanking", ok, w);
  w.clear();
  if (is_companion) {
    ProfComposite top = prof_compose(*c.UA, *c.prof, false), bottom = prof_compose(*c.prof, *c.UB, false);
    ProfSquare h = hcompose(c.unit, c.counit, top, bottom);
    ok = same_components(after(right_unitor(bottom), h.comp), left_unitor(top), &w);
  } else {
    ProfComposite top = prof_compose(*c.prof, *c.UA, false), bottom = prof_compose(*c.UB, *c.prof, false);
    ProfSquare h = hcompose(c.counit, c.unit, top, bottom);
    ok = same_components(after(left_unitor(bottom), h.comp), right_unitor(top), &w);
  }
  rep.add(kind + " horizontal yanking", ok, w);
  c.yanking = std::move(rep);
}

// ---- equivalences and weak invertibility

CheckReport EquivalenceData::check() const {
  CheckReport rep;
  const FinLinCategory &A = *F.src, &B = *F.tgt;
  rep.append(F.check(), "F ");
  rep.append(Finv.check(), "Finv ");
  LinFunctor GF = compose_functors(Finv, F), FG = compose_functors(F, Finv);
  bool inv = true, nat = true;
  std::string wi, wn;
  for (int a = 0; a < A.size(); ++a) {
    int b = GF.obj[a];
    if (A.compose(a, b, a, unit_inv[a], unit[a]) != A.identity(a) || A.compose(b, a, b, unit[a], unit_inv[a]) != A.identity(b))
      inv = false, wi = "unit at " + A.object(a);
    for (int a2 = 0; a2 < A.size() && nat; ++a2)
      for (int k = 0; k < A.dim(a, a2) && nat; ++k) {
        Vec f = A.basis(a, a2, k);
        if (A.compose(a, a2, GF.obj[a2], unit[a2], f) != A.compose(a, b, GF.obj[a2], GF.apply(a, a2, f), unit[a]))
          nat = false, wn = "unit at " + A.object(a) + " -> " + A.object(a2);
      }
  }
  for (int x = 0; x < B.size(); ++x) {
    int y = FG.obj[x];
    if (B.compose(x, y, x, counit[x], counit_inv[x]) != B.identity(x) || B.compose(y, x, y, counit_inv[x], counit[x]) != B.identity(y))
      inv = false, wi = "counit at " + B.object(x);
    for (int x2 = 0; x2 < B.size() && nat; ++x2)
      for (int k = 0; k < B.dim(x, x2) && nat; ++k) {
        Vec g = B.basis(x, x2, k);
        if (B.compose(y, x, x2, g, counit[x]) != B.compose(y, FG.obj[x2], x2, counit[x2], FG.apply(x, x2, g)))
          nat = false, wn = "counit at " + B.object(x) + " -> " + B.object(x2);
      }
  }
  rep.add("unit and counit invertible", inv, wi);
  rep.add("unit and counit natural", nat, wn);
  return rep;
}

EquivalenceData identity_equivalence(const FinLinCategory& A) {
  EquivalenceData e;
  e.F = e.Finv = identity_functor(A);
  for (int a = 0; a < A.size(); ++a) {
    e.unit.push_back(A.identity(a));
    e.unit_inv.push_back(A.identity(a));
    e.counit.push_back(A.identity(a));
    e.counit_inv.push_back(A.identity(a));
  }
  return e;
}

namespace {

// rows of M X N = R in the unknown X (rows x cols, row-major)
void add_equations(std::vector<Vec>& rows, Vec& rhs, int xr, int xc, const Matrix& M, const Matrix& N, const Matrix& R) {
  for (int u = 0; u < M.rows(); ++u)
    for (int v = 0; v < N.cols(); ++v) {
      Vec row = zeros(xr * xc);
      for (int i = 0; i < xr; ++i) {
        if (M(u, i).is_zero()) continue;
        for (int j = 0; j < xc; ++j)
          if (!N(j, v).is_zero()) row[i * xc + j] += M(u, i) * N(j, v);
      }
      rows.push_back(std::move(row));
      rhs.push_back(R(u, v));
    }
}

}  // namespace

WeakInverse check_weak_invertibility(const ProfSquare& alpha, const EquivalenceData& left,
                                     const EquivalenceData& right) {
  const Profunctor &P = *alpha.top, &Q = *alpha.bottom;
  const FinLinCategory &A = *P.src, &B = *P.tgt, &A2 = *Q.src, &B2 = *Q.tgt;
  const LinFunctor &Finv = left.Finv, &Ginv = right.Finv;
  WeakInverse out;
  out.invertible = true;
  for (int a2 = 0; a2 < A2.size() && out.invertible; ++a2)
    for (int b2 = 0; b2 < B2.size() && out.invertible; ++b2) {
      int pa = Finv.obj[a2], pb = Ginv.obj[b2];
      int xr = P.dim(pa, pb), xc = Q.dim(a2, b2);
      std::vector<Vec> rows;
      Vec rhs;
      // alpha X = eps_G^-1 q eps_F
      {
        Matrix S = Q.left_matrix(left.F.obj[pa], b2, alpha.right.obj[pb], right.counit_inv[b2]) *
                   Q.right_matrix(alpha.left.obj[pa], a2, b2, left.counit[a2]);
        add_equations(rows, rhs, xr, xc, alpha.comp.at({pa, pb}), Matrix::identity(xc), S);
      }
      // X alpha = eta_G p eta_F^-1 wherever alpha lands in (a2, b2)
      for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b) {
          if (alpha.left.obj[a] != a2 || alpha.right.obj[b] != b2) continue;
          int fa = Finv.obj[a2], gb = Ginv.obj[b2];
          Matrix T = P.left_matrix(fa, b, gb, right.unit[b]) * P.right_matrix(fa, a, b, left.unit_inv[a]);
          add_equations(rows, rhs, xr, xc, Matrix::identity(xr), alpha.comp.at({a, b}), T);
        }
      Matrix M(int(rows.size()), xr * xc);
      for (size_t r = 0; r < rows.size(); ++r)
        for (int k = 0; k < xr * xc; ++k) M(int(r), k) = rows[r][k];
      std::optional<Matrix> x;
      if (xr * xc == 0) {
        bool zero_rhs = true;
        for (const auto& s : rhs) zero_rhs = zero_rhs && s.is_zero();
        if (zero_rhs) x = Matrix(0, 1);
      } else {
        x = solve_linear(M, Matrix::column(rhs));
      }
      if (!x) {
        out.invertible = false;
        out.witness = "no inverse component at " + pair_name(A2, a2, B2, b2);
        break;
      }
      Matrix X(xr, xc);
      for (int i = 0; i < xr; ++i)
        for (int j = 0; j < xc; ++j) X(i, j) = (*x)(i * xc + j, 0);
      out.inverse[{a2, b2}] = std::move(X);
    }
  if (!out.invertible) out.inverse.clear();
  return out;
}

// ---- folding

Folded fold(const ProfSquare& alpha, const CompanionData& F_comp, const CompanionData& G_comp) {
  const Profunctor &P = *alpha.top, &Q = *alpha.bottom;
  const Profunctor &Fs = *F_comp.prof, &Gs = *G_comp.prof;
  Folded out{prof_compose(P, Gs, false), prof_compose(Fs, Q, false), {}, true, {}};
  const FinLinCategory &A = *P.src, &B2 = *Q.tgt, &A2 = *Q.src;
  for (int a = 0; a < A.size(); ++a)
    for (int b2 = 0; b2 < B2.size(); ++b2) {
      int Fa = alpha.left.obj[a];
      Matrix M = out_of_composite(out.src, a, b2, out.tgt.prof.dim(a, b2), [&](int b, int i, int j) {
        int Gb = alpha.right.obj[b];
        Vec q = LinFunctor::mul(alpha.comp.at({a, b}), unit_vec(P.dim(a, b), i));
        Vec hq = Q.act_left(Fa, Gb, b2, B2.basis(Gb, b2, j), q);
        return out.tgt.cls(a, Fa, b2, A2.identity(Fa), hq);
      });
      if (out.strong && (M.rows() != M.cols() || !inverse(M))) {
        out.strong = false;
        out.witness = "folded component at " + pair_name(A, a, B2, b2) + " is singular";
      }
      out.comp[{a, b2}] = std::move(M);
    }
  return out;
}

// ---- vertical transformations of fragment models

CheckReport check_vertical_transformation(const FragmentModel& dom, const FragmentModel& cod,
                                          const std::vector<Matrix>& theta) {
  CheckReport rep;
  if (dom.cells.size() != cod.cells.size() || theta.size() != dom.cells.size() ||
      dom.sewings.size() != cod.sewings.size() || dom.units.size() != cod.units.size() ||
      dom.verticals.size() != cod.verticals.size())
    throw ContractViolation("fragment models do not have the same shape");
  for (size_t s = 0; s < dom.sewings.size(); ++s) {
    const auto &x = dom.sewings[s], &y = cod.sewings[s];
    bool ok = true;
    std::string w;
    for (int i = 0; i < dom.dims[x.outer] && ok; ++i)
      for (int j = 0; j < dom.dims[x.inner] && ok; ++j) {
        Vec u = unit_vec(dom.dims[x.outer], i), v = unit_vec(dom.dims[x.inner], j);
        Vec lhs = LinFunctor::mul(theta[x.result], x.sew(u, v));
        Vec rhs = y.sew(LinFunctor::mul(theta[x.outer], u), LinFunctor::mul(theta[x.inner], v));
        if (lhs != rhs)
          ok = false, w = "basis " + std::to_string(i) + " of " + dom.cells[x.outer] + " sewn to basis " +
                          std::to_string(j) + " of " + dom.cells[x.inner];
      }
    rep.add("horizontal functoriality " + x.name, ok, w);
  }
  for (size_t u = 0; u < dom.units.size(); ++u) {
    const auto &x = dom.units[u], &y = cod.units[u];
    rep.add("horizontal unitality " + x.name, LinFunctor::mul(theta[x.cell], x.element) == y.element,
            "theta does not send the unit of " + dom.cells[x.cell] + " to the unit");
  }
  for (size_t v = 0; v < dom.verticals.size(); ++v) {
    const auto &x = dom.verticals[v], &y = cod.verticals[v];
    rep.add("vertical naturality " + x.name, theta[x.tgt] * x.action == y.action * theta[x.src],
            "theta does not commute with " + x.name + " on " + dom.cells[x.src]);
  }
  return rep;
}

// ---- random Mat data

FinLinCategory random_mat_category(std::string name, std::mt19937& rng, int max_objects, int max_simples,
                                   int max_mult) {
  int m = std::uniform_int_distribution<int>(1, max_simples)(rng);
  int n = std::uniform_int_distribution<int>(1, max_objects)(rng);
  std::uniform_int_distribution<int> mult(0, max_mult);
  std::vector<std::vector<int>> objs;
  while (int(objs.size()) < n) {
    std::vector<int> x;
    int total = 0;
    for (int s = 0; s < m; ++s) total += x.emplace_back(mult(rng));
    if (total > 0) objs.push_back(std::move(x));
  }
  return mat_category(std::move(name), m, objs);
}

std::vector<std::vector<int>> random_multiplicities(std::mt19937& rng, int rows, int cols, int max) {
  std::uniform_int_distribution<int> d(0, max);
  std::vector<std::vector<int>> K(rows, std::vector<int>(cols));
  for (auto& r : K)
    for (auto& x : r) x = d(rng);
  return K;
}

}  // namespace sn
