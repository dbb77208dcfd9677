#include "stringnet/tensor.hpp"

#include <functional>

#include "stringnet/errors.hpp"
#include "stringnet/linalg.hpp"

namespace sn {

Obj concat(const Obj& a, const Obj& b) {
  Obj r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Obj concat(std::initializer_list<Obj> parts) {
  Obj r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

Obj simple(Label a) { return Obj{Site{a}}; }

bool Mor::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

Mor operator*(const Mor& g, const Mor& f) {
  if (g.src != f.tgt) throw ContractViolation("composition of morphisms with mismatched objects");
  Mor h{f.src, g.tgt, {}};
  h.blocks.reserve(f.blocks.size());
  for (size_t c = 0; c < f.blocks.size(); ++c) h.blocks.push_back(g.blocks[c] * f.blocks[c]);
  return h;
}

Mor operator+(Mor a, const Mor& b) {
  if (a.src != b.src || a.tgt != b.tgt) throw ContractViolation("sum of morphisms in different hom spaces");
  for (size_t c = 0; c < a.blocks.size(); ++c) a.blocks[c] += b.blocks[c];
  return a;
}

Mor operator-(Mor a, const Mor& b) {
  if (a.src != b.src || a.tgt != b.tgt) throw ContractViolation("difference of morphisms in different hom spaces");
  for (size_t c = 0; c < a.blocks.size(); ++c) a.blocks[c] -= b.blocks[c];
  return a;
}

Mor operator*(const Scalar& s, Mor a) {
  for (auto& b : a.blocks) b *= s;
  return a;
}

Engine::Engine(CategoryPtr C) : C_(std::move(C)) {}

const Engine::BasisData& Engine::basis(const Obj& X) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = basis_.find(X);
  if (it != basis_.end()) return it->second;
  const auto& C = *C_;
  int r = C.rank();
  for (const auto& s : X) {
    if (s.empty()) throw ContractViolation("object has an empty site");
    for (Label a : s) C.check_label(a);
  }
  BasisData B;
  B.trees.assign(r, {});
  size_t n = X.size();
  if (n == 0) {
    B.trees[C.unit()].push_back(LTree{});
  } else if (n == 1) {
    for (size_t k = 0; k < X[0].size(); ++k)
      B.trees[X[0][k]].push_back(LTree{{int(k)}, {X[0][k]}, {0}});
  } else {
    Obj prefix(X.begin(), X.end() - 1);
    const BasisData& P = basis(prefix);
    const Site& last = X.back();
    for (Label c = 0; c < r; ++c)
      for (Label e = 0; e < r; ++e)
        for (const auto& t : P.trees[e])
          for (size_t k = 0; k < last.size(); ++k)
            for (int mu = 0; mu < C.N(e, last[k], c); ++mu) {
              LTree u = t;
              u.choice.push_back(int(k));
              u.chan.push_back(c);
              u.mu.push_back(mu);
              B.trees[c].push_back(std::move(u));
            }
  }
  B.index.assign(r, {});
  for (Label c = 0; c < r; ++c)
    for (size_t i = 0; i < B.trees[c].size(); ++i) B.index[c][B.trees[c][i]] = int(i);
  return basis_.emplace(X, std::move(B)).first->second;
}

int Engine::dimV(const Obj& X, Label c) const { return int(basis(X).trees.at(c).size()); }

const std::vector<LTree>& Engine::basisV(const Obj& X, Label c) const { return basis(X).trees.at(c); }

int Engine::index_of(const Obj& X, Label c, const LTree& t) const {
  const auto& idx = basis(X).index.at(c);
  auto it = idx.find(t);
  if (it == idx.end()) throw ContractViolation("tree not in basis");
  return it->second;
}

int Engine::hom_dim(const Obj& X, const Obj& Y) const {
  int d = 0;
  for (Label c = 0; c < C_->rank(); ++c) d += dimV(X, c) * dimV(Y, c);
  return d;
}

Mor Engine::zero(const Obj& X, const Obj& Y) const {
  Mor m{X, Y, {}};
  for (Label c = 0; c < C_->rank(); ++c) m.blocks.emplace_back(dimV(Y, c), dimV(X, c));
  return m;
}

Mor Engine::id(const Obj& X) const {
  Mor m{X, X, {}};
  for (Label c = 0; c < C_->rank(); ++c) m.blocks.push_back(Matrix::identity(dimV(X, c)));
  return m;
}


int Engine::split_pos(const Obj& X, const Obj& Xp, Label c, Label a, Label b, int lam, int i,
                      int j) const {
  const auto& C = *C_;
  int pos = 0;
  for (Label a2 = 0; a2 < C.rank(); ++a2)
    for (Label b2 = 0; b2 < C.rank(); ++b2) {
      if (a2 == a && b2 == b) return pos + (lam * dimV(X, a) + i) * dimV(Xp, b) + j;
      pos += C.N(a2, b2, c) * dimV(X, a2) * dimV(Xp, b2);
    }
  throw ContractViolation("split position out of range");
}

std::vector<Matrix> Engine::build_recoupling(const Obj& X, const Obj& Xp) const {
  const auto& C = *C_;
  int r = C.rank();
  Obj Z = concat(X, Xp);
  std::vector<Matrix> T;
  for (Label c = 0; c < r; ++c) T.emplace_back(dimV(Z, c), dimV(Z, c));
  const auto& BZ = basis(Z);
  if (X.empty()) {
    for (Label c = 0; c < r; ++c)
      for (int j = 0; j < dimV(Xp, c); ++j) T[c](split_pos(X, Xp, c, C.unit(), c, 0, 0, j), j) = Scalar(1);
    return T;
  }
  if (Xp.empty()) {
    for (Label c = 0; c < r; ++c)
      for (int i = 0; i < dimV(X, c); ++i) T[c](split_pos(X, Xp, c, c, C.unit(), 0, i, 0), i) = Scalar(1);
    return T;
  }
  const Site& y = Xp.back();
  size_t n = X.size();
  if (Xp.size() == 1) {
    for (Label c = 0; c < r; ++c)
      for (size_t l = 0; l < BZ.trees[c].size(); ++l) {
        const LTree& t = BZ.trees[c][l];
        LTree head{std::vector<int>(t.choice.begin(), t.choice.begin() + n),
                   std::vector<Label>(t.chan.begin(), t.chan.begin() + n),
                   std::vector<int>(t.mu.begin(), t.mu.begin() + n)};
        Label e = head.chan.back();
        int k = t.choice.back();
        LTree ytree{{k}, {y[k]}, {0}};
        int pos = split_pos(X, Xp, c, e, y[k], t.mu.back(), index_of(X, e, head), index_of(Xp, y[k], ytree));
        T[c](pos, int(l)) = Scalar(1);
      }
    return T;
  }
  Obj Ypp(Xp.begin(), Xp.end() - 1);
  Obj Zpp = concat(X, Ypp);
  const auto& Tpp = recoupling(X, Ypp);
  const auto& BY = basis(Ypp);
  // enumerate the split basis of V_e(X Ypp) once per e
  struct SplitEntry { Label a, b; int lam, i, j; };
  std::vector<std::vector<SplitEntry>> splits(r);
  for (Label e = 0; e < r; ++e)
    for (Label a = 0; a < r; ++a)
      for (Label b = 0; b < r; ++b)
        for (int lam = 0; lam < C.N(a, b, e); ++lam)
          for (int i = 0; i < dimV(X, a); ++i)
            for (int j = 0; j < dimV(Ypp, b); ++j) splits[e].push_back({a, b, lam, i, j});
  for (Label c = 0; c < r; ++c)
    for (size_t l = 0; l < BZ.trees[c].size(); ++l) {
      const LTree& t = BZ.trees[c][l];
      size_t m = t.choice.size();
      LTree head{std::vector<int>(t.choice.begin(), t.choice.end() - 1),
                 std::vector<Label>(t.chan.begin(), t.chan.end() - 1),
                 std::vector<int>(t.mu.begin(), t.mu.end() - 1)};
      Label e = t.chan[m - 2];
      int k = t.choice.back(), mu = t.mu.back();
      Label yk = y[k];
      int hidx = index_of(Zpp, e, head);
      const Matrix& Te = Tpp[e];
      for (size_t s = 0; s < splits[e].size(); ++s) {
        const Scalar& w = Te(int(s), hidx);
        if (w.is_zero()) continue;
        const auto& sp = splits[e][s];
        const Matrix& F = C.F(sp.a, sp.b, yk, c);
        int row = C.F_row_pos(sp.a, sp.b, yk, c, {e, sp.lam, mu});
        auto cols = C.F_cols(sp.a, sp.b, yk, c);
        const LTree& jt = BY.trees[sp.b][sp.j];
        for (size_t q = 0; q < cols.size(); ++q) {
          const Scalar& f = F(row, int(q));
          if (f.is_zero()) continue;
          LTree bt = jt;
          bt.choice.push_back(k);
          bt.chan.push_back(cols[q].x);
          bt.mu.push_back(cols[q].m1);
          int jidx = index_of(Xp, cols[q].x, bt);
          int pos = split_pos(X, Xp, c, sp.a, cols[q].x, cols[q].m2, sp.i, jidx);
          T[c](pos, int(l)) += w * f;
        }
      }
    }
  return T;
}

const std::vector<Matrix>& Engine::recoupling(const Obj& X, const Obj& Xp) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(X, Xp);
  auto it = T_.find(key);
  if (it != T_.end()) return it->second;
  auto T = build_recoupling(X, Xp);
  return T_.emplace(key, std::move(T)).first->second;
}

const std::vector<Matrix>& Engine::recoupling_inv(const Obj& X, const Obj& Xp) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(X, Xp);
  auto it = Tinv_.find(key);
  if (it != Tinv_.end()) return it->second;
  const auto& T = recoupling(X, Xp);
  std::vector<Matrix> inv;
  for (const auto& m : T) {
    auto i = inverse(m);
    if (!i) throw ContractViolation("recoupling matrix is singular; F-symbols are not invertible");
    inv.push_back(*i);
  }
  return Tinv_.emplace(key, std::move(inv)).first->second;
}

Mor Engine::tensor(const Mor& f, const Mor& g) const {
  if (g.src.empty() && g.tgt.empty()) return scalar(g) * f;
  if (f.src.empty() && f.tgt.empty()) return scalar(f) * g;
  const auto& C = *C_;
  int r = C.rank();
  const auto& TX = recoupling(f.src, g.src);
  const auto& TYi = recoupling_inv(f.tgt, g.tgt);
  Mor h{concat(f.src, g.src), concat(f.tgt, g.tgt), {}};
  for (Label c = 0; c < r; ++c) {
    int ns = TX[c].rows(), nt = TYi[c].rows();
    Matrix D(nt, ns);
    int ps = 0, pt = 0;
    for (Label a = 0; a < r; ++a)
      for (Label b = 0; b < r; ++b) {
        int n = C.N(a, b, c);
        if (!n) continue;
        Matrix K = kron(f.blocks[a], g.blocks[b]);
        for (int lam = 0; lam < n; ++lam) {
          D.set_block(pt, ps, K);
          pt += K.rows();
          ps += K.cols();
        }
      }
    h.blocks.push_back(TYi[c] * D * TX[c]);
  }
  return h;
}

Mor Engine::tensor(const std::vector<Mor>& fs) const {
  if (fs.empty()) return id({});
  Mor acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = tensor(acc, fs[i]);
  return acc;
}

Vec Engine::flatten(const Mor& f) const {
  Vec v;
  for (const auto& b : f.blocks)
    for (const auto& x : b.data()) v.push_back(x);
  return v;
}

Mor Engine::unflatten(const Obj& X, const Obj& Y, const Vec& v) const {
  Mor m = zero(X, Y);
  size_t p = 0;
  for (auto& b : m.blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) b(i, j) = v.at(p++);
  if (p != v.size()) throw ContractViolation("coordinate vector has wrong length");
  return m;
}

Mor Engine::basis_mor(const Obj& X, const Obj& Y, int k) const {
  Vec v(hom_dim(X, Y));
  v.at(k) = Scalar(1);
  return unflatten(X, Y, v);
}

Site Engine::dual(const Site& s) const {
  Site d;
  for (Label a : s) d.push_back(C_->dual(a));
  return d;
}

Obj Engine::dual(const Obj& X) const {
  Obj d;
  for (auto it = X.rbegin(); it != X.rend(); ++it) d.push_back(dual(*it));
  return d;
}

namespace {

// 1 -> (s)(t) or (s)(t) -> 1 with weight w(k) on matched summands k
Mor pair_mor(const Engine& E, const Site& s, const Site& t, bool out,
             const std::function<Scalar(int)>& w) {
  Obj P{s, t};
  Mor m = out ? E.zero(P, {}) : E.zero({}, P);
  Label one = E.cat().unit();
  const auto& trees = E.basisV(P, one);
  for (size_t l = 0; l < trees.size(); ++l)
    if (trees[l].choice[0] == trees[l].choice[1]) {
      if (out) m.blocks[one](0, int(l)) = w(trees[l].choice[0]);
      else m.blocks[one](int(l), 0) = w(trees[l].choice[0]);
    }
  return m;
}

}  // namespace

Mor Engine::coev(const Obj& X) const {
  if (X.empty()) return id({});
  Obj head(X.begin(), X.end() - 1);
  const Site& x = X.back();
  Mor c1 = pair_mor(*this, x, dual(x), false, [&](int) { return Scalar::one(field()); });
  if (head.empty()) return c1;
  return tensor({id(head), c1, id(dual(head))}) * coev(head);
}

Mor Engine::ev(const Obj& X) const {
  if (X.empty()) return id({});
  Obj head(X.begin(), X.end() - 1);
  const Site& x = X.back();
  Mor e1 = pair_mor(*this, dual(x), x, true, [&](int k) { return C_->kappa(x[k]); });
  if (head.empty()) return e1;
  return e1 * tensor({id(Obj{dual(x)}), ev(head), id(Obj{x})});
}

Mor Engine::rev(const Obj& X) const {
  if (X.empty()) return id({});
  Obj head(X.begin(), X.end() - 1);
  const Site& x = X.back();
  Mor e1 = pair_mor(*this, x, dual(x), true, [&](int k) {
    return C_->pivotal(x[k]) * C_->kappa(C_->dual(x[k]));
  });
  if (head.empty()) return e1;
  return rev(head) * tensor({id(head), e1, id(dual(head))});
}

Mor Engine::rcoev(const Obj& X) const {
  if (X.empty()) return id({});
  Obj head(X.begin(), X.end() - 1);
  const Site& x = X.back();
  Mor c1 = pair_mor(*this, dual(x), x, false, [&](int k) { return C_->pivotal(x[k]).inv(); });
  if (head.empty()) return c1;
  return tensor({id(Obj{dual(x)}), rcoev(head), id(Obj{x})}) * c1;
}

Mor Engine::split_vertex(Label a, Label b, Label c, int mu) const {
  Obj ab{{a}, {b}};
  Mor m = zero(simple(c), ab);
  m.blocks[c](index_of(ab, c, LTree{{0, 0}, {a, c}, {0, mu}}), 0) = Scalar(1);
  return m;
}

Mor Engine::fuse_vertex(Label a, Label b, Label c, int mu) const {
  Obj ab{{a}, {b}};
  Mor m = zero(ab, simple(c));
  m.blocks[c](0, index_of(ab, c, LTree{{0, 0}, {a, c}, {0, mu}})) = Scalar(1);
  return m;
}

Mor Engine::tree_in(const Obj& W, Label s, int i) const {
  Mor m = zero(simple(s), W);
  m.blocks[s](i, 0) = Scalar(1);
  return m;
}

Mor Engine::tree_out(const Obj& W, Label s, int i) const {
  Mor m = zero(W, simple(s));
  m.blocks[s](0, i) = Scalar(1);
  return m;
}

Mor Engine::summand_in(const Site& s, int k) const {
  Mor m = zero(simple(s.at(k)), Obj{s});
  m.blocks[s[k]](index_of(Obj{s}, s[k], LTree{{k}, {s[k]}, {0}}), 0) = Scalar(1);
  return m;
}

Mor Engine::summand_out(const Site& s, int k) const {
  Mor m = zero(Obj{s}, simple(s.at(k)));
  m.blocks[s[k]](0, index_of(Obj{s}, s[k], LTree{{k}, {s[k]}, {0}})) = Scalar(1);
  return m;
}

Mor Engine::unit_in() const {
  Mor m = zero({}, simple(C_->unit()));
  m.blocks[C_->unit()](0, 0) = Scalar(1);
  return m;
}

Mor Engine::unit_out() const {
  Mor m = zero(simple(C_->unit()), {});
  m.blocks[C_->unit()](0, 0) = Scalar(1);
  return m;
}

Scalar Engine::scalar(const Mor& f) const {
  if (!f.src.empty() || !f.tgt.empty()) throw ContractViolation("scalar of a non-scalar morphism");
  return f.blocks[C_->unit()](0, 0);
}

Scalar Engine::trace(const Mor& f) const {
  if (f.src != f.tgt) throw ContractViolation("trace of a non-endomorphism");
  return scalar(rev(f.src) * tensor(f, id(dual(f.src))) * coev(f.src));
}

Scalar Engine::trace_left(const Mor& f) const {
  if (f.src != f.tgt) throw ContractViolation("trace of a non-endomorphism");
  return scalar(ev(f.src) * tensor(id(dual(f.src)), f) * rcoev(f.src));
}

std::string Engine::obj_str(const Obj& X) const {
  if (X.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < X.size(); ++i) {
    if (i) s += " ";
    if (X[i].size() == 1) {
      s += C_->label_name(X[i][0]);
      continue;
    }
    s += "[";
    for (size_t k = 0; k < X[i].size(); ++k) s += (k ? "+" : "") + C_->label_name(X[i][k]);
    s += "]";
  }
  return s;
}

}  // namespace sn
