#include "stringnet/transform.hpp"

#include <random>

#include "stringnet/diagram.hpp"
#include "stringnet/errors.hpp"

namespace sn {

namespace {

bool all_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec unit_vec(int n, int k) {
  Vec v(n, Scalar(0));
  v.at(k) = Scalar(1);
  return v;
}

Vec random_vec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(Scalar(long(d(rng))));
  return v;
}

Matrix from_columns(int rows, const std::vector<Vec>& cols) {
  Matrix M(rows, int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) M(r, int(c)) = cols[c][r];
  return M;
}

// A X -> X A through X
Mor pass_through(const RawDec& r) { return r.delta() * r.lam; }

std::string pair_str(const std::string& a, const std::string& b) { return a + " -> " + b; }

}  // namespace

CDec underlying(const RawDec& r, Manifold m) { return {m, r.X}; }

Vec coords_in_columns(const Matrix& B, const Vec& v) {
  if (B.cols() == 0) {
    if (!all_zero(v)) throw ContractViolation("vector outside the expected span");
    return {};
  }
  auto x = solve_linear(B, Matrix::column(v));
  if (!x) throw ContractViolation("vector outside the expected span");
  return x->col(0);
}

// ---- circles

CircleTransform::CircleTransform(const Engine& E, const std::vector<FDec>& objs)
    : E_(E), n_(int(objs.size())), F_(E, objs), C_(E, {}) {
  for (int i = 0; i < n_; ++i) {
    CDec c = underlying(F_.raw(i), Manifold::circle);
    C_.add(c);
    F_.add(trivial_decoration(E, c));
  }
  e_.resize(n_);
}

Vec CircleTransform::ucor(int k, int l, const Vec& q) const {
  const RawDec &a = F_.raw(k), &b = F_.raw(l);
  Vec lifted = F_.lift(k, l, q);
  Vec out(annulus_dim(E_, a.X, b.X), Scalar::zero(E_.field()));
  Obj A = a.cut->A(), B = b.cut->A();
  Mor pa = pass_through(a), pb = pass_through(b);
  for (Label z = 0; z < E_.cat().rank(); ++z) {
    Mor psi = C_.component(a.X, b.X, lifted, z);
    if (psi.is_zero()) continue;
    Obj Z = simple(z);
    Mor K = E_.tensor(pb, E_.id(concat(Z, A))) * E_.tensor({E_.id(B), psi, E_.id(A)}) *
            E_.tensor(E_.id(concat(B, Z)), pa);
    Vec v = reduce_wrap(E_, concat({B, Z, A}), a.X, b.X, K);
    for (size_t t = 0; t < v.size(); ++t) out[t] += v[t];
  }
  return out;
}

Vec CircleTransform::field_idempotent(int i) const {
  if (e_.at(i).empty()) e_[i] = ucor(i, i, F_.identity(i));
  return e_[i];
}

Vec CircleTransform::iota(int i, int j, const Vec& G) const {
  return F_.hom(n_ + i, n_ + j).coords(G);
}

Vec CircleTransform::counit(int i) const {
  if (i >= n_) return F_.from_wrap(i, i, F_.raw(i).cut->A(), pass_through(F_.raw(i)));
  const RawDec& a = F_.raw(i);
  return F_.from_wrap(n_ + i, i, a.cut->A(), pass_through(a));
}

Vec CircleTransform::counit_inv(int i) const {
  const RawDec& a = F_.raw(i);
  return F_.from_wrap(i, n_ + i, a.cut->A(), pass_through(a));
}

Vec CircleTransform::phi(int i, int j, const Vec& G) const {
  Vec t = F_.compose(n_ + i, n_ + j, j, counit(j), iota(i, j, G));
  return F_.compose(i, n_ + i, j, t, counit_inv(i));
}

Matrix CircleTransform::karoubi_basis(int i, int j) const {
  return karoubi_hom(C_, field_object(i), field_object(j));
}

Matrix CircleTransform::ucor_matrix(int i, int j) const {
  Matrix KB = karoubi_basis(i, j);
  int d = F_.dim(i, j);
  std::vector<Vec> cols;
  for (int k = 0; k < d; ++k) cols.push_back(coords_in_columns(KB, ucor(i, j, unit_vec(d, k))));
  return from_columns(KB.cols(), cols);
}

Matrix CircleTransform::phi_matrix(int i, int j) const {
  Matrix KB = karoubi_basis(i, j);
  std::vector<Vec> cols;
  for (int k = 0; k < KB.cols(); ++k) cols.push_back(phi(i, j, KB.col(k)));
  return from_columns(F_.dim(i, j), cols);
}

// ---- intervals

IntervalTransform::IntervalTransform(const Engine& E, const std::vector<FDec>& objs)
    : E_(E), F_(E, objs), C_(E, {}) {
  for (int i = 0; i < F_.object_count(); ++i) C_.add(underlying(F_.raw(i), Manifold::interval));
}

Vec IntervalTransform::ucor(int i, int j, const Vec& q) const { return E_.flatten(F_.to_mor(i, j, q)); }

Vec IntervalTransform::field_idempotent(int i) const { return E_.flatten(F_.raw(i).p); }

Vec IntervalTransform::phi(int i, int j, const Vec& G) const {
  return F_.from_mor(i, j, E_.unflatten(F_.raw(i).X, F_.raw(j).X, G));
}

Matrix IntervalTransform::karoubi_basis(int i, int j) const {
  return karoubi_hom(C_, {i, field_idempotent(i)}, {j, field_idempotent(j)});
}

Matrix IntervalTransform::ucor_matrix(int i, int j) const {
  Matrix KB = karoubi_basis(i, j);
  int d = F_.dim(i, j);
  std::vector<Vec> cols;
  for (int k = 0; k < d; ++k) cols.push_back(coords_in_columns(KB, ucor(i, j, unit_vec(d, k))));
  return from_columns(KB.cols(), cols);
}

Matrix IntervalTransform::phi_matrix(int i, int j) const {
  Matrix KB = karoubi_basis(i, j);
  std::vector<Vec> cols;
  for (int k = 0; k < KB.cols(); ++k) cols.push_back(phi(i, j, KB.col(k)));
  return from_columns(F_.dim(i, j), cols);
}

// ---- suites

CheckReport feq_suite(const CircleTransform& T, unsigned seed) {
  CheckReport rep;
  const FCircle& F = T.frob();
  const CCircle& C = T.bc();
  const Engine& E = F.engine();
  int n = T.size();
  std::mt19937 rng(seed);
  for (int i = 0; i < n; ++i) {
    int ii = T.iota_index(i);
    std::string a = F.object_name(i);
    const FrobAlgebra& A = *F.raw(i).cut;
    rep.add("separability " + A.name, A.mult * A.comult == E.id(A.A()), "mult after comult is not the identity");
    Vec e = T.field_idempotent(i);
    rep.add("f(" + a + ") idempotent", C.compose(i, i, i, e, e) == e, "e e != e");
    rep.add("f iota = Id on " + C.object_name(i), T.ucor(ii, ii, F.identity(ii)) == C.identity(i),
            "f(iota(" + C.object_name(i) + ")) is not the identity");
    Vec eps = T.counit(i), inv = T.counit_inv(i);
    rep.add("counit invertible at " + a, F.compose(i, ii, i, eps, inv) == F.identity(i), "eps eps^-1 != id");
    rep.add("counit inverse at " + a, F.compose(ii, i, ii, inv, eps) == T.iota(i, i, e),
            "eps^-1 eps != iota(e)");
    rep.add("triangle eps iota at " + C.object_name(i), T.counit(ii) == F.identity(ii), "eps at iota(c) != id");
    rep.add("triangle f eps at " + a, T.ucor(ii, i, eps) == e, "f(eps) != id of f(a)");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ii = T.iota_index(i), jj = T.iota_index(j);
      std::string w = pair_str(F.object_name(i), F.object_name(j));
      int dC = C.dim(i, j);
      bool fi = true;
      for (int k = 0; k < dC && fi; ++k) {
        Vec G = unit_vec(dC, k);
        fi = T.ucor(ii, jj, T.iota(i, j, G)) == G;
      }
      rep.add("f iota = Id on morphisms " + w, fi, "basis morphism changed by f iota");
      for (int t = 0; t < 2; ++t) {
        Vec G = random_vec(F.dim(i, j), rng);
        Vec lhs = F.compose(ii, i, j, G, T.counit(i));
        Vec rhs = F.compose(ii, jj, j, T.counit(j), T.iota(i, j, T.ucor(i, j, G)));
        rep.add("counit naturality " + w + " #" + std::to_string(t), lhs == rhs, "G eps_a != eps_b iota(f(G))");
      }
    }
  return rep;
}

namespace {

template <class Tr>
CheckReport iso_suite(const Tr& T, const std::string& kind) {
  CheckReport rep;
  int n = T.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string w = kind + " " + pair_str(T.frob().object_name(i), T.frob().object_name(j));
      Matrix U = T.ucor_matrix(i, j), P = T.phi_matrix(i, j);
      bool square = U.rows() == U.cols();
      rep.add("dimensions " + w, square,
              "Frob side " + std::to_string(U.cols()) + ", C side " + std::to_string(U.rows()));
      if (!square) continue;
      rep.add("Phi Ucor = id " + w, P * U == Matrix::identity(U.cols()), "Phi Ucor differs from the identity");
      rep.add("Ucor Phi = id " + w, U * P == Matrix::identity(U.rows()), "Ucor Phi differs from the identity");
    }
  return rep;
}

}  // namespace

CheckReport ucor_iso_suite(const CircleTransform& T) { return iso_suite(T, "annulus"); }
CheckReport ucor_iso_suite(const IntervalTransform& T) { return iso_suite(T, "rectangle"); }

}  // namespace sn
