#include "stringnet/cylinder.hpp"

#include "stringnet/algebra.hpp"
#include "stringnet/diagram.hpp"
#include "stringnet/errors.hpp"

namespace sn {

namespace {

Vec zeros(const Engine& E, int n) { return Vec(n, Scalar::zero(E.field())); }

void add_into(Vec& acc, const Vec& v, size_t off = 0) {
  for (size_t k = 0; k < v.size(); ++k) acc[off + k] += v[k];
}

bool all_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// offsets of the blocks Hom(s X, Y s) in the annulus coordinates
std::vector<int> block_offsets(const Engine& E, const Obj& X, const Obj& Y) {
  std::vector<int> off{0};
  for (Label s = 0; s < E.cat().rank(); ++s)
    off.push_back(off.back() + E.hom_dim(concat(simple(s), X), concat(Y, simple(s))));
  return off;
}

Mor block_mor(const Engine& E, const Obj& X, const Obj& Y, const Vec& v, Label s, const std::vector<int>& off) {
  Obj S = simple(s);
  Vec part(v.begin() + off[s], v.begin() + off[s + 1]);
  return E.unflatten(concat(S, X), concat(Y, S), part);
}

// per-block p_Y psi p_X on annulus coordinates
Vec project(const Engine& E, const RawDec& a, const RawDec& b, const Vec& v) {
  auto off = block_offsets(E, a.X, b.X);
  Vec out;
  for (Label s = 0; s < E.cat().rank(); ++s) {
    Obj S = simple(s);
    Mor m = E.tensor(b.p, E.id(S)) * block_mor(E, a.X, b.X, v, s, off) * E.tensor(E.id(S), a.p);
    Vec f = E.flatten(m);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

}  // namespace

Vec CylinderCategory::basis(int i, int j, int k) const {
  Vec v(dim(i, j), Scalar(0));
  v.at(k) = Scalar(1);
  return v;
}

std::vector<Matrix> CylinderCategory::end_algebra(int i) const {
  int n = dim(i, i);
  std::vector<Matrix> L;
  for (int a = 0; a < n; ++a) {
    Matrix M(n, n);
    Vec ba = basis(i, i, a);
    for (int b = 0; b < n; ++b) {
      Vec c = compose(i, i, i, ba, basis(i, i, b));
      for (int r = 0; r < n; ++r) M(r, b) = c[r];
    }
    L.push_back(std::move(M));
  }
  return L;
}

// ---- C-coloured circle

CCircle::CCircle(const Engine& E, std::vector<CDec> objs) : E_(E), objs_(std::move(objs)) {
  for (const auto& d : objs_)
    if (d.man != Manifold::circle) throw MalformedDecoration("circle category given an interval decoration");
}

int CCircle::add(const CDec& d) {
  if (d.man != Manifold::circle) throw MalformedDecoration("circle category given an interval decoration");
  objs_.push_back(d);
  return object_count() - 1;
}

std::string CCircle::object_name(int i) const { return dec_str(E_, objs_.at(i)); }

int CCircle::dim(int i, int j) const { return annulus_dim(E_, objs_.at(i).points, objs_.at(j).points); }

Vec CCircle::from_wrap(const Obj& W, const Obj& X, const Obj& Y, const Mor& psi) const {
  return reduce_wrap(E_, W, X, Y, psi);
}

Mor CCircle::component(const Obj& X, const Obj& Y, const Vec& v, Label s) const {
  return block_mor(E_, X, Y, v, s, block_offsets(E_, X, Y));
}

Vec CCircle::compose(const Obj& X, const Obj& Y, const Obj& Z, const Vec& g, const Vec& f) const {
  Vec out = zeros(E_, annulus_dim(E_, X, Z));
  auto offf = block_offsets(E_, X, Y), offg = block_offsets(E_, Y, Z);
  if (int(f.size()) != offf.back() || int(g.size()) != offg.back())
    throw ContractViolation("tube composition: coordinate vector has the wrong length");
  int r = E_.cat().rank();
  for (Label s = 0; s < r; ++s) {
    if (all_zero(Vec(f.begin() + offf[s], f.begin() + offf[s + 1]))) continue;
    Mor phi = block_mor(E_, X, Y, f, s, offf);
    for (Label t = 0; t < r; ++t) {
      if (all_zero(Vec(g.begin() + offg[t], g.begin() + offg[t + 1]))) continue;
      Mor psi = block_mor(E_, Y, Z, g, t, offg);
      Obj S = simple(s), T = simple(t);
      Mor theta = E_.tensor(psi, E_.id(S)) * E_.tensor(E_.id(T), phi);
      add_into(out, reduce_wrap(E_, concat(T, S), X, Z, theta));
    }
  }
  return out;
}

Vec CCircle::compose(int i, int j, int k, const Vec& g, const Vec& f) const {
  return compose(objs_.at(i).points, objs_.at(j).points, objs_.at(k).points, g, f);
}

Vec CCircle::identity(const Obj& X) const { return reduce_wrap(E_, {}, X, X, E_.id(X)); }

Vec CCircle::identity(int i) const { return identity(objs_.at(i).points); }

Vec CCircle::twist(const Obj& X) const { return reduce_wrap(E_, X, X, X, E_.id(concat(X, X))); }

// ---- C-coloured interval

CInterval::CInterval(const Engine& E, std::vector<CDec> objs) : E_(E), objs_(std::move(objs)) {
  for (const auto& d : objs_)
    if (d.man != Manifold::interval) throw MalformedDecoration("interval category given a circle decoration");
}

int CInterval::add(const CDec& d) {
  if (d.man != Manifold::interval) throw MalformedDecoration("interval category given a circle decoration");
  objs_.push_back(d);
  return object_count() - 1;
}

std::string CInterval::object_name(int i) const { return dec_str(E_, objs_.at(i)); }

int CInterval::dim(int i, int j) const { return E_.hom_dim(objs_.at(i).points, objs_.at(j).points); }

Vec CInterval::compose(int i, int j, int k, const Vec& g, const Vec& f) const {
  const Obj &X = objs_.at(i).points, &Y = objs_.at(j).points, &Z = objs_.at(k).points;
  return E_.flatten(E_.unflatten(Y, Z, g) * E_.unflatten(X, Y, f));
}

Vec CInterval::identity(int i) const { return E_.flatten(E_.id(objs_.at(i).points)); }

// ---- raw data of Frob(C) decorations

Mor RawDec::delta() const {
  return E->tensor(rho, E->id(cut->A())) * E->tensor(E->id(X), cut->comult * cut->unit);
}

Mor RawDec::delta_left() const {
  return E->tensor(E->id(cut->A()), lam) * E->tensor(cut->comult * cut->unit, E->id(X));
}

RawDec raw_decoration(const Engine& E, const FDec& d) {
  check_decoration(d);
  RawDec r;
  r.E = &E;
  size_t n = d.points.size();
  for (const auto& M : d.points) r.X.push_back(M->obj);
  r.p = E.id(r.X);
  for (size_t i = 0; i + 1 < n; ++i) {
    Obj front, back;
    for (size_t k = 0; k < i; ++k) front.push_back(d.points[k]->obj);
    for (size_t k = i + 2; k < n; ++k) back.push_back(d.points[k]->obj);
    Mor avg = averaging_idempotent(E, *d.points[i], *d.points[i + 1]);
    r.p = E.tensor({E.id(front), avg, E.id(back)}) * r.p;
  }
  if (d.man == Manifold::interval) return r;
  r.cut = d.segs[0];
  const FrobAlgebra& A = *r.cut;
  if (n == 0) {
    if (A.trivial) {
      r.lam = r.rho = E.unit_out();
    } else {
      r.X = A.A();
      r.p = E.id(r.X);
      r.lam = r.rho = A.mult;
    }
    return r;
  }
  Obj rest(r.X.begin() + 1, r.X.end()), init(r.X.begin(), r.X.end() - 1);
  r.lam = E.tensor(d.points.front()->lact, E.id(rest));
  r.rho = E.tensor(E.id(init), d.points.back()->ract);
  return r;
}

// ---- Frob(C)-coloured circle

FCircle::FCircle(const Engine& E, std::vector<FDec> objs) : E_(E) {
  for (const auto& d : objs) add(d);
}

int FCircle::add(const FDec& d) {
  if (d.man != Manifold::circle) throw MalformedDecoration("circle category given an interval decoration");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  raw_.push_back(raw_decoration(E_, d));
  objs_.push_back(d);
  return object_count() - 1;
}

std::string FCircle::object_name(int i) const { return dec_str(objs_.at(i)); }

Quotient FCircle::build_hom(int i, int j) const {
  const RawDec &a = raw_.at(i), &b = raw_.at(j);
  const Obj &X = a.X, &Y = b.X;
  const FrobAlgebra &A = *a.cut, &B = *b.cut;
  auto off = block_offsets(E_, X, Y);
  int n = off.back(), r = E_.cat().rank();
  std::vector<Vec> rels;
  for (Label z = 0; z < r; ++z) {
    Obj Z = simple(z);
    for (int k = off[z]; k < off[z + 1]; ++k) {
      Vec e = zeros(E_, n);
      e[k] = Scalar(1);
      Vec pe = project(E_, a, b, e);
      for (int t = 0; t < n; ++t) e[t] -= pe[t];
      if (!all_zero(e)) rels.push_back(std::move(e));
    }
  }
  Mor idX = E_.id(X), idY = E_.id(Y), idA = E_.id(A.A()), idB = E_.id(B.A());
  Mor dX = a.delta();
  for (Label z = 0; z < r; ++z)
    for (Label z2 = 0; z2 < r; ++z2) {
      Obj Z = simple(z), Z2 = simple(z2);
      Obj mid = concat({B.A(), Z2, A.A()});
      int nh = E_.hom_dim(Z, mid), np = E_.hom_dim(concat(Z2, X), concat(Y, Z));
      for (int h = 0; h < nh; ++h) {
        Mor H = E_.basis_mor(Z, mid, h);
        Mor Lpre = E_.tensor({idB, E_.id(Z2), a.lam}) * E_.tensor(H, idX);
        Mor Rpost = E_.tensor({b.rho, E_.id(Z2), A.mult});
        for (int q = 0; q < np; ++q) {
          Mor psi = E_.basis_mor(concat(Z2, X), concat(Y, Z), q);
          Mor L = E_.tensor(b.lam, E_.id(Z)) * E_.tensor(idB, psi) * Lpre;
          Mor R = E_.tensor(E_.id(concat(Y, Z2)), A.counit) * Rpost * E_.tensor({idY, H, idA}) *
                  E_.tensor(psi, idA) * E_.tensor(E_.id(Z2), dX);
          Vec v = zeros(E_, n);
          Vec lv = E_.flatten(L), rv = E_.flatten(R);
          add_into(v, lv, off[z]);
          for (size_t k = 0; k < rv.size(); ++k) v[off[z2] + k] -= rv[k];
          if (!all_zero(v)) rels.push_back(std::move(v));
        }
      }
    }
  return Quotient(n, rels);
}

const Quotient& FCircle::hom(int i, int j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = homs_.find({i, j});
  if (it == homs_.end()) it = homs_.emplace(std::make_pair(i, j), build_hom(i, j)).first;
  return it->second;
}

int FCircle::dim(int i, int j) const { return hom(i, j).dim(); }

Vec FCircle::from_wrap(int i, int j, const Obj& W, const Mor& psi) const {
  return hom(i, j).coords(reduce_wrap(E_, W, raw_.at(i).X, raw_.at(j).X, psi));
}

Vec FCircle::lift(int i, int j, const Vec& q) const {
  return project(E_, raw_.at(i), raw_.at(j), hom(i, j).lift(q));
}

Vec FCircle::compose(int i, int j, int k, const Vec& g, const Vec& f) const {
  const RawDec &a = raw_.at(i), &b = raw_.at(j), &c = raw_.at(k);
  Vec fl = lift(i, j, f), gl = lift(j, k, g);
  auto offf = block_offsets(E_, a.X, b.X), offg = block_offsets(E_, b.X, c.X);
  Vec out = zeros(E_, hom(i, k).ambient());
  Obj Bo = b.cut->A();
  Mor pass = b.delta() * b.lam;  // B Y -> Y B
  int r = E_.cat().rank();
  for (Label s = 0; s < r; ++s) {
    if (all_zero(Vec(fl.begin() + offf[s], fl.begin() + offf[s + 1]))) continue;
    Mor phi = block_mor(E_, a.X, b.X, fl, s, offf);
    Obj S = simple(s);
    for (Label t = 0; t < r; ++t) {
      if (all_zero(Vec(gl.begin() + offg[t], gl.begin() + offg[t + 1]))) continue;
      Mor psi = block_mor(E_, b.X, c.X, gl, t, offg);
      Obj T = simple(t);
      Mor theta = E_.tensor(psi, E_.id(concat(Bo, S))) * E_.tensor({E_.id(T), pass, E_.id(S)}) *
                  E_.tensor(E_.id(concat(T, Bo)), phi);
      add_into(out, reduce_wrap(E_, concat({T, Bo, S}), a.X, c.X, theta));
    }
  }
  return hom(i, k).coords(out);
}

Vec FCircle::identity(int i) const {
  const RawDec& a = raw_.at(i);
  return hom(i, i).coords(reduce_wrap(E_, {}, a.X, a.X, a.p));
}

Vec FCircle::twist(int i) const {
  const RawDec& a = raw_.at(i);
  return from_wrap(i, i, a.X, E_.id(concat(a.X, a.X)));
}

// ---- Frob(C)-coloured interval

FInterval::FInterval(const Engine& E, std::vector<FDec> objs) : E_(E) {
  for (const auto& d : objs) add(d);
}

int FInterval::add(const FDec& d) {
  if (d.man != Manifold::interval) throw MalformedDecoration("interval category given a circle decoration");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  raw_.push_back(raw_decoration(E_, d));
  objs_.push_back(d);
  return object_count() - 1;
}

std::string FInterval::object_name(int i) const { return dec_str(objs_.at(i)); }

const Quotient& FInterval::hom(int i, int j) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = homs_.find({i, j});
  if (it != homs_.end()) return it->second;
  const RawDec &a = raw_.at(i), &b = raw_.at(j);
  int n = E_.hom_dim(a.X, b.X);
  std::vector<Vec> rels;
  for (int k = 0; k < n; ++k) {
    Mor m = E_.basis_mor(a.X, b.X, k);
    Vec v = E_.flatten(m - b.p * m * a.p);
    if (!all_zero(v)) rels.push_back(std::move(v));
  }
  return homs_.emplace(std::make_pair(i, j), Quotient(n, rels)).first->second;
}

int FInterval::dim(int i, int j) const { return hom(i, j).dim(); }

Vec FInterval::from_mor(int i, int j, const Mor& f) const { return hom(i, j).coords(E_.flatten(f)); }

Mor FInterval::to_mor(int i, int j, const Vec& q) const {
  const RawDec &a = raw_.at(i), &b = raw_.at(j);
  return b.p * E_.unflatten(a.X, b.X, hom(i, j).lift(q)) * a.p;
}

Vec FInterval::compose(int i, int j, int k, const Vec& g, const Vec& f) const {
  return from_mor(i, k, to_mor(j, k, g) * to_mor(i, j, f));
}

Vec FInterval::identity(int i) const { return from_mor(i, i, raw_.at(i).p); }

// ---- Karoubi envelope

Matrix karoubi_hom(const CylinderCategory& C, const KarObject& a, const KarObject& b) {
  int n = C.dim(a.base, b.base);
  Matrix M(n, n);
  for (int k = 0; k < n; ++k) {
    Vec h = C.compose(a.base, b.base, b.base, b.e, C.basis(a.base, b.base, k));
    h = C.compose(a.base, a.base, b.base, h, a.e);
    for (int r = 0; r < n; ++r) M(r, k) = h[r];
  }
  return column_basis(M);
}

// For simple objects: isomorphic exactly when some morphism is nonzero.
bool isomorphic(const CylinderCategory& C, const KarObject& a, const KarObject& b) {
  return karoubi_hom(C, a, b).cols() > 0;
}

KarSplit karoubi_split(const CylinderCategory& C, int base, const Vec& e) {
  if (C.compose(base, base, base, e, e) != e)
    throw IdempotentViolation("not an idempotent on " + C.object_name(base));
  KarObject k{base, e};
  return {karoubi_hom(C, k, k).cols(), e, e};
}

SimpleList simple_objects(const CylinderCategory& C) {
  SimpleList out;
  for (int i = 0; i < C.object_count(); ++i) {
    auto idems = primitive_idempotents(C.end_algebra(i));
    std::vector<int> mult(out.simples.size(), 0);
    for (const auto& e : idems) {
      KarObject k{i, e};
      size_t s = 0;
      while (s < out.simples.size() && !isomorphic(C, out.simples[s], k)) ++s;
      if (s == out.simples.size()) {
        out.simples.push_back(k);
        mult.push_back(0);
      }
      ++mult[s];
    }
    out.multiplicity.push_back(mult);
    int sq = 0;
    for (int m : mult) sq += m * m;
    if (sq != C.dim(i, i)) {
      out.complete = false;
      out.notes.push_back(C.object_name(i) + ": squared multiplicities sum to " + std::to_string(sq) +
                          ", endomorphisms have dimension " + std::to_string(C.dim(i, i)));
    }
  }
  for (auto& m : out.multiplicity) m.resize(out.simples.size(), 0);
  return out;
}

}  // namespace sn
