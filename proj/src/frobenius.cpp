#include "stringnet/frobenius.hpp"

#include "stringnet/errors.hpp"
#include "stringnet/linalg.hpp"

namespace sn {

namespace {

Mor scaled(const Scalar& s, const Mor& m) { return s * m; }

std::string site_name(const Engine& E, const Site& s) { return E.obj_str({s}); }

}  // namespace

AlgPtr trivial_algebra(const Engine& E) {
  auto A = std::make_shared<FrobAlgebra>();
  Label one = E.cat().unit();
  A->name = "1";
  A->obj = {one};
  Obj U = simple(one), UU{{one}, {one}};
  A->mult = E.fuse_vertex(one, one, one, 0);
  A->comult = E.split_vertex(one, one, one, 0);
  A->unit = E.unit_in();
  A->counit = E.unit_out();
  A->trivial = true;
  return A;
}

FrobAlgebra algebra_from_coords(const Engine& E, std::string name, Site obj, const AlgebraCoords& c) {
  const FusionCategory& C = E.cat();
  FrobAlgebra A;
  A.name = std::move(name);
  A.obj = obj;
  Obj X = A.A(), XX{obj, obj}, none;
  A.mult = E.zero(XX, X);
  A.comult = E.zero(X, XX);
  A.unit = E.zero(none, X);
  A.counit = E.zero(X, none);
  int n = static_cast<int>(obj.size());
  auto check = [&](int k) {
    if (k < 0 || k >= n) throw MalformedDecoration("algebra " + A.name + ": summand index out of range");
  };
  for (const auto& [key, s] : c.mult) {
    auto [i, j, k, mu] = key;
    check(i), check(j), check(k);
    if (mu < 0 || mu >= C.N(obj[i], obj[j], obj[k]))
      throw MalformedDecoration("algebra " + A.name + ": mult entry has no vertex");
    Mor v = E.summand_in(obj, k) * E.fuse_vertex(obj[i], obj[j], obj[k], mu) *
            E.tensor(E.summand_out(obj, i), E.summand_out(obj, j));
    A.mult = A.mult + scaled(s, v);
  }
  for (const auto& [key, s] : c.comult) {
    auto [k, i, j, mu] = key;
    check(i), check(j), check(k);
    if (mu < 0 || mu >= C.N(obj[i], obj[j], obj[k]))
      throw MalformedDecoration("algebra " + A.name + ": comult entry has no vertex");
    Mor v = E.tensor(E.summand_in(obj, i), E.summand_in(obj, j)) *
            E.split_vertex(obj[i], obj[j], obj[k], mu) * E.summand_out(obj, k);
    A.comult = A.comult + scaled(s, v);
  }
  for (const auto& [k, s] : c.unit) {
    check(k);
    if (obj[k] != C.unit()) throw MalformedDecoration("algebra " + A.name + ": unit on a non-unit summand");
    A.unit = A.unit + scaled(s, E.summand_in(obj, k) * E.unit_in());
  }
  for (const auto& [k, s] : c.counit) {
    check(k);
    if (obj[k] != C.unit())
      throw MalformedDecoration("algebra " + A.name + ": counit on a non-unit summand");
    A.counit = A.counit + scaled(s, E.unit_out() * E.summand_out(obj, k));
  }
  return A;
}

FrobAlgebra group_algebra(const Engine& E, std::string name, Site elements) {
  const FusionCategory& C = E.cat();
  int n = static_cast<int>(elements.size());
  AlgebraCoords c;
  auto find = [&](Label x) {
    for (int k = 0; k < n; ++k)
      if (elements[k] == x) return k;
    return -1;
  };
  Scalar inv_n = Scalar(Rational(1, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = -1;
      for (Label x = 0; x < C.rank(); ++x)
        if (C.N(elements[i], elements[j], x)) {
          if (k != -1 || find(x) < 0)
            throw MalformedDecoration("group algebra " + name + ": elements are not a group");
          k = find(x);
        }
      if (k < 0) throw MalformedDecoration("group algebra " + name + ": elements are not a group");
      c.mult[{i, j, k, 0}] = Scalar(1);
      c.comult[{k, i, j, 0}] = inv_n;
    }
  int e = find(C.unit());
  if (e < 0) throw MalformedDecoration("group algebra " + name + ": no unit element");
  c.unit[e] = Scalar(1);
  c.counit[e] = Scalar(long(n));
  return algebra_from_coords(E, std::move(name), std::move(elements), c);
}

ValidationReport check_dssfa(const Engine& E, const FrobAlgebra& A) {
  ValidationReport rep;
  Obj X = A.A();
  Mor id = E.id(X);
  const Mor &m = A.mult, &d = A.comult, &u = A.unit, &e = A.counit;
  const std::string& nm = A.name;
  if (m * E.tensor(m, id) != m * E.tensor(id, m)) rep.add("associativity", nm);
  if (m * E.tensor(u, id) != id || m * E.tensor(id, u) != id) rep.add("unitality", nm);
  if (E.tensor(d, id) * d != E.tensor(id, d) * d) rep.add("coassociativity", nm);
  if (E.tensor(e, id) * d != id || E.tensor(id, e) * d != id) rep.add("counitality", nm);
  Mor dm = d * m;
  if (E.tensor(id, m) * E.tensor(d, id) != dm || E.tensor(m, id) * E.tensor(id, d) != dm)
    rep.add("Frobenius relation", nm);
  if (m * d != id) rep.add("Delta-separability", nm + ": mult o comult != id");
  Mor pair = e * m;
  Obj Xd = E.dual(X);
  Mor phi1 = E.tensor(pair, E.id(Xd)) * E.tensor(id, E.coev(X));
  Mor phi2 = E.tensor(E.id(Xd), pair) * E.tensor(E.rcoev(X), id);
  if (phi1 != phi2) rep.add("symmetry", nm);
  return rep;
}

Bimodule bimodule_from_coords(const Engine& E, std::string name, AlgPtr left, AlgPtr right, Site obj,
                              const ActionCoords& c) {
  const FusionCategory& C = E.cat();
  Bimodule M;
  M.name = std::move(name);
  M.left = left;
  M.right = right;
  M.obj = obj;
  const Site &a = left->obj, &b = right->obj;
  M.lact = E.zero({a, obj}, M.M());
  M.ract = E.zero({obj, b}, M.M());
  auto bad = [&](const std::string& what) {
    return MalformedDecoration("bimodule " + M.name + ": " + what);
  };
  int n = static_cast<int>(obj.size());
  for (const auto& [key, s] : c.left) {
    auto [i, j, k, mu] = key;
    if (i < 0 || i >= int(a.size()) || j < 0 || j >= n || k < 0 || k >= n) throw bad("index out of range");
    if (mu < 0 || mu >= C.N(a[i], obj[j], obj[k])) throw bad("left entry has no vertex");
    Mor v = E.summand_in(obj, k) * E.fuse_vertex(a[i], obj[j], obj[k], mu) *
            E.tensor(E.summand_out(a, i), E.summand_out(obj, j));
    M.lact = M.lact + s * v;
  }
  for (const auto& [key, s] : c.right) {
    auto [i, j, k, mu] = key;  // algebra summand i, module summand j -> k
    if (i < 0 || i >= int(b.size()) || j < 0 || j >= n || k < 0 || k >= n) throw bad("index out of range");
    if (mu < 0 || mu >= C.N(obj[j], b[i], obj[k])) throw bad("right entry has no vertex");
    Mor v = E.summand_in(obj, k) * E.fuse_vertex(obj[j], b[i], obj[k], mu) *
            E.tensor(E.summand_out(obj, j), E.summand_out(b, i));
    M.ract = M.ract + s * v;
  }
  if (left->trivial && c.left.empty()) M.lact = E.tensor(left->counit, E.id(M.M()));
  if (right->trivial && c.right.empty()) M.ract = E.tensor(E.id(M.M()), right->counit);
  return M;
}

Bimodule regular_bimodule(const Engine&, AlgPtr A, std::string name) {
  Bimodule M;
  M.name = name.empty() ? A->name : std::move(name);
  M.left = A;
  M.right = A;
  M.obj = A->obj;
  M.lact = A->mult;
  M.ract = A->mult;
  return M;
}

Bimodule free_bimodule(const Engine& E, AlgPtr A, const Site& X, AlgPtr B, std::string name) {
  // A X B collapsed onto a single site by splitting the identity
  Obj AXB{A->obj, X, B->obj};
  Splitting s = split_idempotent(E, E.id(AXB));
  Bimodule M;
  M.name = name.empty() ? A->name + "." + site_name(E, X) + "." + B->name : std::move(name);
  M.left = A;
  M.right = B;
  M.obj = s.image;
  Mor idX = E.id({X}), idA = E.id(A->A()), idB = E.id(B->A());
  M.lact = s.proj * E.tensor({A->mult, idX, idB}) * E.tensor(idA, s.incl);
  M.ract = s.proj * E.tensor({idA, idX, B->mult}) * E.tensor(s.incl, idB);
  return M;
}

ValidationReport check_bimodule(const Engine& E, const Bimodule& M) {
  ValidationReport rep;
  const FrobAlgebra &A = *M.left, &B = *M.right;
  Mor id = E.id(M.M()), idA = E.id(A.A()), idB = E.id(B.A());
  const Mor &l = M.lact, &r = M.ract;
  if (l * E.tensor(A.mult, id) != l * E.tensor(idA, l)) rep.add("left module associativity", M.name);
  if (l * E.tensor(A.unit, id) != id) rep.add("left module unitality", M.name);
  if (r * E.tensor(id, B.mult) != r * E.tensor(r, idB)) rep.add("right module associativity", M.name);
  if (r * E.tensor(id, B.unit) != id) rep.add("right module unitality", M.name);
  if (l * E.tensor(idA, r) != r * E.tensor(l, idB)) rep.add("actions commute", M.name);
  return rep;
}

Mor left_coaction(const Engine& E, const Bimodule& M) {
  const FrobAlgebra& A = *M.left;
  return E.tensor(E.id(A.A()), M.lact) * E.tensor(A.comult * A.unit, E.id(M.M()));
}

Mor right_coaction(const Engine& E, const Bimodule& M) {
  const FrobAlgebra& B = *M.right;
  return E.tensor(M.ract, E.id(B.A())) * E.tensor(E.id(M.M()), B.comult * B.unit);
}

Mor averaging_idempotent(const Engine& E, const Bimodule& M, const Bimodule& N) {
  if (M.right.get() != N.left.get() && M.right->name != N.left->name)
    throw AlgebraMismatch("middle algebras " + M.right->name + " and " + N.left->name + " differ");
  const FrobAlgebra& B = *M.right;
  return E.tensor(M.ract, N.lact) * E.tensor({E.id(M.M()), B.comult * B.unit, E.id(N.M())});
}

bool is_bimodule_morphism(const Engine& E, const Bimodule& M, const Bimodule& N, const Mor& f) {
  Mor idA = E.id(M.left->A()), idB = E.id(M.right->A());
  return f * M.lact == N.lact * E.tensor(idA, f) && f * M.ract == N.ract * E.tensor(f, idB);
}

std::vector<Mor> bimodule_hom_space(const Engine& E, const Bimodule& M, const Bimodule& N) {
  if (M.left->name != N.left->name || M.right->name != N.right->name)
    throw AlgebraMismatch("bimodules " + M.name + " and " + N.name + " live over different algebras");
  Obj X = M.M(), Y = N.M();
  int n = E.hom_dim(X, Y);
  std::vector<Vec> cols;
  Mor idA = E.id(M.left->A()), idB = E.id(M.right->A());
  for (int k = 0; k < n; ++k) {
    Mor f = E.basis_mor(X, Y, k);
    Vec c = E.flatten(f * M.lact - N.lact * E.tensor(idA, f));
    Vec c2 = E.flatten(f * M.ract - N.ract * E.tensor(f, idB));
    c.insert(c.end(), c2.begin(), c2.end());
    cols.push_back(std::move(c));
  }
  std::vector<Mor> out;
  if (n == 0) return out;
  Matrix K(static_cast<int>(cols[0].size()), n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < K.rows(); ++i) K(i, k) = cols[k][i];
  Matrix ns = nullspace(K);
  for (int j = 0; j < ns.cols(); ++j) out.push_back(E.unflatten(X, Y, ns.col(j)));
  return out;
}

Splitting split_idempotent(const Engine& E, const Mor& e) {
  if (e.src != e.tgt) throw ContractViolation("split_idempotent: not an endomorphism");
  const Obj& X = e.src;
  int n = E.cat().rank();
  std::vector<Matrix> U(n), V(n);
  Splitting s;
  for (Label c = 0; c < n; ++c) {
    auto [u, v] = rank_factor(e.blocks[c]);
    U[c] = u;
    V[c] = v;
    for (int k = 0; k < u.cols(); ++k) s.image.push_back(c);
  }
  Obj I{s.image};
  s.incl = E.zero(I, X);
  s.proj = E.zero(X, I);
  for (Label c = 0; c < n; ++c) {
    s.incl.blocks[c] = U[c];
    s.proj.blocks[c] = V[c];
  }
  return s;
}

RelativeTensor relative_tensor(const Engine& E, const Bimodule& M, const Bimodule& N) {
  Mor p = averaging_idempotent(E, M, N);
  if (p * p != p) throw IdempotentViolation("averaging idempotent on " + M.name + " " + N.name);
  Splitting s = split_idempotent(E, p);
  RelativeTensor r;
  r.incl = s.incl;
  r.proj = s.proj;
  Bimodule& P = r.product;
  P.name = M.name + "x" + N.name;
  P.left = M.left;
  P.right = N.right;
  P.obj = s.image;
  Mor idA = E.id(M.left->A()), idC = E.id(N.right->A());
  P.lact = s.proj * E.tensor(M.lact, E.id(N.M())) * E.tensor(idA, s.incl);
  P.ract = s.proj * E.tensor(E.id(M.M()), N.ract) * E.tensor(s.incl, idC);
  return r;
}

}  // namespace sn
