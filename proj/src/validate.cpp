#include "stringnet/validate.hpp"

#include "stringnet/errors.hpp"
#include "stringnet/fusion_tree.hpp"

namespace sn {

std::string ValidationReport::str() const {
  if (ok()) return "valid\n";
  std::string s;
  for (const auto& v : violations) s += v.axiom + ": " + v.witness + "\n";
  return s;
}

namespace {

std::string tup(const FusionCategory& C, std::initializer_list<Label> ls, Label d) {
  std::string s = "(";
  bool first = true;
  for (Label l : ls) {
    s += (first ? "" : ",") + C.label_name(l);
    first = false;
  }
  return s + ";" + C.label_name(d) + ")";
}

}  // namespace

ValidationReport check_structure(const FusionCategory& C) {
  ValidationReport rep;
  int n = C.rank();
  Label one = C.unit();
  for (Label a = 0; a < n; ++a)
    for (Label c = 0; c < n; ++c) {
      int want = a == c ? 1 : 0;
      if (C.N(one, a, c) != want || C.N(a, one, c) != want)
        rep.add("unit law", "N(1," + C.label_name(a) + "," + C.label_name(c) + ")");
    }
  for (Label a = 0; a < n; ++a) {
    if (C.dual(C.dual(a)) != a) rep.add("duality involution", "dual(dual(" + C.label_name(a) + "))");
    for (Label b = 0; b < n; ++b) {
      int want = b == C.dual(a) ? 1 : 0;
      if (C.N(a, b, one) != want)
        rep.add("duality", "N(" + C.label_name(a) + "," + C.label_name(b) + ",1) = " +
                               std::to_string(C.N(a, b, one)));
    }
  }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d) {
          size_t nr = C.F_rows(a, b, c, d).size(), nc = C.F_cols(a, b, c, d).size();
          if (nr != nc) {
            rep.add("fusion associativity", tup(C, {a, b, c}, d));
            continue;
          }
          if (nr == 0) continue;
          if (!C.has_F(a, b, c, d)) rep.add("missing F-block", tup(C, {a, b, c}, d));
          else {
            try {
              C.F_inv(a, b, c, d);
            } catch (const ContractViolation&) {
              rep.add("F invertibility", tup(C, {a, b, c}, d));
            }
          }
        }
  return rep;
}

ValidationReport derive_duality(FusionCategory& C) {
  ValidationReport rep = check_structure(C);
  if (!rep.ok()) return rep;
  std::vector<Scalar> ones(C.rank(), Scalar::one(C.field()));
  C.set_kappa(ones);
  auto probe = std::make_shared<FusionCategory>(C);
  Engine E(probe);
  std::vector<Scalar> kappa(C.rank());
  for (Label a = 0; a < C.rank(); ++a) {
    Obj A = simple(a), Ad = simple(C.dual(a));
    Mor z = E.tensor(E.id(A), E.ev(A)) * E.tensor(E.coev(A), E.id(A));
    Scalar s = z.blocks[a](0, 0);
    if (s.is_zero()) {
      rep.add("rigidity", "zigzag of " + C.label_name(a) + " vanishes");
      kappa[a] = Scalar::one(C.field());
    } else {
      kappa[a] = s.inv();
    }
  }
  C.set_kappa(kappa);
  return rep;
}

ValidationReport check_pentagon(const FusionCategory& C) {
  ValidationReport rep;
  int n = C.rank();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d)
          for (Label e = 0; e < n; ++e) {
            auto trees = left_combed_trees(C, {a, b, c, d}, e);
            for (const auto& t : trees) {
              TreeCombo start{{t, Scalar(1)}};
              TreeCombo p1 = f_move(C, f_move(C, start, ""), "");
              TreeCombo p2 = f_move(C, f_move(C, f_move(C, start, "L"), ""), "R");
              if (p1 != p2) {
                rep.add("pentagon", tup(C, {a, b, c, d}, e) + " from " + t.str(C));
                break;
              }
            }
          }
  return rep;
}

ValidationReport validate(const FusionCategory& Cref) {
  ValidationReport rep = check_structure(Cref);
  if (!rep.ok()) return rep;
  const FusionCategory& C = Cref;
  int n = C.rank();
  Label one = C.unit();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c) {
        if (a != one && b != one && c != one) continue;
        for (Label d = 0; d < n; ++d) {
          if (C.F_rows(a, b, c, d).empty()) continue;
          const Matrix& F = C.F(a, b, c, d);
          if (F != Matrix::identity(F.rows())) rep.add("triangle gauge", tup(C, {a, b, c}, d));
        }
      }
  rep.append(check_pentagon(C));
  if (!rep.ok()) return rep;

  auto copy = std::make_shared<FusionCategory>(C);
  Engine E(copy);
  for (Label a = 0; a < n; ++a) {
    Obj A = simple(a), Ad = simple(C.dual(a));
    if (C.kappa(a).is_zero()) {
      rep.add("rigidity", "ev of " + C.label_name(a) + " vanishes");
      continue;
    }
    Mor z1 = E.tensor(E.id(A), E.ev(A)) * E.tensor(E.coev(A), E.id(A));
    if (z1 != E.id(A)) rep.add("zigzag", "(id ev)(coev id) on " + C.label_name(a));
    Mor z2 = E.tensor(E.ev(A), E.id(Ad)) * E.tensor(E.id(Ad), E.coev(A));
    if (z2 != E.id(Ad)) rep.add("zigzag", "(ev id)(id coev) on dual of " + C.label_name(a));
  }
  if (!rep.ok()) return rep;

  for (Label a = 0; a < n; ++a) {
    if (C.pivotal(a).is_zero()) {
      rep.add("pivotal", "t_" + C.label_name(a) + " = 0");
      return rep;
    }
    if (!(C.pivotal(a) * C.pivotal(C.dual(a))).is_one())
      rep.add("pivotal", "t_" + C.label_name(a) + " t_" + C.label_name(C.dual(a)) + " = " +
                             (C.pivotal(a) * C.pivotal(C.dual(a))).str());
  }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        if (C.N(a, b, c) > 0 && C.pivotal(a) * C.pivotal(b) != C.pivotal(c))
          rep.add("pivotal monoidality", "t_" + C.label_name(a) + " t_" + C.label_name(b) +
                                             " != t_" + C.label_name(c));
  if (!rep.ok()) return rep;
  // left and right transposes of every basis vertex agree
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (int mu = 0; mu < C.N(a, b, c); ++mu) {
          Obj AB{{a}, {b}}, Cc = simple(c);
          Obj ABd = E.dual(AB), Cd = E.dual(Cc);
          Mor f = E.split_vertex(a, b, c, mu);
          Mor left = E.tensor(E.ev(AB), E.id(Cd)) * E.tensor({E.id(ABd), f, E.id(Cd)}) *
                     E.tensor(E.id(ABd), E.coev(Cc));
          Mor right = E.tensor(E.id(Cd), E.rev(AB)) * E.tensor({E.id(Cd), f, E.id(ABd)}) *
                      E.tensor(E.rcoev(Cc), E.id(ABd));
          if (left != right) rep.add("pivotal naturality", "transposes differ at vertex " +
                                                               tup(C, {a, b}, c));
        }
  for (Label a = 0; a < n; ++a) {
    Scalar dr = C.qdim(a), dl = C.qdim_left(a);
    if (dr.is_zero()) rep.add("quantum dimension", "d_" + C.label_name(a) + " = 0");
    if (C.spherical_declared() && dr != dl)
      rep.add("sphericality", "d_" + C.label_name(a) + " = " + dr.str() + " but left trace " + dl.str());
    Scalar tr = E.trace(E.id(simple(a)));
    if (tr != dr) rep.add("trace", "right trace of id_" + C.label_name(a) + " = " + tr.str());
  }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b) {
      Scalar s = Scalar::zero(C.field());
      for (Label c = 0; c < n; ++c) s += Scalar(long(C.N(a, b, c))) * C.qdim(c);
      if (s != C.qdim(a) * C.qdim(b))
        rep.add("qdim multiplicativity", "d_" + C.label_name(a) + " d_" + C.label_name(b));
    }
  return rep;
}

int hom_dimension(const Engine& E, const std::vector<Label>& source, const std::vector<Label>& target) {
  Obj X, Y;
  for (Label a : source) {
    E.cat().check_label(a);
    X.push_back({a});
  }
  for (Label a : target) {
    E.cat().check_label(a);
    Y.push_back({a});
  }
  return E.hom_dim(X, Y);
}

}  // namespace sn
