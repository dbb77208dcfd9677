#include "stringnet/fragment.hpp"

#include "stringnet/errors.hpp"

namespace sn {

namespace {

Vec unit_vec(int n, int k) {
  Vec v(n, Scalar(0));
  v.at(k) = Scalar(1);
  return v;
}

Matrix from_columns(int rows, const std::vector<Vec>& cols) {
  Matrix M(rows, int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) M(r, int(c)) = cols[c][r];
  return M;
}

Vec kron_product(const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

// bilinear extension of a map given on pairs of basis vectors
Vec bilinear(const Vec& g, const Vec& f, int out, const std::function<Vec(int, int)>& on_basis) {
  Vec r(out, Scalar(0));
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    for (size_t j = 0; j < f.size(); ++j) {
      if (f[j].is_zero()) continue;
      Vec v = on_basis(int(i), int(j));
      Scalar c = g[i] * f[j];
      for (int t = 0; t < out; ++t) r[t] += c * v[t];
    }
  }
  return r;
}

// full subcategory of C on the given objects
FinLinCategory restrict(std::string name, const CylinderCategory& C, const std::vector<int>& objs) {
  int n = int(objs.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> dims(n, std::vector<int>(n));
  std::vector<Vec> ids;
  for (int x = 0; x < n; ++x) {
    names.push_back(C.object_name(objs[x]));
    ids.push_back(C.identity(objs[x]));
    for (int y = 0; y < n; ++y) dims[x][y] = C.dim(objs[x], objs[y]);
  }
  auto comp = [&](int x, int y, int z, const Vec& g, const Vec& f) {
    return C.compose(objs[x], objs[y], objs[z], g, f);
  };
  return FinLinCategory(std::move(name), names, dims, comp, ids);
}

LinFunctor functor_from(const FinLinCategory& A, const FinLinCategory& B,
                        const std::function<Matrix(int, int)>& mor) {
  LinFunctor F;
  F.src = &A;
  F.tgt = &B;
  for (int x = 0; x < A.size(); ++x) {
    F.obj.push_back(x);
    for (int y = 0; y < A.size(); ++y) F.mor[{x, y}] = mor(x, y);
  }
  return F;
}

template <class Tr>
std::unique_ptr<UcorSquare> build_square(const Tr& T, std::vector<KarObject> kar) {
  auto s = std::make_unique<UcorSquare>();
  std::vector<int> idx;
  for (int i = 0; i < T.size(); ++i) idx.push_back(i);
  s->frob = restrict("Frob", T.frob(), idx);
  s->field = FinLinCategory::karoubi("Kar", T.bc(), kar);
  s->f = functor_from(s->frob, s->field, [&](int i, int j) { return T.ucor_matrix(i, j); });
  s->phi = functor_from(s->field, s->frob, [&](int i, int j) { return T.phi_matrix(i, j); });
  s->U_frob = identity_profunctor(s->frob);
  s->U_field = identity_profunctor(s->field);
  s->square = functor_square(s->f, s->U_frob, s->U_field);
  for (auto* e : {&s->left, &s->right}) {
    e->F = s->f;
    e->Finv = s->phi;
    for (int i = 0; i < T.size(); ++i) {
      e->unit.push_back(s->frob.identity(i));
      e->unit_inv.push_back(s->frob.identity(i));
      e->counit.push_back(s->field.identity(i));
      e->counit_inv.push_back(s->field.identity(i));
    }
  }
  return s;
}

}  // namespace

std::unique_ptr<UcorSquare> ucor_square(const CircleTransform& T) {
  std::vector<KarObject> kar;
  for (int i = 0; i < T.size(); ++i) kar.push_back(T.field_object(i));
  return build_square(T, kar);
}

std::unique_ptr<UcorSquare> ucor_square(const IntervalTransform& T) {
  std::vector<KarObject> kar;
  for (int i = 0; i < T.size(); ++i) kar.push_back({i, T.field_idempotent(i)});
  return build_square(T, kar);
}

ProfSquare projection_square(const FinLinCategory& A, const Profunctor& UA, int s) {
  if (A.mat_objects.empty() || s >= A.mat_simples) throw ContractViolation("projection square needs a Mat category");
  ProfSquare sq;
  sq.top = sq.bottom = &UA;
  sq.left = sq.right = identity_functor(A);
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y) {
      // the basis is ordered by simple, so the projection keeps a leading range
      int lo = 0;
      for (int t = 0; t < s; ++t) lo += A.mat_objects[x][t] * A.mat_objects[y][t];
      int hi = lo + A.mat_objects[x][s] * A.mat_objects[y][s];
      Matrix M(A.dim(x, y), A.dim(x, y));
      for (int k = lo; k < hi; ++k) M(k, k) = Scalar(1);
      sq.comp[{x, y}] = std::move(M);
    }
  return sq;
}

// ---- annulus fragments

namespace {

FragmentModel fragment_shape(const CylinderCategory& C, int n, const std::function<int(int, int)>& dim) {
  FragmentModel m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.cells.push_back("annulus " + C.object_name(i) + " -> " + C.object_name(j));
      m.dims.push_back(dim(i, j));
    }
  return m;
}

}  // namespace

FragmentModel frob_fragment(const CircleTransform& T) {
  const FCircle& F = T.frob();
  int n = T.size();
  FragmentModel m = fragment_shape(F, n, [&](int i, int j) { return F.dim(i, j); });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m.sewings.push_back({"stack " + F.object_name(i) + " | " + F.object_name(j) + " | " + F.object_name(k),
                             j * n + k, i * n + j, i * n + k,
                             [&F, i, j, k](const Vec& g, const Vec& f) { return F.compose(i, j, k, g, f); }});
  for (int i = 0; i < n; ++i) m.units.push_back({"cylinder " + F.object_name(i), i * n + i, F.identity(i)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec tw = F.twist(j);
      std::vector<Vec> cols;
      for (int k = 0; k < F.dim(i, j); ++k) cols.push_back(F.compose(i, j, j, tw, unit_vec(F.dim(i, j), k)));
      m.verticals.push_back({"Dehn twist on " + m.cells[i * n + j], i * n + j, i * n + j, from_columns(F.dim(i, j), cols)});
    }
  return m;
}

FragmentModel field_fragment(const CircleTransform& T) {
  const CCircle& C = T.bc();
  int n = T.size();
  auto kb = std::make_shared<std::vector<Matrix>>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) kb->push_back(T.karoubi_basis(i, j));
  const auto& KB = *kb;
  FragmentModel m = fragment_shape(C, n, [&](int i, int j) { return KB[i * n + j].cols(); });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m.sewings.push_back({"stack " + C.object_name(i) + " | " + C.object_name(j) + " | " + C.object_name(k),
                             j * n + k, i * n + j, i * n + k, [&C, kb, n, i, j, k](const Vec& g, const Vec& f) {
                               const auto& KB = *kb;
                               Vec h = C.compose(i, j, k, LinFunctor::mul(KB[j * n + k], g),
                                                 LinFunctor::mul(KB[i * n + j], f));
                               return coords_in_columns(KB[i * n + k], h);
                             }});
  for (int i = 0; i < n; ++i)
    m.units.push_back({"cylinder " + C.object_name(i), i * n + i, coords_in_columns(KB[i * n + i], T.field_idempotent(i))});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CDec& Y = C.object(j);
      Vec tw = C.compose(j, j, j, C.twist(Y.points), T.field_idempotent(j));
      const Matrix& B = KB[i * n + j];
      std::vector<Vec> cols;
      for (int k = 0; k < B.cols(); ++k) cols.push_back(coords_in_columns(B, C.compose(i, j, j, tw, B.col(k))));
      m.verticals.push_back({"Dehn twist on " + m.cells[i * n + j], i * n + j, i * n + j, from_columns(B.cols(), cols)});
    }
  return m;
}

std::vector<Matrix> ucor_components(const CircleTransform& T) {
  std::vector<Matrix> out;
  for (int i = 0; i < T.size(); ++i)
    for (int j = 0; j < T.size(); ++j) out.push_back(T.ucor_matrix(i, j));
  return out;
}

// ---- open pants

FDec concat_intervals(const FDec& a, const FDec& b) {
  if (a.man != Manifold::interval || b.man != Manifold::interval) throw MalformedDecoration("pants legs must be intervals");
  FDec out = a;
  out.segs.insert(out.segs.end(), b.segs.begin() + 1, b.segs.end());
  out.points.insert(out.points.end(), b.points.begin(), b.points.end());
  check_decoration(out);
  return out;
}

namespace {

// One side of the pants plan, in transform indices.
struct PantsSide {
  std::string tag;
  std::function<int(int, int)> dim;
  std::function<Vec(int, int, int, const Vec&, const Vec&)> compose;
  std::function<Vec(int)> identity;
  // r1 (x) r2 : c(i1, i2) -> c(j1, j2)
  std::function<Vec(int, int, int, int, const Vec&, const Vec&)> tensor;
};

struct PantsModel {
  FinLinCategory legs, outs;
  Profunctor U, M;
  std::unique_ptr<ProfComposite> plan;
};

std::unique_ptr<PantsModel> build_pants(const PantsSide& S, int nl, int no, const std::function<int(int, int)>& cat,
                                        const std::function<std::string(int)>& name) {
  auto pm = std::make_unique<PantsModel>();
  int n2 = nl * nl;
  std::vector<std::string> lnames;
  std::vector<std::vector<int>> ldims(n2, std::vector<int>(n2));
  std::vector<Vec> lids;
  for (int a = 0; a < n2; ++a) {
    lnames.push_back(name(a / nl) + " & " + name(a % nl));
    lids.push_back(kron_product(S.identity(a / nl), S.identity(a % nl)));
    for (int b = 0; b < n2; ++b) ldims[a][b] = S.dim(a / nl, b / nl) * S.dim(a % nl, b % nl);
  }
  auto lcomp = [&](int x, int y, int z, const Vec& g, const Vec& f) {
    int d2xy = S.dim(x % nl, y % nl), d2yz = S.dim(y % nl, z % nl);
    return bilinear(g, f, ldims[x][z], [&](int gi, int fi) {
      return kron_product(S.compose(x / nl, y / nl, z / nl, unit_vec(S.dim(y / nl, z / nl), gi / d2yz),
                                    unit_vec(S.dim(x / nl, y / nl), fi / d2xy)),
                          S.compose(x % nl, y % nl, z % nl, unit_vec(d2yz, gi % d2yz), unit_vec(d2xy, fi % d2xy)));
    });
  };
  pm->legs = FinLinCategory(S.tag + " legs", lnames, ldims, lcomp, lids);

  std::vector<std::string> onames;
  std::vector<std::vector<int>> odims(no, std::vector<int>(no));
  std::vector<Vec> oids;
  for (int y = 0; y < no; ++y) {
    onames.push_back(name(nl + y));
    oids.push_back(S.identity(nl + y));
    for (int z = 0; z < no; ++z) odims[y][z] = S.dim(nl + y, nl + z);
  }
  auto ocomp = [&](int x, int y, int z, const Vec& g, const Vec& f) { return S.compose(nl + x, nl + y, nl + z, g, f); };
  pm->outs = FinLinCategory(S.tag + " outputs", onames, odims, ocomp, oids);

  Profunctor& M = pm->M;
  M.name = S.tag + " merge";
  M.src = &pm->legs;
  M.tgt = &pm->outs;
  M.dims.assign(n2, std::vector<int>(no));
  for (int a = 0; a < n2; ++a)
    for (int y = 0; y < no; ++y) M.dims[a][y] = S.dim(cat(a / nl, a % nl), nl + y);
  for (int a = 0; a < n2; ++a) {
    int ca = cat(a / nl, a % nl);
    for (int y = 0; y < no; ++y)
      for (int y2 = 0; y2 < no; ++y2) {
        std::vector<Matrix> L;
        for (int k = 0; k < odims[y][y2]; ++k) {
          std::vector<Vec> cols;
          for (int j = 0; j < M.dims[a][y]; ++j)
            cols.push_back(S.compose(ca, nl + y, nl + y2, unit_vec(odims[y][y2], k), unit_vec(M.dims[a][y], j)));
          L.push_back(from_columns(M.dims[a][y2], cols));
        }
        M.left[{a, y, y2}] = std::move(L);
      }
  }
  for (int a2 = 0; a2 < n2; ++a2)
    for (int a = 0; a < n2; ++a) {
      int ca2 = cat(a2 / nl, a2 % nl), ca = cat(a / nl, a % nl);
      int d2 = S.dim(a2 % nl, a % nl);
      for (int y = 0; y < no; ++y) {
        std::vector<Matrix> R;
        for (int k = 0; k < ldims[a2][a]; ++k) {
          Vec r = S.tensor(a2 / nl, a / nl, a2 % nl, a % nl, unit_vec(S.dim(a2 / nl, a / nl), k / d2),
                           unit_vec(d2, k % d2));
          std::vector<Vec> cols;
          for (int j = 0; j < M.dims[a][y]; ++j) cols.push_back(S.compose(ca2, ca, nl + y, unit_vec(M.dims[a][y], j), r));
          R.push_back(from_columns(M.dims[a2][y], cols));
        }
        M.right[{a2, a, y}] = std::move(R);
      }
    }
  pm->U = identity_profunctor(pm->legs);
  pm->plan = std::make_unique<ProfComposite>(prof_compose(pm->U, pm->M));
  return pm;
}

}  // namespace

CheckReport pants_suite(const Engine& E, const std::vector<FDec>& legs, const std::vector<FDec>& outs) {
  CheckReport rep;
  int nl = int(legs.size()), no = int(outs.size());
  std::vector<FDec> objs = legs;
  objs.insert(objs.end(), outs.begin(), outs.end());
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) objs.push_back(concat_intervals(legs[i], legs[j]));
  IntervalTransform T(E, objs);
  const FInterval& F = T.frob();
  const CInterval& C = T.bc();
  auto cat = [&](int i, int j) { return nl + no + i * nl + j; };
  auto name = [&](int i) { return F.object_name(i); };

  PantsSide fs{"Frob",
               [&](int i, int j) { return F.dim(i, j); },
               [&](int i, int j, int k, const Vec& g, const Vec& f) { return F.compose(i, j, k, g, f); },
               [&](int i) { return F.identity(i); },
               [&](int i1, int j1, int i2, int j2, const Vec& r1, const Vec& r2) {
                 return F.from_mor(cat(i1, i2), cat(j1, j2), E.tensor(F.to_mor(i1, j1, r1), F.to_mor(i2, j2, r2)));
               }};
  std::map<std::pair<int, int>, Matrix> KB;
  auto kb = [&](int i, int j) -> const Matrix& {
    auto it = KB.find({i, j});
    if (it == KB.end()) it = KB.emplace(std::make_pair(i, j), T.karoubi_basis(i, j)).first;
    return it->second;
  };
  auto X = [&](int i) { return C.object(i).points; };
  PantsSide cs{"Kar",
               [&](int i, int j) { return kb(i, j).cols(); },
               [&](int i, int j, int k, const Vec& g, const Vec& f) {
                 return coords_in_columns(kb(i, k), C.compose(i, j, k, LinFunctor::mul(kb(j, k), g), LinFunctor::mul(kb(i, j), f)));
               },
               [&](int i) { return coords_in_columns(kb(i, i), T.field_idempotent(i)); },
               [&](int i1, int j1, int i2, int j2, const Vec& r1, const Vec& r2) {
                 Mor m = E.tensor(E.unflatten(X(i1), X(j1), LinFunctor::mul(kb(i1, j1), r1)),
                                  E.unflatten(X(i2), X(j2), LinFunctor::mul(kb(i2, j2), r2)));
                 return coords_in_columns(kb(cat(i1, i2), cat(j1, j2)), E.flatten(m));
               }};
  auto PF = build_pants(fs, nl, no, cat, name);
  auto PC = build_pants(cs, nl, no, cat, name);
  rep.append(PF->legs.check(), "pants ");
  rep.append(PC->legs.check(), "pants ");
  rep.append(PF->M.check(), "pants ");
  rep.append(PC->M.check(), "pants ");

  // sewing the rectangles into the merge disk
  auto sewF = left_unitor(*PF->plan), sewC = left_unitor(*PC->plan);
  std::string w;
  rep.add("pants plan computes the Frob merge space", all_invertible(sewF, &w), w);
  rep.add("pants plan computes the C merge space", all_invertible(sewC, &w), w);

  int n2 = nl * nl;
  auto leg_mor = [&](bool ucor, int a, int b) {
    auto m = [&](int i, int j) { return ucor ? T.ucor_matrix(i, j) : T.phi_matrix(i, j); };
    return kron(m(a / nl, b / nl), m(a % nl, b % nl));
  };
  auto make = [&](bool ucor, const PantsModel& S, const PantsModel& D) {
    LinFunctor fl = functor_from(S.legs, D.legs, [&](int a, int b) { return leg_mor(ucor, a, b); });
    LinFunctor fo = functor_from(S.outs, D.outs, [&](int y, int z) {
      return ucor ? T.ucor_matrix(nl + y, nl + z) : T.phi_matrix(nl + y, nl + z);
    });
    ProfSquare alpha = functor_square(fl, S.U, D.U);
    ProfSquare beta;
    beta.top = &S.M;
    beta.bottom = &D.M;
    beta.left = fl;
    beta.right = fo;
    for (int a = 0; a < n2; ++a)
      for (int y = 0; y < no; ++y) {
        int c = cat(a / nl, a % nl);
        beta.comp[{a, y}] = ucor ? T.ucor_matrix(c, nl + y) : T.phi_matrix(c, nl + y);
      }
    std::string tag = ucor ? "Ucor" : "Phi";
    rep.append(fl.check(), "pants " + tag + " on legs ");
    rep.append(beta.check(), "pants " + tag + " ");
    return hcompose(alpha, beta, *S.plan, *D.plan);
  };
  ProfSquare U = make(true, *PF, *PC), P = make(false, *PC, *PF);
  for (int a = 0; a < n2; ++a)
    for (int y = 0; y < no; ++y) {
      std::string at = PF->legs.object(a) + " -> " + PF->outs.object(y);
      const Matrix &u = U.comp.at({a, y}), &p = P.comp.at({a, y});
      bool sq = u.rows() == u.cols();
      rep.add("pants dimensions " + at, sq,
              "Frob side " + std::to_string(u.cols()) + ", C side " + std::to_string(u.rows()));
      if (!sq) continue;
      rep.add("pants Phi Ucor = id " + at, p * u == Matrix::identity(u.cols()), "Phi Ucor differs from the identity");
      rep.add("pants Ucor Phi = id " + at, u * p == Matrix::identity(u.rows()), "Ucor Phi differs from the identity");
      int c = cat(a / nl, a % nl);
      rep.add("pants sewing commutes with Ucor " + at, sewC.at({a, y}) * u == T.ucor_matrix(c, nl + y) * sewF.at({a, y}),
              "sewn Ucor differs from Ucor of the sewn disk");
    }
  return rep;
}

}  // namespace sn
