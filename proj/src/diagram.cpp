#include "stringnet/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "stringnet/errors.hpp"

namespace sn {

int PlanarDiagram::vertex_count() const {
  int n = 0;
  for (const auto& L : layers)
    for (const auto& b : L) n += b.kind == Box::vertex ? 1 : 0;
  return n;
}

namespace {

Obj box_src(const Engine& E, const Box& b) {
  Label d = E.cat().dual(b.label);
  switch (b.kind) {
    case Box::id: return simple(b.label);
    case Box::cup:
    case Box::rcup: return {};
    case Box::cap: return {{d}, {b.label}};
    case Box::rcap: return {{b.label}, {d}};
    case Box::vertex: return b.src;
  }
  return {};
}

Obj box_tgt(const Engine& E, const Box& b) {
  Label d = E.cat().dual(b.label);
  switch (b.kind) {
    case Box::id: return simple(b.label);
    case Box::cup: return {{b.label}, {d}};
    case Box::rcup: return {{d}, {b.label}};
    case Box::cap:
    case Box::rcap: return {};
    case Box::vertex: return b.tgt;
  }
  return {};
}

Layer id_layer(const Engine& E, const Obj& X) {
  Layer L;
  for (const Site& s : X) {
    if (s.size() == 1) L.push_back(Box::strand(s[0]));
    else L.push_back(Box::node({s}, {s}, E.flatten(E.id({s}))));
  }
  return L;
}

Obj expected_src(const PlanarDiagram& D) {
  if (D.carrier == Carrier::disk) return {};
  if (D.carrier == Carrier::annulus) return concat(D.wrap, D.bottom);
  return D.bottom;
}

Obj expected_tgt(const PlanarDiagram& D) {
  if (D.carrier == Carrier::annulus) return concat(D.top, D.wrap);
  return D.top;
}

// one slice per non-identity box, applied in a random order
std::vector<Mor> interchange(const Engine& E, const Layer& L, std::mt19937& rng) {
  std::vector<int> order;
  for (int k = 0; k < int(L.size()); ++k)
    if (L[k].kind != Box::id) order.push_back(k);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> done(L.size(), false);
  std::vector<Mor> out;
  for (int k : order) {
    std::vector<Mor> parts;
    for (int j = 0; j < int(L.size()); ++j) {
      if (j == k) parts.push_back(box_mor(E, L[j]));
      else parts.push_back(E.id(done[j] ? box_tgt(E, L[j]) : box_src(E, L[j])));
    }
    out.push_back(E.tensor(parts));
    done[k] = true;
  }
  return out;
}

[[noreturn]] void mismatch(const std::string& what, const Engine& E, const Obj& a, const Obj& b) {
  size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  throw BoundaryMismatch(what + ": first disagreement at marked point " + std::to_string(i + 1) + " (" +
                         E.obj_str(a) + " vs " + E.obj_str(b) + ")");
}

}  // namespace

Obj layer_src(const Engine& E, const Layer& L) {
  Obj o;
  for (const auto& b : L) o = concat(o, box_src(E, b));
  return o;
}

Obj layer_tgt(const Engine& E, const Layer& L) {
  Obj o;
  for (const auto& b : L) o = concat(o, box_tgt(E, b));
  return o;
}

Mor box_mor(const Engine& E, const Box& b) {
  const FusionCategory& C = E.cat();
  if (b.kind != Box::vertex && (b.label < 0 || b.label >= C.rank()))
    throw MalformedDiagram("strand label out of range");
  switch (b.kind) {
    case Box::id: return E.id(simple(b.label));
    case Box::cup: return E.coev(simple(b.label));
    case Box::cap: return E.ev(simple(b.label));
    case Box::rcup: return E.rcoev(simple(b.label));
    case Box::rcap: return E.rev(simple(b.label));
    case Box::vertex: {
      int n = E.hom_dim(b.src, b.tgt);
      if (int(b.coords.size()) != n)
        throw MalformedDiagram("vertex " + E.obj_str(b.src) + " -> " + E.obj_str(b.tgt) + " needs " +
                               std::to_string(n) + " coordinates, got " + std::to_string(b.coords.size()));
      return E.unflatten(b.src, b.tgt, b.coords);
    }
  }
  throw MalformedDiagram("unknown box");
}

Mor layer_mor(const Engine& E, const Layer& L) {
  std::vector<Mor> parts;
  for (const auto& b : L) parts.push_back(box_mor(E, b));
  if (parts.empty()) return E.id({});
  return E.tensor(parts);
}

Mor evaluate(const Engine& E, const PlanarDiagram& D, std::mt19937* rng) {
  Obj cur = expected_src(D);
  std::vector<Mor> slices;
  for (size_t k = 0; k < D.layers.size(); ++k) {
    Obj s = layer_src(E, D.layers[k]);
    if (s != cur)
      throw MalformedDiagram("layer " + std::to_string(k + 1) + " starts on " + E.obj_str(s) + " but the strands below are " +
                             E.obj_str(cur));
    if (rng) {
      auto parts = interchange(E, D.layers[k], *rng);
      slices.insert(slices.end(), parts.begin(), parts.end());
    } else {
      slices.push_back(layer_mor(E, D.layers[k]));
    }
    cur = layer_tgt(E, D.layers[k]);
  }
  if (cur != expected_tgt(D))
    throw MalformedDiagram("diagram ends on " + E.obj_str(cur) + " instead of " + E.obj_str(expected_tgt(D)));
  if (slices.empty()) return E.id(cur);
  if (!rng) {
    Mor m = slices[0];
    for (size_t k = 1; k < slices.size(); ++k) m = slices[k] * m;
    return m;
  }
  while (slices.size() > 1) {
    std::uniform_int_distribution<size_t> pick(0, slices.size() - 2);
    size_t k = pick(*rng);
    slices[k] = slices[k + 1] * slices[k];
    slices.erase(slices.begin() + long(k) + 1);
  }
  return slices[0];
}

Mor evaluate(const Engine& E, const StringNetElement& x, std::mt19937* rng) {
  if (x.terms.empty()) throw MalformedDiagram("empty string-net element has no boundary");
  const PlanarDiagram& D0 = x.terms[0].second;
  Mor sum = E.zero(expected_src(D0), expected_tgt(D0));
  for (const auto& [c, D] : x.terms) {
    if (D.carrier != D0.carrier || D.bottom != D0.bottom || D.top != D0.top || D.wrap != D0.wrap)
      throw MalformedDiagram("summands have different boundary data");
    sum = sum + c * evaluate(E, D, rng);
  }
  return sum;
}

Vec evaluate_disk(const Engine& E, const StringNetElement& x, std::mt19937* rng) {
  for (const auto& t : x.terms)
    if (t.second.carrier != Carrier::disk) throw MalformedDiagram("evaluate_disk needs a disk");
  return E.flatten(evaluate(E, x, rng));
}

StringNetElement stack(const Engine& E, const StringNetElement& top, const StringNetElement& bottom) {
  StringNetElement out;
  for (const auto& [ct, T] : top.terms)
    for (const auto& [cb, B] : bottom.terms) {
      if (T.carrier == Carrier::disk) throw BoundaryMismatch("a disk cannot be stacked on top");
      bool ann = T.carrier == Carrier::annulus || B.carrier == Carrier::annulus;
      if (ann && (T.carrier != Carrier::annulus || B.carrier != Carrier::annulus))
        throw BoundaryMismatch("cannot stack an annulus on a rectangle or disk");
      if (B.top != T.bottom) mismatch("stack", E, B.top, T.bottom);
      PlanarDiagram D;
      D.carrier = B.carrier;
      D.bottom = B.bottom;
      D.top = T.top;
      if (ann) {
        D.wrap = concat(T.wrap, B.wrap);
        Layer wt = id_layer(E, T.wrap), wb = id_layer(E, B.wrap);
        for (const auto& L : B.layers) {
          Layer nl = wt;
          nl.insert(nl.end(), L.begin(), L.end());
          D.layers.push_back(nl);
        }
        for (const auto& L : T.layers) {
          Layer nl = L;
          nl.insert(nl.end(), wb.begin(), wb.end());
          D.layers.push_back(nl);
        }
      } else {
        D.layers = B.layers;
        D.layers.insert(D.layers.end(), T.layers.begin(), T.layers.end());
      }
      out.terms.push_back({ct * cb, std::move(D)});
    }
  return out;
}

Vec reduce_wrap(const Engine& E, const Obj& W, const Obj& X, const Obj& Y, const Mor& psi) {
  Obj WX = concat(W, X), YW = concat(Y, W);
  if (psi.src != WX || psi.tgt != YW) throw BoundaryMismatch("wrap reduction: morphism has the wrong boundary");
  Vec out;
  for (Label s = 0; s < E.cat().rank(); ++s) {
    Obj S = simple(s);
    Mor acc = E.zero(concat(S, X), concat(Y, S));
    for (int v = 0; v < E.dimV(W, s); ++v)
      acc = acc + E.tensor(E.id(Y), E.tree_out(W, s, v)) * psi * E.tensor(E.tree_in(W, s, v), E.id(X));
    Vec f = E.flatten(acc);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

int annulus_dim(const Engine& E, const Obj& X, const Obj& Y) {
  int n = 0;
  for (Label s = 0; s < E.cat().rank(); ++s) n += E.hom_dim(concat(simple(s), X), concat(Y, simple(s)));
  return n;
}

Vec to_coordinates(const Engine& E, const StringNetElement& x) {
  if (x.terms.empty()) throw BoundaryMismatch("empty element");
  const PlanarDiagram& D0 = x.terms[0].second;
  Vec acc(annulus_dim(E, D0.bottom, D0.top), Scalar::zero(E.field()));
  for (const auto& [c, D] : x.terms) {
    if (D.carrier != Carrier::annulus) throw BoundaryMismatch("to_coordinates needs an annulus");
    if (D.bottom != D0.bottom) mismatch("inner boundary", E, D.bottom, D0.bottom);
    if (D.top != D0.top) mismatch("outer boundary", E, D.top, D0.top);
    Vec v = reduce_wrap(E, D.wrap, D.bottom, D.top, evaluate(E, D));
    for (size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
  }
  return acc;
}

StringNetElement from_coordinates(const Engine& E, const Obj& X, const Obj& Y, const Vec& v) {
  if (int(v.size()) != annulus_dim(E, X, Y)) throw BoundaryMismatch("coordinate vector has the wrong length");
  StringNetElement out;
  size_t off = 0;
  for (Label s = 0; s < E.cat().rank(); ++s) {
    Obj S = simple(s), src = concat(S, X), tgt = concat(Y, S);
    int n = E.hom_dim(src, tgt);
    for (int k = 0; k < n; ++k)
      if (!v[off + k].is_zero()) out.terms.push_back({v[off + k], single_vertex(E, Carrier::annulus, E.basis_mor(src, tgt, k), S)});
    off += n;
  }
  if (out.terms.empty()) {
    // the zero element still needs a boundary
    Obj U = simple(E.cat().unit());
    out.terms.push_back({Scalar::zero(E.field()),
                         single_vertex(E, Carrier::annulus, E.zero(concat(U, X), concat(Y, U)), U)});
  }
  return out;
}

PlanarDiagram single_vertex(const Engine& E, Carrier c, const Mor& f, const Obj& wrap) {
  PlanarDiagram D;
  D.carrier = c;
  D.wrap = wrap;
  if (c == Carrier::annulus) {
    size_t w = wrap.size();
    if (f.src.size() < w || f.tgt.size() < w || !std::equal(wrap.begin(), wrap.end(), f.src.begin()) ||
        !std::equal(wrap.begin(), wrap.end(), f.tgt.end() - long(w)))
      throw BoundaryMismatch("vertex does not carry the wrap strands");
    D.bottom = Obj(f.src.begin() + long(w), f.src.end());
    D.top = Obj(f.tgt.begin(), f.tgt.end() - long(w));
  } else {
    if (c == Carrier::disk && !f.src.empty()) throw BoundaryMismatch("disk vertex must start on the empty object");
    D.bottom = f.src;
    D.top = f.tgt;
  }
  D.layers.push_back({Box::node(f.src, f.tgt, E.flatten(f))});
  return D;
}

}  // namespace sn
