#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stringnet/tensor.hpp"

namespace sn {

enum class Carrier { disk, rectangle, annulus };

// Elementary piece of a horizontal slice. Strands are labelled by simples;
// a strand running against the orientation carries the dual label.
struct Box {
  enum Kind { id, cup, cap, rcup, rcap, vertex } kind = id;
  Label label = 0;  // id, cup, cap, rcup, rcap
  Obj src, tgt;     // vertex
  Vec coords;       // vertex: coordinates in the engine basis of Hom(src, tgt)

  static Box strand(Label a) { return {id, a, {}, {}, {}}; }
  static Box cup_of(Label a) { return {cup, a, {}, {}, {}}; }    // 1 -> a a*
  static Box cap_of(Label a) { return {cap, a, {}, {}, {}}; }    // a* a -> 1
  static Box rcup_of(Label a) { return {rcup, a, {}, {}, {}}; }  // 1 -> a* a
  static Box rcap_of(Label a) { return {rcap, a, {}, {}, {}}; }  // a a* -> 1
  static Box node(Obj s, Obj t, Vec c) { return {vertex, 0, std::move(s), std::move(t), std::move(c)}; }
};
using Layer = std::vector<Box>;

// Sliced planar diagram read bottom to top. On a disk all boundary points lie
// on top; on an annulus the strands in `wrap` leave the slice on the right
// and re-enter on the left across the cut, so layers run from wrap+bottom to
// top+wrap.
struct PlanarDiagram {
  Carrier carrier = Carrier::rectangle;
  Obj bottom, top, wrap;
  std::vector<Layer> layers;

  int vertex_count() const;
};

struct StringNetElement {
  std::vector<std::pair<Scalar, PlanarDiagram>> terms;
};

Obj layer_src(const Engine& E, const Layer& L);
Obj layer_tgt(const Engine& E, const Layer& L);
Mor box_mor(const Engine& E, const Box& b);
Mor layer_mor(const Engine& E, const Layer& L);

// Morphism from (wrap) bottom to top (wrap); composes slices left to right,
// or in a random bracketing when rng is given.
Mor evaluate(const Engine& E, const PlanarDiagram& D, std::mt19937* rng = nullptr);
Mor evaluate(const Engine& E, const StringNetElement& x, std::mt19937* rng = nullptr);
Vec evaluate_disk(const Engine& E, const StringNetElement& x, std::mt19937* rng = nullptr);

StringNetElement stack(const Engine& E, const StringNetElement& top, const StringNetElement& bottom);

// Annulus with wrap W: psi in Hom(W X, Y W) reduced to the direct sum over
// simples s of Hom(s X, Y s), concatenated in label order.
Vec reduce_wrap(const Engine& E, const Obj& W, const Obj& X, const Obj& Y, const Mor& psi);
int annulus_dim(const Engine& E, const Obj& X, const Obj& Y);
Vec to_coordinates(const Engine& E, const StringNetElement& x);
StringNetElement from_coordinates(const Engine& E, const Obj& X, const Obj& Y, const Vec& v);

// diagram with a single vertex carrying the morphism f
PlanarDiagram single_vertex(const Engine& E, Carrier c, const Mor& f, const Obj& wrap = {});

}  // namespace sn
