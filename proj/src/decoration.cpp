#include "stringnet/decoration.hpp"

#include "stringnet/errors.hpp"

namespace sn {

namespace {

const char* man_str(Manifold m) { return m == Manifold::circle ? "circle" : "interval"; }

}  // namespace

std::string dec_str(const Engine& E, const CDec& d) {
  return std::string(man_str(d.man)) + "[" + E.obj_str(d.points) + "]";
}

std::string dec_str(const FDec& d) {
  std::string s = std::string(man_str(d.man)) + "[";
  for (size_t i = 0; i < d.segs.size(); ++i) {
    if (i) s += " ";
    s += d.segs[i]->name;
    if (i < d.points.size()) s += " " + d.points[i]->name;
  }
  return s + "]";
}

void check_decoration(const FDec& d) {
  size_t n = d.points.size();
  auto fail = [&](const std::string& why) { throw MalformedDecoration(dec_str(d) + ": " + why); };
  if (d.man == Manifold::circle) {
    if (d.segs.size() != std::max<size_t>(n, 1)) fail("circle needs one segment per point");
  } else {
    if (d.segs.size() != n + 1) fail("interval needs one more segment than points");
    if (!d.segs.front()->trivial || !d.segs.back()->trivial) fail("interval ends must carry the trivial algebra");
  }
  for (size_t i = 0; i < n; ++i) {
    const AlgPtr& before = d.segs[i];
    const AlgPtr& after = d.man == Manifold::circle ? d.segs[(i + 1) % n] : d.segs[i + 1];
    // the segment before a point acts on it from the left
    if (d.points[i]->left->name != before->name || d.points[i]->right->name != after->name)
      fail("point " + d.points[i]->name + " does not match its neighbouring algebras");
  }
}

FDec trivial_decoration(const Engine& E, const CDec& c) {
  FDec d;
  d.man = c.man;
  AlgPtr one = trivial_algebra(E);
  size_t n = c.points.size();
  d.segs.assign(c.man == Manifold::circle ? std::max<size_t>(n, 1) : n + 1, one);
  for (const auto& site : c.points) {
    std::string name = E.obj_str({site});
    d.points.push_back(std::make_shared<Bimodule>(bimodule_from_coords(E, name, one, one, site, {})));
  }
  return d;
}

}  // namespace sn
