#pragma once

#include <string>
#include <vector>

#include "stringnet/frobenius.hpp"

namespace sn {

enum class Manifold { interval, circle };

// Decoration by objects of C: one site per marked point, read along the
// orientation starting after the cut (circle) or at the left end (interval).
struct CDec {
  Manifold man = Manifold::circle;
  Obj points;
  bool operator==(const CDec&) const = default;
};

// Decoration by Frob(C): segs[i] precedes points[i]. On a circle the segment
// after the last point is segs[0] (the cut segment); on an interval there is
// one more segment than points and both end segments are trivial.
struct FDec {
  Manifold man = Manifold::circle;
  std::vector<AlgPtr> segs;
  std::vector<BimPtr> points;
};

std::string dec_str(const Engine& E, const CDec& d);
std::string dec_str(const FDec& d);
void check_decoration(const FDec& d);  // throws MalformedDecoration

// Each site of c as a bimodule over the trivial algebra.
FDec trivial_decoration(const Engine& E, const CDec& c);

}  // namespace sn
