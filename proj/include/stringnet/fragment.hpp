#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stringnet/dblprof.hpp"
#include "stringnet/transform.hpp"

namespace sn {

// Ucor as a functor from the listed Frob(C) objects to the Karoubi objects
// f(a_i), with Phi as inverse and identity unit and counit. Members point
// into each other, so the bundle is handed out by pointer.
struct UcorSquare {
  FinLinCategory frob, field;
  LinFunctor f, phi;
  Profunctor U_frob, U_field;
  ProfSquare square;  // U_frob => U_field with both sides f
  EquivalenceData left, right;
};
std::unique_ptr<UcorSquare> ucor_square(const CircleTransform& T);
std::unique_ptr<UcorSquare> ucor_square(const IntervalTransform& T);

// Square U_A => U_A sending f to (projection onto simple s) f, for a Mat
// category; natural but not invertible when some object misses s.
ProfSquare projection_square(const FinLinCategory& A, const Profunctor& UA, int s);

// Annuli between the listed circles: one cell per ordered pair, sewing is
// stacking, units are identity cylinders, verticals are Dehn twists on the
// outer boundary. theta is Ucor in the Karoubi bases.
FragmentModel frob_fragment(const CircleTransform& T);
FragmentModel field_fragment(const CircleTransform& T);
std::vector<Matrix> ucor_components(const CircleTransform& T);

// Intervals joined at their trivial end segments.
FDec concat_intervals(const FDec& a, const FDec& b);

// Open pants: rectangles on two legs sewn to a merge disk Hom(x1 x2, y),
// on both the Frob(C) and the C side; checks that the sewing plan computes
// the merge space and that Ucor and Phi are mutually inverse on it.
CheckReport pants_suite(const Engine& E, const std::vector<FDec>& legs, const std::vector<FDec>& outs);

}  // namespace sn
