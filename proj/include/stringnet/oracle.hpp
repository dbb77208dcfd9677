#pragma once

#include <string>
#include <vector>

#include "stringnet/decoration.hpp"
#include "stringnet/frobenius.hpp"
#include "stringnet/tensor.hpp"

namespace sn {

// Dimension of a span of diagrams modulo enumerated local relations.
struct OracleResult {
  int dim = 0;
  int spanning = 0;   // diagrams enumerated
  int relations = 0;  // relation vectors imposed
  int max_vertices = 0;
};

constexpr int kDefaultBudget = 6;

// Disk with outgoing boundary labels: all trivalent trees over every
// bracketing, modulo every F-move.
OracleResult oracle_disk(const FusionCategory& C, const std::vector<Label>& boundary, int budget = kDefaultBudget);

// Annulus with inner boundary X and outer boundary Y: wraps of up to two
// simple strands across the cut, modulo sliding any morphism around the
// annulus.
OracleResult oracle_annulus(const Engine& E, const Obj& X, const Obj& Y, int budget = kDefaultBudget);

// Frob(C)-coloured annulus between circle decorations: wraps by free
// bimodules B z A, modulo sliding bimodule morphisms between them.
OracleResult oracle_frob_annulus(const Engine& E, const FDec& a, const FDec& b, int budget = kDefaultBudget);

}  // namespace sn
