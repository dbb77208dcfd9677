#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stringnet/fusion_data.hpp"
#include "stringnet/tensor.hpp"

namespace sn {

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::string witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  void append(const ValidationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
  std::string str() const;
};

// Fusion-rule level checks: unit, duality, associativity of N, F-block shapes.
ValidationReport check_structure(const FusionCategory& C);

// Fixes kappa so that the zigzag (id_a ev_a)(coev_a id_a) = id_a holds.
ValidationReport derive_duality(FusionCategory& C);

// Full axiom suite; expects derive_duality to have run.
ValidationReport validate(const FusionCategory& C);

// Pentagon on all admissible tuples, comparing the two F-move paths.
ValidationReport check_pentagon(const FusionCategory& C);

// dim Hom(source, target) for sequences of simple labels.
int hom_dimension(const Engine& E, const std::vector<Label>& source, const std::vector<Label>& target);

}  // namespace sn
