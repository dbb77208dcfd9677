#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stringnet/decoration.hpp"
#include "stringnet/frobenius.hpp"
#include "stringnet/validate.hpp"

namespace sn {

// Polynomial expression in the field generator and named constants.
Scalar parse_scalar(const std::string& expr, const NumberField* K,
                    const std::map<std::string, Scalar>& vars = {}, int line = 0, int col = 1);

struct GeneratorDecl {
  bool frob = false;
  CDec c;
  FDec f;
};

// Parsed category-data file. Algebras, bimodules and generators are only
// built when the fusion data passes the structural checks.
struct CategoryDoc {
  std::string origin;
  std::string text;
  std::shared_ptr<FusionCategory> cat;
  std::shared_ptr<Engine> engine;
  ValidationReport structure;
  std::vector<AlgPtr> algebras;
  std::vector<BimPtr> bimodules;
  std::vector<GeneratorDecl> generators;
  std::map<std::string, Scalar> vars;

  AlgPtr algebra(const std::string& name) const;
  BimPtr bimodule(const std::string& name) const;
};

CategoryDoc parse_category(const std::string& text, const std::string& origin = "<input>");
CategoryDoc load_category(const std::string& path);
std::string read_file(const std::string& path);

// Decoration literal: "circle g0 g1*", "circle -", "interval g0+g1"; for
// Frob(C): "circle A M B N", "interval 1 M 1".
CDec parse_cdec(const CategoryDoc& doc, const std::vector<std::string>& toks, int line = 0);
FDec parse_fdec(const CategoryDoc& doc, const std::vector<std::string>& toks, int line = 0);

}  // namespace sn
