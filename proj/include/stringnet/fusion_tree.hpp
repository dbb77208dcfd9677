#pragma once

#include <map>
#include <string>
#include <vector>

#include "stringnet/fusion_data.hpp"

namespace sn {

// Splitting tree: the root carries the total channel, leaves the outer labels.
// Internal nodes have exactly two children and a multiplicity index mu.
struct FusionTree {
  Label label = 0;
  int mu = 0;
  std::vector<FusionTree> kids;

  static FusionTree leaf(Label a) { return {a, 0, {}}; }
  static FusionTree node(Label c, int mu, FusionTree l, FusionTree r) {
    return {c, mu, {std::move(l), std::move(r)}};
  }
  bool is_leaf() const { return kids.empty(); }
  std::vector<Label> leaves() const;
  int vertex_count() const;
  bool operator==(const FusionTree& o) const;
  bool operator<(const FusionTree& o) const;
  std::string str(const FusionCategory& C) const;
};

using TreeCombo = std::map<FusionTree, Scalar>;

bool tree_admissible(const FusionCategory& C, const FusionTree& t);

// Rebracket at the node addressed by path ("" is the root, 'L'/'R' descend).
// Forward: ((a b)_e c)_d -> sum F (a (b c)_f)_d. Inverse goes the other way.
TreeCombo f_move(const FusionCategory& C, const FusionTree& t, const std::string& path,
                 bool inverse = false);

// Apply a move to every tree of a combination.
TreeCombo f_move(const FusionCategory& C, const TreeCombo& x, const std::string& path,
                 bool inverse = false);

// All admissible trees with the given leaves and root over every bracketing.
std::vector<FusionTree> all_trees(const FusionCategory& C, const std::vector<Label>& leaves,
                                  Label root);

// All admissible left-combed trees ((x1 x2) x3) ... with the given leaves and root.
std::vector<FusionTree> left_combed_trees(const FusionCategory& C,
                                          const std::vector<Label>& leaves, Label root);

}  // namespace sn
