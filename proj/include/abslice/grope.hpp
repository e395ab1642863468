#pragma once

// Gropes as trees of surface stages, their class, and the tree-level
// complement that turns a (generalized) grope into a model Bing cell.

#include "abslice/bingcell.hpp"
#include "abslice/modeltree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abslice::grope {

struct GropeTree {
  enum class Kind { Circle, Surface };

  Kind kind = Kind::Circle;
  int genus = 0;
  // Generalized gropes attach several parallel copies of a stage; plain
  // gropes have copies == 1 everywhere.
  int copies = 1;
  // 2 * genus entries: (on alpha_i, on beta_i) for each symplectic pair.
  std::vector<GropeTree> attachments;

  static GropeTree circle(int copies = 1) { return {Kind::Circle, 0, copies, {}}; }
  static GropeTree surface(std::vector<std::pair<GropeTree, GropeTree>> pairs, int copies = 1);

  bool is_circle() const { return kind == Kind::Circle; }
  int pair_count() const { return static_cast<int>(attachments.size() / 2); }
  const GropeTree& on_alpha(int pair) const { return attachments.at(2 * pair); }
  const GropeTree& on_beta(int pair) const { return attachments.at(2 * pair + 1); }

  std::string to_string() const;

  friend bool operator==(const GropeTree&, const GropeTree&) = default;
};

std::vector<std::string> validate(const GropeTree& t);

/// Circle -> 1; a surface -> minimum over its symplectic pairs of the sum of
/// the classes attached to alpha_i and beta_i. Multiplicities do not change
/// the class.
int grope_class(const GropeTree& t);

/// The grope spanned by side s, if every surface stage on s's branches is
/// owned by s and the remaining basis curves are left free.
std::optional<GropeTree> from_decomp_side(const model::DecompTree& t, model::Side s);

/// Complement of the standard embedding in D^4, as a Bing-cell tree. A
/// genus-g stage becomes a body with 1 + copies*g boundary circles carrying
/// one Bing double per basis-curve pair; stages glued to alpha_i / beta_i
/// replace the matching handles.
cell::BingCellTree grope_complement(const GropeTree& t);

/// Same recursion, before lowering to vertices.
cell::CellShape grope_complement_shape(const GropeTree& t);

}  // namespace abslice::grope
