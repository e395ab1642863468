#pragma once

// Model decompositions D^4 = A u B encoded as trees.
//
// Leaf(S): side S owns a terminal 2-handle, the other side is a collar.
// Stage(S, g, pairs): the attaching curve of S bounds a genus-g surface; the
// complementary side starts as g parallel copies of the core, each Bing
// doubled, with a 2-handle on every Bing component. Pair i holds the two
// sub-decompositions living in those 2-handles; the S-portion of each child
// is attached to the matching symplectic basis curve of the surface.

#include <string>
#include <vector>

namespace abslice::model {

enum class Side { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
char to_char(Side s);
Side side_from_string(const std::string& s);

struct DecompTree {
  enum class Kind { Leaf, Stage };

  Kind kind = Kind::Leaf;
  Side owner = Side::A;
  int genus = 0;
  // 2 * genus entries; pair i is (children[2i], children[2i+1]).
  std::vector<DecompTree> children;

  static DecompTree leaf(Side owner);
  static DecompTree stage(Side owner, std::vector<std::pair<DecompTree, DecompTree>> pairs);

  bool is_leaf() const { return kind == Kind::Leaf; }
  int pair_count() const { return static_cast<int>(children.size() / 2); }
  const DecompTree& first(int pair) const { return children.at(2 * pair); }
  const DecompTree& second(int pair) const { return children.at(2 * pair + 1); }

  std::string to_string() const;

  friend bool operator==(const DecompTree&, const DecompTree&) = default;
};

/// Empty when the tree is a well-formed model.
std::vector<std::string> validate(const DecompTree& t);

/// Throws std::invalid_argument carrying the first violation.
void require_valid(const DecompTree& t);

int height(const DecompTree& t);
int leaf_count(const DecompTree& t);
int leaf_count(const DecompTree& t, Side owner);

/// Same decomposition with the roles of A and B exchanged.
DecompTree swap_sides(const DecompTree& t);

/// Fixture names: "a1b1:g" (or "a1b1" for g = 1), "a2b2", "a2b2prime",
/// "a3b3", "a3b3prime". Throws std::invalid_argument for anything else.
DecompTree fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Symbolic Kirby data -------------------------------------------------------

/// Slot positions name the 2-handles of the complementary Bing-doubled
/// handlebodies: "1.2" is the second handle of pair 1 of the top stage,
/// "1.2/2.1" goes one stage deeper. The top-level core is "core".
struct TwoHandle {
  std::string position;
  int framing = 0;
  friend bool operator==(const TwoHandle&, const TwoHandle&) = default;
};

/// One surface stage: the non-owning side sees `genus` parallel copies of
/// the ambient core at `position`, each Bing doubled.
struct PatternStage {
  std::string position;
  Side surface_owner = Side::A;
  int genus = 1;
  friend bool operator==(const PatternStage&, const PatternStage&) = default;
};

struct HandleStructure {
  Side side = Side::A;
  std::vector<std::string> dotted_circles;
  std::vector<TwoHandle> two_handles;
  std::vector<PatternStage> pattern;

  friend bool operator==(const HandleStructure&, const HandleStructure&) = default;
};

HandleStructure handle_structure(const DecompTree& t, Side s);

/// Swaps dots and zeros over the same pattern; an involution.
HandleStructure dualize(const HandleStructure& h);

struct HandleCounts {
  int two_handles_a = 0;
  int one_handles_a = 0;
  int two_handles_b = 0;
  int one_handles_b = 0;
  friend bool operator==(const HandleCounts&, const HandleCounts&) = default;
};

HandleCounts handle_counts(const DecompTree& t);

}  // namespace abslice::model
