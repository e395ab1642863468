#pragma once

// The binary invariant I_lambda on model decompositions and explicit Bing
// cells bounded by the attaching curve of the side where it equals 1.
//
// Recursion on Stage(S, g, pairs):
//   I_S = AND over pairs of (I_S(first) OR I_S(second)),  I_other = 1 - I_S.
// When the other side W wins, some pair has both children winning for W and
// the two child cells hang off one marked vertex (the Bing double of the
// core). When S wins, the surface is surgered along one winning basis curve
// per pair, giving a planar body with 1 + 2g boundary circles, and two
// copies of each chosen child cell are joined at that unmarked cone point.

#include "abslice/bingcell.hpp"
#include "abslice/modeltree.hpp"
#include "abslice/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace abslice::lambda {

using model::DecompTree;
using model::Side;

struct LambdaValue {
  int i_a = 0;
  int i_b = 0;

  int of(Side s) const { return s == Side::A ? i_a : i_b; }
  friend bool operator==(const LambdaValue&, const LambdaValue&) = default;
};

/// Throws std::invalid_argument for an invalid tree.
LambdaValue eval_lambda(const DecompTree& t);

/// I_lambda of side s alone.
int lambda_of(const DecompTree& t, Side s);

/// One decision taken while building a witness. `marked` stages pick a single
/// pair (1-based); unmarked stages pick a child (1 or 2) for every pair.
struct Choice {
  std::string position;
  Side stage_owner = Side::A;
  Side winner = Side::A;
  bool marked = false;
  std::vector<int> picks;

  friend bool operator==(const Choice&, const Choice&) = default;
};

struct Witness {
  Side side = Side::A;
  cell::CellShape shape;
  cell::BingCellTree tree;
  std::vector<Choice> choices;
};

/// Deterministic witness: first qualifying pair, first winning child.
Witness witness(const DecompTree& t);

Side robust_side(const DecompTree& t);

struct SideReport {
  LambdaValue value;
  Side robust = Side::A;
  Side witness_side = Side::B;
  cell::BingCellTree witness;
  std::vector<Choice> choices;
};

SideReport side_report(const DecompTree& t);

/// Number of distinct witness constructions over all valid choice logs.
word::Integer count_witnesses(const DecompTree& t);

/// Every witness, in lexicographic choice order (the first equals witness()).
/// Throws std::length_error when more than `limit` would be produced.
std::vector<cell::BingCellTree> all_witnesses(const DecompTree& t, std::size_t limit = 100000);

/// Marked vertices the realized construction produces: one per stage where
/// the non-owner wins, counted once per copy of the enclosing cell.
int realized_marked_count(const DecompTree& t);

}  // namespace abslice::lambda
