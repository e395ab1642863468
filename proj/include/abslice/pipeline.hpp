#pragma once

// Certificate bundle for "L is not A-B slice with these model decompositions".
//
// Each model decomposition has exactly one side whose attaching curve bounds
// a Bing cell. If L were A-B slice with these models, those curves would form
// a copy of L bounding disjoint Bing cells in D^4, forcing L to be
// homotopically trivial. A nonzero first-non-vanishing distinct-index Milnor
// invariant rules that out.

#include "abslice/lambda.hpp"
#include "abslice/linkhom.hpp"
#include "abslice/modeltree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abslice::pipeline {

struct Instance {
  link::LinkPresentation link;
  std::vector<model::DecompTree> decompositions;
};

enum class Conclusion { Obstructed, Inconclusive };

std::string to_string(Conclusion c);

struct Verdict {
  std::optional<link::MuCertificate> essentialness;
  std::vector<lambda::SideReport> per_decomposition;
  Conclusion conclusion = Conclusion::Inconclusive;
  // Components of D(L), the link with an untwisted parallel copy added.
  int parallel_copy_components = 0;
  std::vector<std::string> narrative;
};

/// Throws std::invalid_argument when the counts differ or a tree is invalid.
Verdict check_obstruction(const Instance& inst);

/// Re-checks a verdict against its instance from the certificates alone:
/// the Milnor invariant is recomputed at the stated index sequence, lower
/// orders are confirmed to vanish, every witness is re-validated and every
/// complementarity equation is re-read.
bool verify_verdict(const Verdict& v, const Instance& inst);

/// Same as verify_verdict but reports every failed check.
std::vector<std::string> verify_verdict_problems(const Verdict& v, const Instance& inst);

}  // namespace abslice::pipeline
