#pragma once

// Links presented by their longitudes in the free group on meridians, the
// distinct-index Milnor invariants, and Bing doubling.

#include "abslice/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abslice::link {

using word::FreeWord;
using word::Integer;

struct LinkPresentation {
  int n = 0;
  std::vector<FreeWord> longitudes;
  std::vector<std::string> labels;

  /// Throws std::invalid_argument when the longitude count differs from n or
  /// a longitude mentions a generator outside 1..n.
  void check() const;

  friend bool operator==(const LinkPresentation&, const LinkPresentation&) = default;
};

/// Non-fatal findings, e.g. an asymmetric linking matrix.
std::vector<std::string> diagnostics(const LinkPresentation& L);

using IndexSeq = std::vector<int>;

struct MuCertificate {
  IndexSeq index_seq;  // last entry selects the longitude
  Integer value;
  int order = 0;
  bool first_non_vanishing = false;

  friend bool operator==(const MuCertificate&, const MuCertificate&) = default;
};

LinkPresentation unlink(int n);
LinkPresentation hopf();
LinkPresentation borromean();
/// Iterated Bing doubles of the Hopf link, doubling the listed components in order.
LinkPresentation bing_tower(const std::vector<int>& schedule);

/// Resolves "unlink:N", "hopf", "borromean", "bing:i,j,..." (a Bing tower over
/// the Hopf link). Throws std::invalid_argument on unknown or malformed names.
LinkPresentation catalog(const std::string& name);

/// Coefficient of X_{i_1}...X_{i_k} in the reduced Magnus expansion of the
/// longitude l_j, where I = (i_1, ..., i_k, j).
Integer mu_distinct(const LinkPresentation& L, const IndexSeq& I);

/// All nonzero distinct-index invariants of the lowest order at which any is
/// nonzero, ordered by longitude then index sequence. Empty optional when all
/// vanish through order n.
std::optional<std::vector<MuCertificate>> first_non_vanishing_mu(const LinkPresentation& L);

/// A certificate that L is not link-homotopic to the unlink, if one exists.
/// No certificate means every distinct-index invariant vanishes, which by
/// Milnor's classification makes L homotopically trivial.
std::optional<MuCertificate> homotopic_essential_cert(const LinkPresentation& L);

/// Replaces component i by its untwisted Bing double. The two new components
/// take indices i and n+1.
LinkPresentation bing_double(const LinkPresentation& L, int i);

/// Entry (i, j) is the exponent sum of m_{j+1} in l_{i+1}; diagonal zero.
std::vector<std::vector<int>> linking_matrix(const LinkPresentation& L);

/// Adds an untwisted parallel copy of every component (copy of i gets index n+i).
LinkPresentation parallel_copy_link(const LinkPresentation& L);

}  // namespace abslice::link
