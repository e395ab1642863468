#pragma once

// Random generators and brute-force oracles shared by the test binaries.
// Oracles here deliberately avoid the library code paths they are used to
// check.

#include "abslice/bingcell.hpp"
#include "abslice/grope.hpp"
#include "abslice/lambda.hpp"
#include "abslice/linkhom.hpp"
#include "abslice/modeltree.hpp"
#include "abslice/word.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace abslice::testing {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("ABSLICE_SEED")) return std::strtoull(s, nullptr, 10);
  return 20061009;
}

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Words ---------------------------------------------------------------------

inline word::FreeWord random_word(Rng& rng, int n, int max_len) {
  const int len = uniform(rng, 0, max_len);
  std::vector<word::Letter> letters;
  for (int k = 0; k < len; ++k) letters.push_back({uniform(rng, 1, n), coin(rng, 0.5) ? 1 : -1});
  return word::FreeWord(std::move(letters));
}

inline word::ReducedPoly random_poly(Rng& rng, int n, int terms) {
  word::ReducedPoly p;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(uniform(rng, 0, n));
    p.add(pool, uniform(rng, -3, 3));
  }
  return p;
}

/// Coefficient of X_{m_1}...X_{m_k} in the reduced Magnus expansion of w,
/// computed by counting signed occurrences of (m_1, ..., m_k) as a scattered
/// subsequence of the letters of w.
inline word::Integer magnus_coefficient_oracle(const word::FreeWord& w, const std::vector<int>& mono) {
  std::vector<word::Integer> ways(mono.size() + 1, 0);
  ways[0] = 1;
  for (const auto& l : w.letters()) {
    for (std::size_t k = mono.size(); k >= 1; --k) {
      if (mono[k - 1] == l.gen) ways[k] += l.sign * ways[k - 1];
    }
  }
  return ways[mono.size()];
}

inline void all_square_free(int n, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int g = 1; g <= n; ++g) {
    if (std::find(cur.begin(), cur.end(), g) != cur.end()) continue;
    cur.push_back(g);
    all_square_free(n, max_len, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> square_free_monomials(int n, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  all_square_free(n, max_len, cur, out);
  return out;
}

/// Full reduced expansion through the subsequence oracle.
inline std::map<std::vector<int>, word::Integer> magnus_oracle(const word::FreeWord& w, int n) {
  std::map<std::vector<int>, word::Integer> out;
  for (const auto& m : square_free_monomials(n, n)) {
    auto c = magnus_coefficient_oracle(w, m);
    if (c != 0) out.emplace(m, c);
  }
  return out;
}

// Model decompositions ------------------------------------------------------

/// Random valid model with height <= max_height and genus <= max_genus.
inline model::DecompTree random_decomp(Rng& rng, int max_height, int max_genus, double leaf_bias = 0.45) {
  using model::DecompTree;
  using model::Side;
  const Side owner = coin(rng, 0.5) ? Side::A : Side::B;
  if (max_height == 0 || coin(rng, leaf_bias)) return DecompTree::leaf(owner);
  const int g = uniform(rng, 1, max_genus);
  std::vector<std::pair<DecompTree, DecompTree>> pairs;
  for (int i = 0; i < g; ++i) {
    pairs.emplace_back(random_decomp(rng, max_height - 1, max_genus, leaf_bias + 0.1),
                       random_decomp(rng, max_height - 1, max_genus, leaf_bias + 0.1));
  }
  return DecompTree::stage(owner, std::move(pairs));
}

/// Random model whose side `s` spans a grope: every stage owned by s and
/// every leaf owned by the other side.
inline model::DecompTree random_pure_grope_decomp(Rng& rng, model::Side s, int max_height, int max_genus) {
  using model::DecompTree;
  if (max_height == 0 || coin(rng, 0.4)) return DecompTree::leaf(model::opposite(s));
  const int g = uniform(rng, 1, max_genus);
  std::vector<std::pair<DecompTree, DecompTree>> pairs;
  for (int i = 0; i < g; ++i) {
    pairs.emplace_back(random_pure_grope_decomp(rng, s, max_height - 1, max_genus),
                       random_pure_grope_decomp(rng, s, max_height - 1, max_genus));
  }
  return DecompTree::stage(s, std::move(pairs));
}

/// Whether the attaching curve of side x bounds a Bing cell, read directly off
/// the two constructions: a pair of winning children under one Bing double
/// when x is the complement of the surface, or a winning basis curve in every
/// symplectic pair when x owns the surface. Computed for each side on its own,
/// so the sum of the two values is a real check.
inline bool bounds_cell_oracle(const model::DecompTree& t, model::Side x) {
  if (t.is_leaf()) return t.owner == x;
  if (t.owner != x) {
    for (int i = 0; i < t.pair_count(); ++i)
      if (bounds_cell_oracle(t.first(i), x) && bounds_cell_oracle(t.second(i), x)) return true;
    return false;
  }
  for (int i = 0; i < t.pair_count(); ++i)
    if (!bounds_cell_oracle(t.first(i), x) && !bounds_cell_oracle(t.second(i), x)) return false;
  return true;
}

/// Exhaustive witness count: every stage independently takes any choice
/// (a pair for complement stages, a child per pair for surface stages); a
/// global assignment is valid when every realized choice lands on winning
/// children. Distinct realized constructions are counted once.
inline std::size_t witness_count_oracle(const model::DecompTree& t) {
  using model::DecompTree;
  using model::Side;
  const Side w = bounds_cell_oracle(t, Side::A) ? Side::A : Side::B;

  std::vector<const DecompTree*> stages;
  auto collect = [&](auto&& self, const DecompTree& d) -> void {
    if (d.is_leaf()) return;
    stages.push_back(&d);
    for (const auto& c : d.children) self(self, c);
  };
  collect(collect, t);

  // Option count per stage.
  std::vector<std::size_t> radix;
  for (const auto* s : stages) {
    radix.push_back(s->owner != w ? static_cast<std::size_t>(s->pair_count())
                                  : (std::size_t{1} << s->pair_count()));
  }

  std::set<std::string> realized;
  std::vector<std::size_t> digit(stages.size(), 0);
  auto index_of = [&](const DecompTree* d) {
    return static_cast<std::size_t>(std::find(stages.begin(), stages.end(), d) - stages.begin());
  };
  while (true) {
    bool ok = true;
    std::string trace;
    auto walk = [&](auto&& self, const DecompTree& d) -> void {
      if (!ok) return;
      if (d.is_leaf()) {
        if (d.owner != w) ok = false;
        trace += 'L';
        return;
      }
      const std::size_t k = index_of(&d);
      if (d.owner != w) {
        const int i = static_cast<int>(digit[k]);
        trace += "M" + std::to_string(i) + "(";
        self(self, d.first(i));
        self(self, d.second(i));
        trace += ')';
        return;
      }
      trace += "U(";
      for (int i = 0; i < d.pair_count(); ++i) {
        const int which = (digit[k] >> i) & 1;
        trace += std::to_string(which);
        self(self, d.children[2 * i + which]);
      }
      trace += ')';
    };
    walk(walk, t);
    if (ok) realized.insert(trace);

    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return realized.size();
}

// Gropes --------------------------------------------------------------------

inline grope::GropeTree random_grope(Rng& rng, int max_depth, int max_genus, bool multiplicities) {
  const int copies = multiplicities ? uniform(rng, 1, 3) : 1;
  if (max_depth == 0 || coin(rng, 0.4)) return grope::GropeTree::circle(copies);
  const int g = uniform(rng, 1, max_genus);
  std::vector<std::pair<grope::GropeTree, grope::GropeTree>> pairs;
  for (int i = 0; i < g; ++i) {
    pairs.emplace_back(random_grope(rng, max_depth - 1, max_genus, multiplicities),
                       random_grope(rng, max_depth - 1, max_genus, multiplicities));
  }
  return grope::GropeTree::surface(std::move(pairs), copies);
}

// Bing cells ----------------------------------------------------------------

inline cell::CellShape random_shape(Rng& rng, int depth, bool top = true) {
  using cell::CellShape;
  if (!top && (depth == 0 || coin(rng, 0.35))) return CellShape::disk();
  std::vector<CellShape> parts;
  const int k = uniform(rng, 0, 3);
  for (int i = 0; i < k; ++i) {
    if (depth > 0 && coin(rng, 0.7)) {
      const int comps = coin(rng, 0.8) ? 2 : 4;
      std::vector<CellShape> c;
      for (int j = 0; j < comps; ++j) c.push_back(random_shape(rng, depth - 1, false));
      parts.push_back(CellShape::link(std::move(c)));
    } else {
      parts.push_back(random_shape(rng, depth - 1, false));
    }
  }
  return CellShape::body(std::move(parts));
}

/// Reference first-common-ancestor check by walking explicit root paths.
inline bool allowed_by_paths(const cell::BingCellTree& t, int a, int b) {
  if (a == b) return true;
  std::vector<int> pa, pb;
  for (int v = a; v >= 0; v = t.vertices()[v].parent) pa.insert(pa.begin(), v);
  for (int v = b; v >= 0; v = t.vertices()[v].parent) pb.insert(pb.begin(), v);
  std::size_t k = 0;
  while (k < pa.size() && k < pb.size() && pa[k] == pb[k]) ++k;
  const int top = pa[k - 1];  // highest vertex of the a-b geodesic
  return t.vertices()[top].kind != cell::VertexKind::Link;
}

}  // namespace abslice::testing
