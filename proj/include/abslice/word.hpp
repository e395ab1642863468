#pragma once

// Free-group words on link meridians and the reduced Magnus expansion.
//
// A letter is a signed generator index: +i stands for the meridian m_i and
// -i for its inverse. Indices are 1-based.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace abslice::word {

using Integer = boost::multiprecision::cpp_int;

struct Letter {
  int gen = 1;   // 1-based generator index
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  int encoded() const { return sign * gen; }
  static Letter decode(int signed_index);

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Builds a word from signed indices (+i for m_i, -i for its inverse).
  /// Zero entries are rejected.
  static FreeWord from_signed(std::span<const int> signed_indices);
  static FreeWord generator(int gen, int sign = 1) { return FreeWord({Letter{gen, sign}}); }

  std::vector<int> to_signed() const;

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;  // concatenation, then reduction

  /// Sum of the signs of all occurrences of generator `gen`.
  int exponent_sum(int gen) const;

  bool is_reduced() const;

  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce(const FreeWord& w);
FreeWord commutator(const FreeWord& a, const FreeWord& b);

/// Homomorphic image of `w`; generators absent from `images` map to themselves.
FreeWord substitute(const FreeWord& w, const std::map<int, FreeWord>& images);

/// Integer polynomial in noncommuting variables X_1..X_n on square-free
/// monomials. Multiplying two monomials that share an index gives zero.
class ReducedPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Integer>;

  ReducedPoly() = default;
  static ReducedPoly one();
  static ReducedPoly constant(Integer c);
  /// 1 + sign * X_gen
  static ReducedPoly unit_step(int gen, int sign);

  const Terms& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;

  /// Adds c to the coefficient of m. Monomials with a repeated index are
  /// rejected with std::invalid_argument.
  void add(const Monomial& m, const Integer& c);

  /// Right multiplication by (1 + sign * X_gen).
  void mul_unit_step(int gen, int sign);

  bool is_one() const;
  std::string to_string() const;

  friend bool operator==(const ReducedPoly&, const ReducedPoly&) = default;

 private:
  Terms terms_;
};

bool is_square_free(const ReducedPoly::Monomial& m);

ReducedPoly poly_mul(const ReducedPoly& p, const ReducedPoly& q);
ReducedPoly operator+(const ReducedPoly& p, const ReducedPoly& q);
ReducedPoly operator-(const ReducedPoly& p, const ReducedPoly& q);

/// Reduced Magnus expansion: m_i -> 1 + X_i, m_i^{-1} -> 1 - X_i.
/// Throws std::out_of_range if a generator exceeds n.
ReducedPoly magnus_reduced(const FreeWord& w, int n);

}  // namespace abslice::word
