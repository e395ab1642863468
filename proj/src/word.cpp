#include "abslice/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abslice::word {

Letter Letter::decode(int signed_index) {
  if (signed_index == 0) {
    throw std::invalid_argument("letter index 0 is not a generator");
  }
  return signed_index > 0 ? Letter{signed_index, 1} : Letter{-signed_index, -1};
}

FreeWord FreeWord::from_signed(std::span<const int> signed_indices) {
  std::vector<Letter> letters;
  letters.reserve(signed_indices.size());
  for (int s : signed_indices) letters.push_back(Letter::decode(s));
  return FreeWord(std::move(letters));
}

std::vector<int> FreeWord::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.encoded());
  return out;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(FreeWord(std::move(out)));
}

int FreeWord::exponent_sum(int gen) const {
  int sum = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) sum += l.sign;
  return sum;
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  return true;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'm' << letters_[i].gen;
    if (letters_[i].sign < 0) os << "^-1";
  }
  return os.str();
}

FreeWord reduce(const FreeWord& w) {
  // Single left-to-right pass with a stack; free reduction is confluent.
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> out;
  out.reserve(2 * (a.size() + b.size()));
  auto append = [&out](const FreeWord& x) {
    out.insert(out.end(), x.letters().begin(), x.letters().end());
  };
  append(a);
  append(b);
  append(a.inverse());
  append(b.inverse());
  return reduce(FreeWord(std::move(out)));
}

FreeWord substitute(const FreeWord& w, const std::map<int, FreeWord>& images) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      out.push_back(l);
      continue;
    }
    const FreeWord image = l.sign > 0 ? it->second : it->second.inverse();
    out.insert(out.end(), image.letters().begin(), image.letters().end());
  }
  return reduce(FreeWord(std::move(out)));
}

// ---------------------------------------------------------------------------

bool is_square_free(const ReducedPoly::Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i] == m[j]) return false;
  return true;
}

ReducedPoly ReducedPoly::one() { return constant(1); }

ReducedPoly ReducedPoly::constant(Integer c) {
  ReducedPoly p;
  p.add({}, c);
  return p;
}

ReducedPoly ReducedPoly::unit_step(int gen, int sign) {
  ReducedPoly p = one();
  p.add({gen}, Integer(sign));
  return p;
}

Integer ReducedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ReducedPoly::add(const Monomial& m, const Integer& c) {
  if (!is_square_free(m)) {
    throw std::invalid_argument("monomial with repeated index in reduced algebra");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ReducedPoly::mul_unit_step(int gen, int sign) {
  // p * (1 + s X) = p + s * (p X); terms already containing gen die.
  std::vector<std::pair<Monomial, Integer>> extra;
  for (const auto& [m, c] : terms_) {
    if (std::find(m.begin(), m.end(), gen) != m.end()) continue;
    Monomial next = m;
    next.push_back(gen);
    extra.emplace_back(std::move(next), sign > 0 ? c : Integer(-c));
  }
  for (auto& [m, c] : extra) add(m, c);
}

bool ReducedPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

std::string ReducedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.empty() || mag != 1) os << mag;
    for (int g : m) os << 'X' << g;
  }
  return os.str();
}

ReducedPoly poly_mul(const ReducedPoly& p, const ReducedPoly& q) {
  ReducedPoly out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      bool clash = false;
      for (int g : mq) {
        if (std::find(mp.begin(), mp.end(), g) != mp.end()) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      ReducedPoly::Monomial m = mp;
      m.insert(m.end(), mq.begin(), mq.end());
      out.add(m, cp * cq);
    }
  }
  return out;
}

ReducedPoly operator+(const ReducedPoly& p, const ReducedPoly& q) {
  ReducedPoly out = p;
  for (const auto& [m, c] : q.terms()) out.add(m, c);
  return out;
}

ReducedPoly operator-(const ReducedPoly& p, const ReducedPoly& q) {
  ReducedPoly out = p;
  for (const auto& [m, c] : q.terms()) out.add(m, -c);
  return out;
}

ReducedPoly magnus_reduced(const FreeWord& w, int n) {
  ReducedPoly p = ReducedPoly::one();
  for (const auto& l : w.letters()) {
    if (l.gen < 1 || l.gen > n) {
      throw std::out_of_range("generator m" + std::to_string(l.gen) +
                              " outside 1.." + std::to_string(n));
    }
    p.mul_unit_step(l.gen, l.sign);
  }
  return p;
}

}  // namespace abslice::word
