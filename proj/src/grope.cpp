#include "abslice/grope.hpp"

#include <algorithm>
#include <limits>

namespace abslice::grope {

GropeTree GropeTree::surface(std::vector<std::pair<GropeTree, GropeTree>> pairs, int copies) {
  GropeTree t{Kind::Surface, static_cast<int>(pairs.size()), copies, {}};
  t.attachments.reserve(2 * pairs.size());
  for (auto& [a, b] : pairs) {
    t.attachments.push_back(std::move(a));
    t.attachments.push_back(std::move(b));
  }
  return t;
}

std::string GropeTree::to_string() const {
  std::string s = is_circle() ? "Circle" : "Surface(" + std::to_string(genus) + ",[";
  if (!is_circle()) {
    for (int i = 0; i < pair_count(); ++i) {
      if (i) s += ',';
      s += '(' + on_alpha(i).to_string() + ',' + on_beta(i).to_string() + ')';
    }
    s += "])";
  }
  if (copies != 1) s += "x" + std::to_string(copies);
  return s;
}

std::vector<std::string> validate(const GropeTree& t) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const GropeTree& g, const std::string& where) -> void {
    if (g.copies < 1) out.push_back(where + ": copies must be >= 1");
    if (g.is_circle()) {
      if (!g.attachments.empty()) out.push_back(where + ": circle with attachments");
      return;
    }
    if (g.genus < 1) out.push_back(where + ": genus >= 1 required");
    if (g.attachments.size() != 2 * static_cast<std::size_t>(std::max(g.genus, 0))) {
      out.push_back(where + ": genus " + std::to_string(g.genus) + " needs " +
                    std::to_string(2 * std::max(g.genus, 0)) + " attachments");
    }
    for (std::size_t k = 0; k < g.attachments.size(); ++k) {
      self(self, g.attachments[k],
           where + "/" + std::to_string(k / 2 + 1) + (k % 2 ? "b" : "a"));
    }
  };
  walk(walk, t, "root");
  return out;
}

int grope_class(const GropeTree& t) {
  if (t.is_circle()) return 1;
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < t.pair_count(); ++i) {
    best = std::min(best, grope_class(t.on_alpha(i)) + grope_class(t.on_beta(i)));
  }
  return best;
}

namespace {

std::optional<GropeTree> side_grope(const model::DecompTree& t, model::Side s) {
  if (t.is_leaf()) {
    if (t.owner == s) return std::nullopt;  // capped by a disk
    return GropeTree::circle();
  }
  if (t.owner != s) return std::nullopt;
  std::vector<std::pair<GropeTree, GropeTree>> pairs;
  for (int i = 0; i < t.pair_count(); ++i) {
    auto a = side_grope(t.first(i), s);
    auto b = side_grope(t.second(i), s);
    if (!a || !b) return std::nullopt;
    pairs.emplace_back(std::move(*a), std::move(*b));
  }
  return GropeTree::surface(std::move(pairs));
}

}  // namespace

std::optional<GropeTree> from_decomp_side(const model::DecompTree& t, model::Side s) {
  model::require_valid(t);
  if (t.is_leaf()) return std::nullopt;
  return side_grope(t, s);
}

cell::CellShape grope_complement_shape(const GropeTree& t) {
  using cell::CellShape;
  if (t.is_circle()) return CellShape::disk();
  std::vector<CellShape> parts;
  parts.reserve(static_cast<std::size_t>(t.copies) * t.pair_count());
  for (int c = 0; c < t.copies; ++c) {
    for (int i = 0; i < t.pair_count(); ++i) {
      parts.push_back(CellShape::link(
          {grope_complement_shape(t.on_alpha(i)), grope_complement_shape(t.on_beta(i))}));
    }
  }
  return CellShape::body(std::move(parts));
}

cell::BingCellTree grope_complement(const GropeTree& t) {
  return cell::build(grope_complement_shape(t));
}

}  // namespace abslice::grope
