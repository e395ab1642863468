#include "abslice/modeltree.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace abslice::model {

char to_char(Side s) { return s == Side::A ? 'A' : 'B'; }

Side side_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Side::A;
  if (s == "B" || s == "b") return Side::B;
  throw std::invalid_argument("side must be A or B, got '" + s + "'");
}

DecompTree DecompTree::leaf(Side owner) { return {Kind::Leaf, owner, 0, {}}; }

DecompTree DecompTree::stage(Side owner, std::vector<std::pair<DecompTree, DecompTree>> pairs) {
  DecompTree t{Kind::Stage, owner, static_cast<int>(pairs.size()), {}};
  t.children.reserve(2 * pairs.size());
  for (auto& [x, y] : pairs) {
    t.children.push_back(std::move(x));
    t.children.push_back(std::move(y));
  }
  return t;
}

std::string DecompTree::to_string() const {
  std::string s;
  if (is_leaf()) {
    s = "Leaf(";
    s += to_char(owner);
    s += ')';
    return s;
  }
  s = "Stage(";
  s += to_char(owner);
  s += ',' + std::to_string(genus) + ",[";
  for (int i = 0; i < pair_count(); ++i) {
    if (i) s += ',';
    s += '(' + first(i).to_string() + ',' + second(i).to_string() + ')';
  }
  return s + "])";
}

namespace {

void validate_into(const DecompTree& t, const std::string& where, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    if (!t.children.empty()) out.push_back(where + ": leaf with children");
    return;
  }
  if (t.genus < 1) out.push_back(where + ": genus >= 1 required, got " + std::to_string(t.genus));
  if (t.children.size() != 2 * static_cast<std::size_t>(std::max(t.genus, 0))) {
    out.push_back(where + ": genus " + std::to_string(t.genus) + " needs " +
                  std::to_string(2 * std::max(t.genus, 0)) + " children, got " +
                  std::to_string(t.children.size()));
  }
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    validate_into(t.children[k],
                  where + "/" + std::to_string(k / 2 + 1) + "." + std::to_string(k % 2 + 1), out);
  }
}

std::string child_position(const std::string& base, int pair, int which) {
  std::string p = std::to_string(pair + 1) + "." + std::to_string(which + 1);
  return base == "core" ? p : base + "/" + p;
}

void collect_structure(const DecompTree& t, const std::string& pos, Side s, HandleStructure& h) {
  if (t.is_leaf()) {
    if (t.owner == s) {
      h.two_handles.push_back({pos, 0});
    } else {
      h.dotted_circles.push_back(pos);
    }
    return;
  }
  h.pattern.push_back({pos, t.owner, t.genus});
  for (int i = 0; i < t.pair_count(); ++i) {
    collect_structure(t.first(i), child_position(pos, i, 0), s, h);
    collect_structure(t.second(i), child_position(pos, i, 1), s, h);
  }
}

int parse_positive(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw std::invalid_argument("expected a positive genus, got '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<std::string> validate(const DecompTree& t) {
  std::vector<std::string> out;
  validate_into(t, "root", out);
  return out;
}

void require_valid(const DecompTree& t) {
  auto problems = validate(t);
  if (!problems.empty()) throw std::invalid_argument("invalid model decomposition: " + problems.front());
}

int height(const DecompTree& t) {
  if (t.is_leaf()) return 0;
  int h = 0;
  for (const auto& c : t.children) h = std::max(h, height(c));
  return 1 + h;
}

int leaf_count(const DecompTree& t) {
  if (t.is_leaf()) return 1;
  int n = 0;
  for (const auto& c : t.children) n += leaf_count(c);
  return n;
}

int leaf_count(const DecompTree& t, Side owner) {
  if (t.is_leaf()) return t.owner == owner ? 1 : 0;
  int n = 0;
  for (const auto& c : t.children) n += leaf_count(c, owner);
  return n;
}

DecompTree swap_sides(const DecompTree& t) {
  DecompTree out = t;
  out.owner = opposite(t.owner);
  for (auto& c : out.children) c = swap_sides(c);
  return out;
}

DecompTree fixture(const std::string& name) {
  using T = DecompTree;
  const auto LA = T::leaf(Side::A);
  const auto LB = T::leaf(Side::B);
  // Height-1 model with an A-side genus-1 surface; its complement is the
  // pair of 2-handles on the Bing double of the core.
  const auto a1b1_1 = T::stage(Side::A, {{LB, LB}});

  if (name == "a1b1") return a1b1_1;
  if (name.rfind("a1b1:", 0) == 0) {
    const int g = parse_positive(name.substr(5));
    std::vector<std::pair<T, T>> pairs(g, {LB, LB});
    return T::stage(Side::A, std::move(pairs));
  }
  // alpha_1 bounds a further surface in H_1; beta_2 bounds a disk.
  if (name == "a2b2") return T::stage(Side::A, {{a1b1_1, LB}});
  // beta_1 bounds a surface in H_1, so A gets the Bing-doubled 2-handles there.
  if (name == "a2b2prime") return T::stage(Side::A, {{T::stage(Side::B, {{LA, LA}}), LB}});
  // Height 3: the two choices iterated once more. These are reconstructions
  // of schematic figures, not read off from curve-level data.
  if (name == "a3b3") return T::stage(Side::A, {{T::stage(Side::A, {{a1b1_1, LB}}), LB}});
  if (name == "a3b3prime") {
    return T::stage(Side::A, {{T::stage(Side::B, {{a1b1_1, LA}}), LB}});
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"a1b1:g", "a2b2", "a2b2prime", "a3b3", "a3b3prime"};
}

HandleStructure handle_structure(const DecompTree& t, Side s) {
  require_valid(t);
  HandleStructure h;
  h.side = s;
  collect_structure(t, "core", s, h);
  return h;
}

HandleStructure dualize(const HandleStructure& h) {
  HandleStructure out;
  out.side = opposite(h.side);
  out.pattern = h.pattern;
  out.dotted_circles.reserve(h.two_handles.size());
  for (const auto& th : h.two_handles) out.dotted_circles.push_back(th.position);
  out.two_handles.reserve(h.dotted_circles.size());
  for (const auto& d : h.dotted_circles) out.two_handles.push_back({d, 0});
  return out;
}

HandleCounts handle_counts(const DecompTree& t) {
  require_valid(t);
  const int a = leaf_count(t, Side::A);
  const int b = leaf_count(t, Side::B);
  // 1-handles of either side are standard 2-handles of the complement removed
  // from a collar.
  return {a, b, b, a};
}

}  // namespace abslice::model
