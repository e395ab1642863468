#include "abslice/lambda.hpp"

#include <stdexcept>

namespace abslice::lambda {

using cell::CellShape;

namespace {

std::string child_position(const std::string& base, int pair, int which) {
  std::string p = std::to_string(pair + 1) + "." + std::to_string(which + 1);
  return base == "core" ? p : base + "/" + p;
}

int value_for(const DecompTree& t, Side s) {
  if (t.is_leaf()) return t.owner == s ? 1 : 0;
  // Value for the surface owner; the complement takes the other bit.
  int owner_value = 1;
  for (int i = 0; i < t.pair_count() && owner_value; ++i) {
    owner_value = value_for(t.first(i), t.owner) || value_for(t.second(i), t.owner);
  }
  return t.owner == s ? owner_value : 1 - owner_value;
}

int first_marked_pair(const DecompTree& t, Side w) {
  for (int i = 0; i < t.pair_count(); ++i) {
    if (value_for(t.first(i), w) && value_for(t.second(i), w)) return i;
  }
  return -1;
}

CellShape build_shape(const DecompTree& t, Side w, const std::string& pos, std::vector<Choice>& log) {
  if (t.is_leaf()) return CellShape::disk();

  if (t.owner != w) {
    const int i = first_marked_pair(t, w);
    if (i < 0) throw std::logic_error("no pair carries a Bing cell for the winning side");
    log.push_back({pos, t.owner, w, true, {i + 1}});
    auto a = build_shape(t.first(i), w, child_position(pos, i, 0), log);
    auto b = build_shape(t.second(i), w, child_position(pos, i, 1), log);
    return CellShape::body({CellShape::link({std::move(a), std::move(b)})});
  }

  Choice choice{pos, t.owner, w, false, {}};
  const auto at = log.size();
  log.push_back(choice);
  std::vector<CellShape> parts;
  parts.reserve(2 * t.pair_count());
  for (int i = 0; i < t.pair_count(); ++i) {
    const int which = value_for(t.first(i), w) ? 0 : 1;
    if (!value_for(t.children[2 * i + which], w)) {
      throw std::logic_error("pair without a winning child on the surface side");
    }
    log[at].picks.push_back(which + 1);
    auto sub = build_shape(t.children[2 * i + which], w, child_position(pos, i, which), log);
    parts.push_back(sub);
    parts.push_back(std::move(sub));
  }
  return CellShape::body(std::move(parts));
}

word::Integer count_for(const DecompTree& t, Side w) {
  if (t.is_leaf()) return t.owner == w ? 1 : 0;
  if (t.owner != w) {
    word::Integer total = 0;
    for (int i = 0; i < t.pair_count(); ++i) total += count_for(t.first(i), w) * count_for(t.second(i), w);
    return total;
  }
  word::Integer total = 1;
  for (int i = 0; i < t.pair_count(); ++i) total *= count_for(t.first(i), w) + count_for(t.second(i), w);
  return total;
}

std::vector<CellShape> enumerate(const DecompTree& t, Side w) {
  if (t.is_leaf()) {
    if (t.owner == w) return {CellShape::disk()};
    return {};
  }
  std::vector<CellShape> out;
  if (t.owner != w) {
    for (int i = 0; i < t.pair_count(); ++i) {
      const auto firsts = enumerate(t.first(i), w);
      if (firsts.empty()) continue;
      const auto seconds = enumerate(t.second(i), w);
      for (const auto& a : firsts)
        for (const auto& b : seconds) out.push_back(CellShape::body({CellShape::link({a, b})}));
    }
    return out;
  }
  // Options per pair (first child's cells before the second child's), then
  // the cartesian product with pair 1 most significant.
  std::vector<std::vector<CellShape>> options(t.pair_count());
  for (int i = 0; i < t.pair_count(); ++i) {
    options[i] = enumerate(t.first(i), w);
    auto more = enumerate(t.second(i), w);
    options[i].insert(options[i].end(), more.begin(), more.end());
    if (options[i].empty()) return {};
  }
  std::vector<std::size_t> idx(options.size(), 0);
  while (true) {
    std::vector<CellShape> parts;
    for (std::size_t i = 0; i < options.size(); ++i) {
      parts.push_back(options[i][idx[i]]);
      parts.push_back(options[i][idx[i]]);
    }
    out.push_back(CellShape::body(std::move(parts)));
    std::size_t k = options.size();
    while (k > 0) {
      --k;
      if (++idx[k] < options[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

int marked_for(const DecompTree& t, Side w) {
  if (t.is_leaf()) return 0;
  if (t.owner != w) {
    const int i = first_marked_pair(t, w);
    return 1 + marked_for(t.first(i), w) + marked_for(t.second(i), w);
  }
  int total = 0;
  for (int i = 0; i < t.pair_count(); ++i) {
    const int which = value_for(t.first(i), w) ? 0 : 1;
    total += 2 * marked_for(t.children[2 * i + which], w);
  }
  return total;
}

Side winning_side(const DecompTree& t) { return value_for(t, Side::A) ? Side::A : Side::B; }

}  // namespace

LambdaValue eval_lambda(const DecompTree& t) {
  model::require_valid(t);
  const int a = value_for(t, Side::A);
  return {a, 1 - a};
}

int lambda_of(const DecompTree& t, Side s) {
  model::require_valid(t);
  return value_for(t, s);
}

Witness witness(const DecompTree& t) {
  model::require_valid(t);
  Witness w;
  w.side = winning_side(t);
  w.shape = build_shape(t, w.side, "core", w.choices);
  w.tree = cell::build(w.shape);
  return w;
}

Side robust_side(const DecompTree& t) {
  model::require_valid(t);
  return model::opposite(winning_side(t));
}

SideReport side_report(const DecompTree& t) {
  auto w = witness(t);
  SideReport r;
  r.value = {w.side == Side::A ? 1 : 0, w.side == Side::B ? 1 : 0};
  r.witness_side = w.side;
  r.robust = model::opposite(w.side);
  r.witness = std::move(w.tree);
  r.choices = std::move(w.choices);
  return r;
}

word::Integer count_witnesses(const DecompTree& t) {
  model::require_valid(t);
  return count_for(t, winning_side(t));
}

std::vector<cell::BingCellTree> all_witnesses(const DecompTree& t, std::size_t limit) {
  if (count_witnesses(t) > limit) {
    throw std::length_error("more than " + std::to_string(limit) + " witnesses");
  }
  std::vector<cell::BingCellTree> out;
  for (const auto& s : enumerate(t, winning_side(t))) out.push_back(cell::build(s));
  return out;
}

int realized_marked_count(const DecompTree& t) {
  model::require_valid(t);
  return marked_for(t, winning_side(t));
}

}  // namespace abslice::lambda
