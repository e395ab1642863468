// Acceptance run: one line per criterion, nonzero exit if any fails.
// Pass criterion numbers as arguments to run a subset.

#include "abslice/cli.hpp"
#include "abslice/pipeline.hpp"

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace abslice;
using model::DecompTree;
using model::Side;
using model::fixture;
using testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

constexpr int kRandomTrees = 10000;

std::vector<DecompTree> population() {
  Rng rng(testing::seed());
  std::vector<DecompTree> out;
  out.reserve(kRandomTrees);
  for (int k = 0; k < kRandomTrees; ++k) out.push_back(testing::random_decomp(rng, 5, 3));
  return out;
}

word::Integer abs_value(const word::Integer& v) { return v < 0 ? word::Integer(-v) : v; }

/// Dense product of the factors (1 + sign X_g), one per letter, dropping any
/// monomial that would repeat an index.
std::map<std::vector<int>, word::Integer> multiply_out(const word::FreeWord& w) {
  std::map<std::vector<int>, word::Integer> acc{{{}, 1}};
  for (const auto& l : w.letters()) {
    auto next = acc;
    for (const auto& [m, c] : acc) {
      if (std::find(m.begin(), m.end(), l.gen) != m.end()) continue;
      auto grown = m;
      grown.push_back(l.gen);
      next[grown] += l.sign * c;
    }
    acc.clear();
    for (auto& [m, c] : next)
      if (c != 0) acc.emplace(m, c);
  }
  return acc;
}

word::Integer mu_by_product(const link::LinkPresentation& L, const std::vector<int>& seq) {
  const std::vector<int> prefix(seq.begin(), seq.end() - 1);
  const auto poly = multiply_out(L.longitudes[seq.back() - 1]);
  const auto it = poly.find(prefix);
  return it == poly.end() ? word::Integer(0) : it->second;
}

std::vector<std::vector<int>> distinct_sequences(int n) {
  std::vector<std::vector<int>> out;
  for (const auto& m : testing::square_free_monomials(n, n))
    if (m.size() >= 2) out.push_back(m);
  return out;
}

Outcome complementarity(const std::vector<DecompTree>& trees) {
  Outcome o;
  for (const auto& t : trees) {
    const auto v = lambda::eval_lambda(t);
    o.require(v.i_a + v.i_b == 1, "iA + iB != 1 on " + t.to_string());
    o.require(v.i_a == testing::bounds_cell_oracle(t, Side::A) && v.i_b == testing::bounds_cell_oracle(t, Side::B),
              "disagrees with the per-side oracle on " + t.to_string());
    o.require(lambda::eval_lambda(model::swap_sides(t)) == lambda::LambdaValue{v.i_b, v.i_a},
              "owner swap does not swap values on " + t.to_string());
  }
  o.detail = o.ok ? std::to_string(trees.size()) + " trees" : o.detail;
  return o;
}

Outcome fixture_values() {
  Outcome o;
  for (int g = 1; g <= 4; ++g) {
    o.require(lambda::eval_lambda(fixture("a1b1:" + std::to_string(g))) == lambda::LambdaValue{0, 1},
              "a1b1(" + std::to_string(g) + ")");
  }
  o.require(lambda::eval_lambda(fixture("a2b2")) == lambda::LambdaValue{0, 1}, "a2b2");
  o.require(lambda::eval_lambda(fixture("a2b2prime")) == lambda::LambdaValue{1, 0}, "a2b2prime");
  if (o.ok) o.detail = "a1b1(1..4)=(0,1) a2b2=(0,1) a2b2prime=(1,0)";
  return o;
}

Outcome witness_validity(const std::vector<DecompTree>& trees) {
  Outcome o;
  for (const auto& t : trees) {
    const auto w = lambda::witness(t);
    o.require(cell::validate_tree(w.tree).empty(), "invalid witness for " + t.to_string());
    o.require(cell::height_of(w.tree) <= model::height(t), "witness taller than " + t.to_string());
    o.require((w.side == Side::A ? testing::bounds_cell_oracle(t, Side::A) : testing::bounds_cell_oracle(t, Side::B)),
              "witness on the losing side of " + t.to_string());
  }
  for (int g = 1; g <= 6; ++g) {
    o.require(lambda::all_witnesses(fixture("a1b1:" + std::to_string(g))).size() == static_cast<std::size_t>(g),
              "allWitnesses(a1b1(" + std::to_string(g) + ")) size");
  }
  if (o.ok) o.detail = std::to_string(trees.size()) + " trees, |allWitnesses(a1b1(g))| = g for g=1..6";
  return o;
}

Outcome disjointness() {
  Outcome o;
  const auto t = cell::model_cell(3, {2, 2});
  const auto h = t.handles();
  o.require(h.size() == 4, "expected four handles");
  if (!o.ok) return o;
  int forbidden = 0;
  for (std::size_t a = 0; a < h.size(); ++a) {
    o.require(cell::allowed_intersection(t, h[a], h[a]), "self-pair h" + std::to_string(a + 1));
    for (std::size_t b = a + 1; b < h.size(); ++b) {
      const bool expect_forbidden = (a == 0 && b == 1) || (a == 2 && b == 3);
      const bool allowed = cell::allowed_intersection(t, h[a], h[b]);
      if (!allowed) ++forbidden;
      o.require(allowed != expect_forbidden, "pair (h" + std::to_string(a + 1) + ",h" + std::to_string(b + 1) + ")");
    }
  }
  if (o.ok) o.detail = "forbidden exactly (h1,h2),(h3,h4); " + std::to_string(forbidden) + " of 6 pairs";
  return o;
}

Outcome milnor_engine() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : distinct_sequences(n)) {
      o.require(link::mu_distinct(link::unlink(n), s) == 0, "unlink nonzero");
    }
  }
  const auto hopf = link::hopf();
  const auto bor = link::borromean();
  o.require(abs_value(link::mu_distinct(hopf, {2, 1})) == 1, "|mu(hopf,(2,1))| != 1");
  o.require(abs_value(link::mu_distinct(bor, {1, 2, 3})) == 1, "|mu(borromean,(1,2,3))| != 1");
  o.require(link::linking_matrix(bor) == std::vector<std::vector<int>>(3, std::vector<int>(3, 0)),
            "borromean linking matrix nonzero");
  for (const auto& L : {link::unlink(3), hopf, bor}) {
    for (const auto& s : distinct_sequences(L.n)) {
      o.require(link::mu_distinct(L, s) == mu_by_product(L, s), "product oracle disagrees");
    }
  }
  if (o.ok) o.detail = "all distinct-index sequences match the product oracle";
  return o;
}

Outcome bing_calibration() {
  Outcome o;
  const auto d = link::bing_double(link::hopf(), 2);
  const auto first = link::first_non_vanishing_mu(d);
  o.require(first.has_value() && !first->empty(), "bingDouble(hopf,2) has no nonzero invariant");
  if (first) {
    for (const auto& c : *first) {
      o.require(c.order == 3, "first order is " + std::to_string(c.order));
      o.require(abs_value(c.value) == 1, "value " + c.value.str());
      o.require(mu_by_product(d, c.index_seq) == c.value, "product oracle disagrees");
    }
  }
  const auto u = link::bing_double(link::unlink(2), 1);
  for (const auto& s : distinct_sequences(u.n)) o.require(link::mu_distinct(u, s) == 0, "doubled unlink nonzero");
  const auto twice = link::bing_double(d, 3);
  const auto cert = link::homotopic_essential_cert(twice);
  o.require(cert.has_value(), "twice-doubled hopf not certified");
  if (cert) {
    o.require(mu_by_product(twice, cert->index_seq) == cert->value && cert->value != 0, "twice-doubled certificate");
    if (o.ok) o.detail = "order 3 values +-1; twice-doubled certified at order " + std::to_string(cert->order);
  }
  return o;
}

Outcome pipeline_run() {
  Outcome o;
  const pipeline::Instance inst{link::borromean(), {fixture("a1b1:1"), fixture("a2b2"), fixture("a2b2prime")}};
  const auto v = pipeline::check_obstruction(inst);
  o.require(v.conclusion == pipeline::Conclusion::Obstructed, "not obstructed");
  o.require(pipeline::verify_verdict(v, inst), "verifyVerdict false");
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"abslice", "check", "--link", "borromean", "--model", "a1b1", "--model", "a2b2",
                             "--model", "a2b2prime"},
                            in, out, err);
  o.require(code == cli::kExitOk, "exit code " + std::to_string(code));
  if (o.ok) o.detail = "obstructed, verified, exit 0";
  return o;
}

Outcome handle_duality() {
  Outcome o;
  Rng rng(testing::seed() + 8);
  std::vector<DecompTree> trees;
  for (const auto& name : {"a1b1:1", "a1b1:2", "a1b1:3", "a1b1:4", "a2b2", "a2b2prime", "a3b3", "a3b3prime"})
    trees.push_back(fixture(name));
  for (int k = 0; k < 1000; ++k) trees.push_back(testing::random_decomp(rng, 5, 3));
  for (const auto& t : trees) {
    const auto c = model::handle_counts(t);
    o.require(c.one_handles_a == c.two_handles_b && c.one_handles_b == c.two_handles_a,
              "count mismatch on " + t.to_string());
    const auto a = model::handle_structure(t, Side::A);
    const auto b = model::handle_structure(t, Side::B);
    o.require(model::dualize(a) == b && model::dualize(b) == a, "dualize does not exchange sides");
    o.require(model::dualize(model::dualize(a)) == a, "dualize not an involution");
  }
  if (o.ok) o.detail = std::to_string(trees.size()) + " trees";
  return o;
}

Outcome grope_module() {
  Outcome o;
  const auto a2 = grope::from_decomp_side(fixture("a2b2"), Side::A);
  o.require(a2.has_value() && grope::grope_class(*a2) == 3, "class of the a2b2 A side");
  const auto c = grope::GropeTree::circle();
  o.require(grope::grope_complement(grope::GropeTree::surface({{c, c}})) == cell::model_cell(2, {2}),
            "bare genus-1 complement");

  Rng rng(testing::seed() + 9);
  int checked = 0, mismatched = 0, mismatched_genus_one = 0;
  std::string example;
  const auto genus_one = [](const grope::GropeTree& g) {
    bool ok = true;
    auto walk = [&](auto&& self, const grope::GropeTree& x) -> void {
      if (!x.is_circle() && x.genus != 1) ok = false;
      for (const auto& a : x.attachments) self(self, a);
    };
    walk(walk, g);
    return ok;
  };
  for (int k = 0; k < kRandomTrees; ++k) {
    const auto t = testing::random_pure_grope_decomp(rng, Side::A, 5, 3);
    const auto g = grope::from_decomp_side(t, Side::A);
    if (!g) continue;
    ++checked;
    const int hc = cell::height_of(grope::grope_complement(*g));
    const int hw = cell::height_of(lambda::witness(t).tree);
    if (hc == hw) continue;
    ++mismatched;
    if (genus_one(*g)) ++mismatched_genus_one;
    auto text = t.to_string() + " has complement height " + std::to_string(hc) + ", witness height " +
                std::to_string(hw);
    if (example.empty() || text.size() < example.size()) example = std::move(text);
  }
  o.require(mismatched == 0, std::to_string(mismatched) + " of " + std::to_string(checked) +
                                 " pure-grope sides differ (" + std::to_string(mismatched_genus_one) +
                                 " with all stages genus 1); smallest: " + example);
  if (o.ok) o.detail = std::to_string(checked) + " pure-grope sides";
  return o;
}

Outcome magnus_homomorphism() {
  Outcome o;
  Rng rng(testing::seed() + 10);
  for (int k = 0; k < kRandomTrees; ++k) {
    const int n = testing::uniform(rng, 1, 6);
    const auto u = testing::random_word(rng, n, 20);
    const auto v = testing::random_word(rng, n, 20);
    const auto uv = word::magnus_reduced(u * v, n);
    const auto product = word::poly_mul(word::magnus_reduced(u, n), word::magnus_reduced(v, n));
    o.require(uv == product, "M(uv) != M(u)M(v) for " + u.to_string() + " , " + v.to_string());
    for (const auto& [m, coeff] : uv.terms()) o.require(word::is_square_free(m) && coeff != 0, "bad term");
  }
  if (o.ok) o.detail = std::to_string(kRandomTrees) + " word pairs, 0 violations";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto wanted = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };

  std::vector<DecompTree> trees;
  if (wanted(1) || wanted(3)) trees = population();

  struct Criterion {
    int number;
    std::string name;
    double budget_s;  // 0 = no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "complementarity iA+iB=1 and owner swap", 10, [&] { return complementarity(trees); }},
      {2, "fixture invariants", 0, fixture_values},
      {3, "witness validity and g choices for a1b1(g)", 0, [&] { return witness_validity(trees); }},
      {4, "disjointness rule on the pair-of-pants cell", 0, disjointness},
      {5, "Milnor engine against the product oracle", 0, milnor_engine},
      {6, "Bing-doubling calibration", 5, bing_calibration},
      {7, "obstruction pipeline on the Borromean rings", 1, pipeline_run},
      {8, "handle duality", 0, handle_duality},
      {9, "grope class, complement and witness height", 0, grope_module},
      {10, "Magnus homomorphism and square-free terms", 0, magnus_homomorphism},
  };

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "runtime over budget");
    if (!o.ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name << " (" << secs << " s";
    if (c.budget_s > 0) line << " < " << c.budget_s << " s";
    line << ") " << o.detail;
    std::cout << line.str() << '\n';
  }
  return failed == 0 ? 0 : 1;
}
