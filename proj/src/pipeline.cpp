#include "abslice/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abslice::pipeline {

std::string to_string(Conclusion c) {
  return c == Conclusion::Obstructed ? "obstructed" : "inconclusive";
}

namespace {

std::string seq_to_string(const link::IndexSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

bool lower_orders_vanish(const link::LinkPresentation& L, int order) {
  for (int j = 1; j <= L.n; ++j) {
    const auto e = word::magnus_reduced(L.longitudes[j - 1], L.n);
    for (const auto& [mono, coeff] : e.terms()) {
      const int o = static_cast<int>(mono.size()) + 1;
      if (o < 2 || o >= order) continue;
      if (std::find(mono.begin(), mono.end(), j) != mono.end()) continue;
      if (coeff != 0) return false;
    }
  }
  return true;
}

}  // namespace

Verdict check_obstruction(const Instance& inst) {
  inst.link.check();
  if (static_cast<int>(inst.decompositions.size()) != inst.link.n) {
    throw std::invalid_argument("link has " + std::to_string(inst.link.n) + " components but " +
                                std::to_string(inst.decompositions.size()) +
                                " decompositions were given");
  }
  for (const auto& t : inst.decompositions) model::require_valid(t);

  Verdict v;
  v.essentialness = link::homotopic_essential_cert(inst.link);
  v.parallel_copy_components = link::parallel_copy_link(inst.link).n;
  v.per_decomposition.reserve(inst.decompositions.size());
  for (const auto& t : inst.decompositions) v.per_decomposition.push_back(lambda::side_report(t));

  const bool reports_ok = std::all_of(v.per_decomposition.begin(), v.per_decomposition.end(),
                                      [](const lambda::SideReport& r) {
                                        return r.value.i_a + r.value.i_b == 1 &&
                                               cell::validate_tree(r.witness).empty();
                                      });
  v.conclusion = v.essentialness && reports_ok ? Conclusion::Obstructed : Conclusion::Inconclusive;

  auto& say = v.narrative;
  const int n = inst.link.n;
  say.push_back("D(L) adds an untwisted parallel copy: " + std::to_string(v.parallel_copy_components) +
                " boundary components, alpha_i on l_i and beta_i on its copy.");
  for (int i = 0; i < n; ++i) {
    const auto& r = v.per_decomposition[i];
    std::ostringstream os;
    os << "decomposition " << i + 1 << ": I(A)=" << r.value.i_a << ", I(B)=" << r.value.i_b
       << "; gamma_" << i + 1 << " is the attaching curve of side " << model::to_char(r.witness_side)
       << ", which bounds a Bing cell of height " << cell::height_of(r.witness) << " ("
       << r.witness.marked_count() << " marked vertices); side " << model::to_char(r.robust)
       << " is robust.";
    say.push_back(os.str());
  }
  say.push_back("Since {alpha_i} and {beta_i} form L and its parallel copy, the curves "
                "(gamma_1, ..., gamma_n) are isotopic to L (geometric step, taken as given).");
  if (v.essentialness) {
    const auto& c = *v.essentialness;
    say.push_back("mu(" + seq_to_string(c.index_seq) + ") = " + c.value.str() +
                  " is a first non-vanishing Milnor invariant of order " + std::to_string(c.order) +
                  ", so L is homotopically essential.");
    say.push_back("Disjoint Bing cells bounded by the components of L would make L homotopically "
                  "trivial; contradiction. L is not A-B slice with these model decompositions.");
  } else {
    say.push_back("All distinct-index Milnor invariants vanish, so L is homotopically trivial "
                  "(Milnor); no obstruction. This does not assert that L is A-B slice.");
  }
  return v;
}

std::vector<std::string> verify_verdict_problems(const Verdict& v, const Instance& inst) {
  std::vector<std::string> out;
  try {
    inst.link.check();
  } catch (const std::exception& e) {
    return {std::string("instance link: ") + e.what()};
  }
  const int n = inst.link.n;
  if (static_cast<int>(inst.decompositions.size()) != n) out.push_back("instance count mismatch");
  if (static_cast<int>(v.per_decomposition.size()) != static_cast<int>(inst.decompositions.size())) {
    out.push_back("verdict has " + std::to_string(v.per_decomposition.size()) + " reports for " +
                  std::to_string(inst.decompositions.size()) + " decompositions");
    return out;
  }

  if (v.essentialness) {
    const auto& c = *v.essentialness;
    if (c.value == 0) out.push_back("certificate value is zero");
    if (static_cast<int>(c.index_seq.size()) != c.order) out.push_back("certificate order does not match its index sequence");
    if (!c.first_non_vanishing) out.push_back("certificate is not flagged first non-vanishing");
    try {
      const auto mu = link::mu_distinct(inst.link, c.index_seq);
      if (mu != c.value) out.push_back("recomputed mu is " + mu.str() + ", certificate says " + c.value.str());
      if (!lower_orders_vanish(inst.link, c.order)) out.push_back("a lower-order distinct-index invariant is nonzero");
    } catch (const std::exception& e) {
      out.push_back(std::string("certificate index sequence rejected: ") + e.what());
    }
  }

  bool reports_ok = true;
  for (std::size_t i = 0; i < v.per_decomposition.size(); ++i) {
    const auto& r = v.per_decomposition[i];
    const auto& t = inst.decompositions[i];
    const std::string who = "decomposition " + std::to_string(i + 1) + ": ";
    const auto before = out.size();
    const bool bits = (r.value.i_a == 0 || r.value.i_a == 1) && (r.value.i_b == 0 || r.value.i_b == 1);
    if (!bits || r.value.i_a + r.value.i_b != 1) out.push_back(who + "I(A) + I(B) != 1");
    if (r.value.of(r.robust) != 0) out.push_back(who + "robust side has I = 1");
    if (r.value.of(r.witness_side) != 1) out.push_back(who + "witness side has I = 0");
    if (!model::validate(t).empty()) {
      out.push_back(who + "invalid model decomposition");
    } else {
      if (lambda::eval_lambda(t) != r.value) out.push_back(who + "I values disagree with the model");
      if (cell::height_of(r.witness) > model::height(t)) out.push_back(who + "witness taller than the model");
    }
    for (const auto& p : cell::validate_tree(r.witness)) out.push_back(who + "witness: " + p);
    if (out.size() != before) reports_ok = false;
  }

  const bool should_obstruct = v.essentialness.has_value() && reports_ok;
  if ((v.conclusion == Conclusion::Obstructed) != should_obstruct) {
    out.push_back("conclusion '" + to_string(v.conclusion) + "' does not follow from the certificates");
  }
  return out;
}

bool verify_verdict(const Verdict& v, const Instance& inst) {
  return verify_verdict_problems(v, inst).empty();
}

}  // namespace abslice::pipeline
