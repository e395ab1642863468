#include "abslice/cli.hpp"

#include "abslice/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace abslice::cli {

namespace {

using io::Json;

struct Options {
  std::string link;
  std::vector<std::string> models;
  std::string fixture;
  std::string index;
  std::string side = "A";
  int component = 0;
  std::string grope;
  std::string cell;
  std::string plumbing;
  std::string instance;
  std::string verdict;
  std::size_t limit = 10000;
  bool dot = false;
  std::string out;
};

std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(source);
  if (!f) throw std::invalid_argument("cannot open '" + source + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const std::string& source, std::istream& in) {
  const auto text = read_source(source, in);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + source + "': " + e.what());
  }
}

bool is_file_source(const std::string& source) {
  return source == "-" || std::filesystem::is_regular_file(source);
}

model::DecompTree resolve_model(const std::string& source, std::istream& in) {
  if (is_file_source(source)) {
    auto t = io::decomp_from_json(read_json(source, in));
    model::require_valid(t);
    return t;
  }
  return model::fixture(source);
}

link::LinkPresentation resolve_link(const std::string& source, std::istream& in) {
  if (is_file_source(source)) return io::link_from_json(read_json(source, in));
  return link::catalog(source);
}

std::vector<int> parse_index(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed --index '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("--index is required");
  return out;
}

class Output {
 public:
  Output(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void json(const Json& j) { write(j.dump(2) + "\n"); }
  void text(const std::string& s) { write(s); }

 private:
  void write(const std::string& s) {
    if (opts_.out.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(opts_.out);
    if (!f) throw std::invalid_argument("cannot write '" + opts_.out + "'");
    f << s;
  }

  const Options& opts_;
  std::ostream& out_;
};

// Splits "model-eval" into "model" "eval" for the two-level command set.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  static const std::map<std::string, std::vector<std::string>> aliases = {
      {"model-eval", {"model", "eval"}},
      {"model-witness", {"model", "witness"}},
      {"model-witnesses-all", {"model", "witnesses-all"}},
      {"model-handles", {"model", "handles"}},
      {"model-dual", {"model", "dual"}},
      {"model-counts", {"model", "counts"}},
      {"link-mu", {"link", "mu"}},
      {"link-double", {"link", "double"}},
      {"link-essential", {"link", "essential"}},
      {"grope-class", {"grope", "class"}},
      {"grope-complement", {"grope", "complement"}},
      {"cell-validate", {"cell", "validate"}},
      {"abslice-check", {"abslice", "check"}},
      {"abslice-verify", {"abslice", "verify"}},
  };
  if (args.empty()) return args;
  auto it = aliases.find(args.front());
  if (it == aliases.end()) return args;
  std::vector<std::string> out = it->second;
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  Output emit(o, out);
  std::function<int()> action;

  CLI::App app{"Model decompositions of D^4, Bing cells and Milnor invariants", "abslice"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto model_source = [&](CLI::App* c) {
    c->add_option("--model,--fixture", o.fixture, "Fixture shorthand (a1b1:g, a2b2, ...) or JSON file, - for stdin")
        ->required();
  };
  auto add_dot = [&](CLI::App* c) { c->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of JSON"); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write output to this file"); };

  // model ------------------------------------------------------------------
  auto* model_cmd = app.add_subcommand("model", "Model decompositions");
  model_cmd->require_subcommand(1);

  auto* m_eval = model_cmd->add_subcommand("eval", "I_lambda of both sides, robust side and witness");
  model_source(m_eval);
  add_dot(m_eval);
  add_out(m_eval);
  m_eval->callback([&] {
    action = [&] {
      const auto t = resolve_model(o.fixture, in);
      const auto r = lambda::side_report(t);
      if (o.dot) {
        emit.text(io::to_dot(r.witness));
      } else {
        emit.json(io::to_json(r));
      }
      return kExitOk;
    };
  });

  auto* m_witness = model_cmd->add_subcommand("witness", "Bing-cell witness for the side with I_lambda = 1");
  model_source(m_witness);
  add_dot(m_witness);
  add_out(m_witness);
  m_witness->callback([&] {
    action = [&] {
      const auto w = lambda::witness(resolve_model(o.fixture, in));
      if (o.dot) {
        emit.text(io::to_dot(w.tree));
      } else {
        emit.json(io::to_json(w.tree));
      }
      return kExitOk;
    };
  });

  auto* m_all = model_cmd->add_subcommand("witnesses-all", "Every witness over all choice logs");
  model_source(m_all);
  add_dot(m_all);
  add_out(m_all);
  m_all->add_option("--limit", o.limit, "Refuse to enumerate more than this many");
  m_all->callback([&] {
    action = [&] {
      const auto t = resolve_model(o.fixture, in);
      const auto all = lambda::all_witnesses(t, o.limit);
      if (o.dot) {
        std::string s;
        for (const auto& w : all) s += io::to_dot(w);
        emit.text(s);
        return kExitOk;
      }
      Json arr = Json::array();
      for (const auto& w : all) arr.push_back(io::to_json(w));
      emit.json({{"count", all.size()}, {"witnesses", arr}});
      return kExitOk;
    };
  });

  auto* m_handles = model_cmd->add_subcommand("handles", "Symbolic Kirby data of one side");
  model_source(m_handles);
  add_out(m_handles);
  m_handles->add_option("--side", o.side, "A or B");
  m_handles->callback([&] {
    action = [&] {
      const auto t = resolve_model(o.fixture, in);
      emit.json(io::to_json(model::handle_structure(t, model::side_from_string(o.side))));
      return kExitOk;
    };
  });

  auto* m_dual = model_cmd->add_subcommand("dual", "Dual of one side's Kirby data (dots <-> zeros)");
  model_source(m_dual);
  add_out(m_dual);
  m_dual->add_option("--side", o.side, "A or B");
  m_dual->callback([&] {
    action = [&] {
      const auto t = resolve_model(o.fixture, in);
      emit.json(io::to_json(model::dualize(model::handle_structure(t, model::side_from_string(o.side)))));
      return kExitOk;
    };
  });

  auto* m_counts = model_cmd->add_subcommand("counts", "1- and 2-handle counts of both sides");
  model_source(m_counts);
  add_out(m_counts);
  m_counts->callback([&] {
    action = [&] {
      emit.json(io::to_json(model::handle_counts(resolve_model(o.fixture, in))));
      return kExitOk;
    };
  });

  // link -------------------------------------------------------------------
  auto* link_cmd = app.add_subcommand("link", "Link presentations and Milnor invariants");
  link_cmd->require_subcommand(1);
  auto link_source = [&](CLI::App* c) {
    c->add_option("--link", o.link, "unlink:N, hopf, borromean, bing:i,j,... or a JSON file")->required();
  };

  auto* l_mu = link_cmd->add_subcommand("mu", "Distinct-index Milnor invariant");
  link_source(l_mu);
  add_out(l_mu);
  l_mu->add_option("--index", o.index, "Index sequence i1,...,ik,j")->required();
  l_mu->callback([&] {
    action = [&] {
      const auto L = resolve_link(o.link, in);
      const auto I = parse_index(o.index);
      emit.json({{"index", I}, {"value", io::integer_to_json(link::mu_distinct(L, I))}});
      return kExitOk;
    };
  });

  auto* l_double = link_cmd->add_subcommand("double", "Bing double one component");
  link_source(l_double);
  add_out(l_double);
  l_double->add_option("--component", o.component, "1-based component index")->required();
  l_double->callback([&] {
    action = [&] {
      emit.json(io::to_json(link::bing_double(resolve_link(o.link, in), o.component)));
      return kExitOk;
    };
  });

  auto* l_ess = link_cmd->add_subcommand("essential", "Homotopic essentialness certificate");
  link_source(l_ess);
  add_out(l_ess);
  l_ess->callback([&] {
    action = [&] {
      const auto L = resolve_link(o.link, in);
      const auto all = link::first_non_vanishing_mu(L);
      Json certs = Json::array();
      if (all) {
        for (const auto& c : *all) certs.push_back(io::to_json(c));
      }
      Json j = {{"essential", all.has_value()},
                {"certificate", all ? io::to_json(all->front()) : Json(nullptr)},
                {"firstNonVanishing", certs},
                {"linkingMatrix", link::linking_matrix(L)},
                {"warnings", link::diagnostics(L)}};
      j["report"] = all ? "homotopically essential" : "homotopically trivial (distinct-index mu-bar complete, Milnor)";
      emit.json(j);
      return kExitOk;
    };
  });

  // grope ------------------------------------------------------------------
  auto* grope_cmd = app.add_subcommand("grope", "Gropes and their complements");
  grope_cmd->require_subcommand(1);
  auto grope_source = [&](CLI::App* c) {
    c->add_option("--grope", o.grope, "Grope JSON file, - for stdin");
    c->add_option("--model,--fixture", o.fixture, "Take the grope spanned by one side of a model");
    c->add_option("--side", o.side, "Side of --model (A or B)");
  };
  auto load_grope = [&]() -> grope::GropeTree {
    if (!o.grope.empty()) return io::grope_from_json(read_json(o.grope, in));
    if (o.fixture.empty()) throw std::invalid_argument("give --grope or --model");
    auto g = grope::from_decomp_side(resolve_model(o.fixture, in), model::side_from_string(o.side));
    if (!g) throw std::invalid_argument("side " + o.side + " of '" + o.fixture + "' is not a grope");
    return *g;
  };

  auto* g_class = grope_cmd->add_subcommand("class", "Grope class");
  grope_source(g_class);
  add_out(g_class);
  g_class->callback([&] {
    action = [&] {
      const auto g = load_grope();
      emit.json({{"class", grope::grope_class(g)}, {"grope", io::to_json(g)}});
      return kExitOk;
    };
  });

  auto* g_comp = grope_cmd->add_subcommand("complement", "Bing-cell tree of the complement");
  grope_source(g_comp);
  add_dot(g_comp);
  add_out(g_comp);
  g_comp->callback([&] {
    action = [&] {
      const auto t = grope::grope_complement(load_grope());
      if (o.dot) {
        emit.text(io::to_dot(t));
      } else {
        emit.json(io::to_json(t));
      }
      return kExitOk;
    };
  });

  // cell -------------------------------------------------------------------
  auto* cell_cmd = app.add_subcommand("cell", "Bing-cell trees");
  cell_cmd->require_subcommand(1);
  auto* c_val = cell_cmd->add_subcommand("validate", "Check tree invariants and an optional plumbing pattern");
  c_val->add_option("--cell", o.cell, "Cell tree JSON file, - for stdin")->required();
  c_val->add_option("--plumbing", o.plumbing, "Plumbing pattern JSON file");
  add_out(c_val);
  c_val->callback([&] {
    action = [&] {
      const auto t = io::cell_from_json(read_json(o.cell, in));
      auto problems = cell::validate_tree(t);
      if (!o.plumbing.empty() && problems.empty()) {
        auto more = cell::validate_plumbing(t, io::plumbing_from_json(read_json(o.plumbing, in)));
        problems.insert(problems.end(), more.begin(), more.end());
      }
      Json j = {{"valid", problems.empty()}, {"diagnostics", problems}};
      if (cell::validate_tree(t).empty()) j["height"] = cell::height_of(t);
      emit.json(j);
      for (const auto& p : problems) err << "invalid: " << p << '\n';
      return problems.empty() ? kExitOk : kExitError;
    };
  });

  // abslice ----------------------------------------------------------------
  auto* ab_cmd = app.add_subcommand("abslice", "Obstruction certificates for A-B slicing");
  ab_cmd->require_subcommand(1);
  auto load_instance = [&]() -> pipeline::Instance {
    if (!o.instance.empty()) return io::instance_from_json(read_json(o.instance, in));
    if (o.link.empty()) throw std::invalid_argument("give --instance or --link with --model per component");
    pipeline::Instance inst;
    inst.link = resolve_link(o.link, in);
    for (const auto& m : o.models) inst.decompositions.push_back(resolve_model(m, in));
    return inst;
  };
  auto instance_source = [&](CLI::App* c) {
    c->add_option("--link", o.link, "Link name or JSON file");
    c->add_option("--model", o.models, "One model per component (repeatable)");
    c->add_option("--instance", o.instance, "Instance JSON file");
  };

  auto* ab_check = ab_cmd->add_subcommand("check", "Build the verdict (exit 0 obstructed, 2 inconclusive)");
  instance_source(ab_check);
  add_out(ab_check);
  ab_check->callback([&] {
    action = [&] {
      const auto v = pipeline::check_obstruction(load_instance());
      emit.json(io::to_json(v));
      return v.conclusion == pipeline::Conclusion::Obstructed ? kExitOk : kExitInconclusive;
    };
  });

  auto* ab_verify = ab_cmd->add_subcommand("verify", "Re-check a verdict against its instance");
  instance_source(ab_verify);
  ab_verify->add_option("--verdict", o.verdict, "Verdict JSON file, - for stdin")->required();
  add_out(ab_verify);
  ab_verify->callback([&] {
    action = [&] {
      const auto inst = load_instance();
      const auto v = io::verdict_from_json(read_json(o.verdict, in));
      const auto problems = pipeline::verify_verdict_problems(v, inst);
      emit.json({{"valid", problems.empty()}, {"problems", problems}});
      return problems.empty() ? kExitOk : kExitError;
    };
  });

  // misc -------------------------------------------------------------------
  auto* dot_cmd = app.add_subcommand("emit-dot", "Graphviz DOT for a model, cell or grope");
  dot_cmd->add_option("--model,--fixture", o.fixture, "Model shorthand or JSON file");
  dot_cmd->add_option("--cell", o.cell, "Cell tree JSON file");
  dot_cmd->add_option("--grope", o.grope, "Grope JSON file");
  add_out(dot_cmd);
  dot_cmd->callback([&] {
    action = [&] {
      const int given = !o.fixture.empty() + !o.cell.empty() + !o.grope.empty();
      if (given != 1) throw std::invalid_argument("give exactly one of --model, --cell, --grope");
      if (!o.fixture.empty()) {
        emit.text(io::to_dot(resolve_model(o.fixture, in)));
      } else if (!o.cell.empty()) {
        emit.text(io::to_dot(io::cell_from_json(read_json(o.cell, in))));
      } else {
        emit.text(io::to_dot(io::grope_from_json(read_json(o.grope, in))));
      }
      return kExitOk;
    };
  });

  auto* fx_cmd = app.add_subcommand("fixtures-list", "Named model decompositions");
  add_out(fx_cmd);
  fx_cmd->callback([&] {
    action = [&] {
      Json arr = Json::array();
      for (const std::string name : {"a1b1:1", "a1b1:2", "a2b2", "a2b2prime", "a3b3", "a3b3prime"}) {
        const auto t = model::fixture(name);
        const auto v = lambda::eval_lambda(t);
        arr.push_back({{"name", name}, {"height", model::height(t)}, {"iA", v.i_a}, {"iB", v.i_b},
                       {"tree", t.to_string()}});
      }
      emit.json({{"shorthands", model::fixture_names()}, {"fixtures", arr}});
      return kExitOk;
    };
  });

  auto args = normalize(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    return action ? action() : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace abslice::cli
