#include "abslice/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace abslice::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

model::Side side_field(const Json& j, const char* key) {
  return model::side_from_string(string_field(j, key));
}

std::string side_str(model::Side s) { return std::string(1, model::to_char(s)); }

std::vector<int> int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(what + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::string> string_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) fail(what + " must contain strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json integer_to_json(const word::Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

word::Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return word::Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return word::Integer(j.get<std::string>());
    } catch (const std::exception&) {
      fail("malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  fail("expected an integer");
}

Json to_json(const word::FreeWord& w) { return Json(w.to_signed()); }

word::FreeWord word_from_json(const Json& j) {
  const auto letters = int_array(j, "word");
  return word::FreeWord::from_signed(letters);
}

Json to_json(const link::LinkPresentation& L) {
  Json longs = Json::array();
  for (const auto& l : L.longitudes) longs.push_back(to_json(l));
  return {{"n", L.n}, {"longitudes", longs}, {"labels", L.labels}};
}

link::LinkPresentation link_from_json(const Json& j) {
  link::LinkPresentation L;
  L.n = int_field(j, "n");
  const auto& longs = field(j, "longitudes");
  if (!longs.is_array()) fail("'longitudes' must be an array");
  for (const auto& l : longs) L.longitudes.push_back(word_from_json(l));
  if (j.contains("labels")) L.labels = string_array(j.at("labels"), "'labels'");
  L.check();
  return L;
}

Json to_json(const link::MuCertificate& c) {
  return {{"index", c.index_seq},
          {"value", integer_to_json(c.value)},
          {"order", c.order},
          {"firstNonVanishing", c.first_non_vanishing}};
}

link::MuCertificate certificate_from_json(const Json& j) {
  link::MuCertificate c;
  c.index_seq = int_array(field(j, "index"), "'index'");
  c.value = integer_from_json(field(j, "value"));
  c.order = int_field(j, "order");
  const auto& f = field(j, "firstNonVanishing");
  if (!f.is_boolean()) fail("'firstNonVanishing' must be a boolean");
  c.first_non_vanishing = f.get<bool>();
  return c;
}

Json to_json(const model::DecompTree& t) {
  if (t.is_leaf()) return {{"kind", "leaf"}, {"owner", side_str(t.owner)}};
  Json pairs = Json::array();
  for (int i = 0; i < t.pair_count(); ++i) pairs.push_back({to_json(t.first(i)), to_json(t.second(i))});
  return {{"kind", "stage"}, {"owner", side_str(t.owner)}, {"genus", t.genus}, {"pairs", pairs}};
}

model::DecompTree decomp_from_json(const Json& j) {
  const auto kind = string_field(j, "kind");
  const auto owner = side_field(j, "owner");
  if (kind == "leaf") return model::DecompTree::leaf(owner);
  if (kind != "stage") fail("decomposition kind must be 'leaf' or 'stage', got '" + kind + "'");
  model::DecompTree t;
  t.kind = model::DecompTree::Kind::Stage;
  t.owner = owner;
  t.genus = int_field(j, "genus");
  const auto& pairs = field(j, "pairs");
  if (!pairs.is_array()) fail("'pairs' must be an array");
  if (t.genus < 1 || pairs.size() != static_cast<std::size_t>(t.genus)) {
    fail("stage genus " + std::to_string(t.genus) + " needs that many pairs, got " + std::to_string(pairs.size()));
  }
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) fail("each pair must be a two-element array");
    t.children.push_back(decomp_from_json(p[0]));
    t.children.push_back(decomp_from_json(p[1]));
  }
  return t;
}

Json to_json(const model::HandleStructure& h) {
  Json twos = Json::array();
  for (const auto& th : h.two_handles) twos.push_back({{"position", th.position}, {"framing", th.framing}});
  Json pattern = Json::array();
  for (const auto& p : h.pattern) {
    pattern.push_back({{"position", p.position},
                       {"surfaceOwner", side_str(p.surface_owner)},
                       {"genus", p.genus},
                       {"bingDoubledCopies", p.genus},
                       {"bingDoubledOn", side_str(model::opposite(p.surface_owner))}});
  }
  return {{"side", side_str(h.side)},
          {"dottedCircles", h.dotted_circles},
          {"twoHandles", twos},
          {"pattern", pattern},
          {"counts", {{"dottedCircles", h.dotted_circles.size()}, {"twoHandles", h.two_handles.size()}}}};
}

model::HandleStructure handle_structure_from_json(const Json& j) {
  model::HandleStructure h;
  h.side = side_field(j, "side");
  h.dotted_circles = string_array(field(j, "dottedCircles"), "'dottedCircles'");
  for (const auto& th : field(j, "twoHandles")) {
    h.two_handles.push_back({string_field(th, "position"), int_field(th, "framing")});
  }
  for (const auto& p : field(j, "pattern")) {
    h.pattern.push_back({string_field(p, "position"), side_field(p, "surfaceOwner"), int_field(p, "genus")});
  }
  return h;
}

Json to_json(const model::HandleCounts& c) {
  return {{"A", {{"twoHandles", c.two_handles_a}, {"oneHandles", c.one_handles_a}}},
          {"B", {{"twoHandles", c.two_handles_b}, {"oneHandles", c.one_handles_b}}}};
}

Json to_json(const cell::BingCellTree& t) {
  Json vs = Json::array();
  for (const auto& v : t.vertices()) {
    Json o = {{"id", v.id}, {"kind", cell::to_string(v.kind)}};
    o["parent"] = v.parent < 0 ? Json(nullptr) : Json(v.parent);
    if (v.kind == cell::VertexKind::Body) o["boundary"] = v.data;
    if (v.kind == cell::VertexKind::Link) o["components"] = v.data;
    vs.push_back(std::move(o));
  }
  return {{"vertices", vs}, {"height", cell::height_of(t)}};
}

cell::BingCellTree cell_from_json(const Json& j) {
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) fail("'vertices' must be an array");
  std::vector<cell::Vertex> out;
  for (const auto& v : vs) {
    cell::Vertex x;
    x.id = int_field(v, "id");
    x.kind = cell::vertex_kind_from_string(string_field(v, "kind"));
    const auto& p = field(v, "parent");
    if (p.is_null()) {
      x.parent = -1;
    } else if (p.is_number_integer()) {
      x.parent = p.get<int>();
    } else {
      fail("'parent' must be an integer or null");
    }
    if (x.kind == cell::VertexKind::Body) x.data = int_field(v, "boundary");
    if (x.kind == cell::VertexKind::Link) x.data = int_field(v, "components");
    out.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].id != static_cast<int>(i)) fail("vertex ids must be 0..n-1 in order");
  }
  return cell::BingCellTree::from_vertices(std::move(out));
}

cell::PlumbingPattern plumbing_from_json(const Json& j) {
  cell::PlumbingPattern p;
  if (j.contains("surfaces")) p.surfaces = int_array(j.at("surfaces"), "'surfaces'");
  if (j.contains("intersections")) {
    for (const auto& pair : j.at("intersections")) {
      const auto ab = int_array(pair, "intersection");
      if (ab.size() != 2) fail("each intersection is a pair of vertex ids");
      p.intersections.emplace_back(ab[0], ab[1]);
    }
  }
  return p;
}

Json to_json(const grope::GropeTree& g) {
  Json o;
  if (g.is_circle()) {
    o = {{"kind", "circle"}};
  } else {
    Json pairs = Json::array();
    for (int i = 0; i < g.pair_count(); ++i) pairs.push_back({to_json(g.on_alpha(i)), to_json(g.on_beta(i))});
    o = {{"kind", "surface"}, {"genus", g.genus}, {"pairs", pairs}};
  }
  if (g.copies != 1) o["copies"] = g.copies;
  return o;
}

grope::GropeTree grope_from_json(const Json& j) {
  const auto kind = string_field(j, "kind");
  grope::GropeTree g;
  g.copies = j.contains("copies") ? int_field(j, "copies") : 1;
  if (kind == "circle") {
    g.kind = grope::GropeTree::Kind::Circle;
  } else if (kind == "surface") {
    g.kind = grope::GropeTree::Kind::Surface;
    g.genus = int_field(j, "genus");
    for (const auto& p : field(j, "pairs")) {
      if (!p.is_array() || p.size() != 2) fail("each pair must be a two-element array");
      g.attachments.push_back(grope_from_json(p[0]));
      g.attachments.push_back(grope_from_json(p[1]));
    }
  } else {
    fail("grope kind must be 'circle' or 'surface', got '" + kind + "'");
  }
  const auto problems = grope::validate(g);
  if (!problems.empty()) fail("invalid grope: " + problems.front());
  return g;
}

Json to_json(const lambda::Choice& c) {
  return {{"position", c.position},
          {"stageOwner", side_str(c.stage_owner)},
          {"winner", side_str(c.winner)},
          {"join", c.marked ? "marked" : "unmarked"},
          {"picks", c.picks}};
}

namespace {

lambda::Choice choice_from_json(const Json& j) {
  lambda::Choice c;
  c.position = string_field(j, "position");
  c.stage_owner = side_field(j, "stageOwner");
  c.winner = side_field(j, "winner");
  const auto join = string_field(j, "join");
  if (join != "marked" && join != "unmarked") fail("'join' must be 'marked' or 'unmarked'");
  c.marked = join == "marked";
  c.picks = int_array(field(j, "picks"), "'picks'");
  return c;
}

}  // namespace

Json to_json(const lambda::SideReport& r) {
  Json choices = Json::array();
  for (const auto& c : r.choices) choices.push_back(to_json(c));
  return {{"iA", r.value.i_a},
          {"iB", r.value.i_b},
          {"robust", side_str(r.robust)},
          {"witnessSide", side_str(r.witness_side)},
          {"witness", to_json(r.witness)},
          {"choices", choices}};
}

lambda::SideReport side_report_from_json(const Json& j) {
  lambda::SideReport r;
  r.value = {int_field(j, "iA"), int_field(j, "iB")};
  r.robust = side_field(j, "robust");
  r.witness_side = side_field(j, "witnessSide");
  r.witness = cell_from_json(field(j, "witness"));
  for (const auto& c : field(j, "choices")) r.choices.push_back(choice_from_json(c));
  return r;
}

Json to_json(const pipeline::Instance& inst) {
  Json ds = Json::array();
  for (const auto& t : inst.decompositions) ds.push_back(to_json(t));
  return {{"link", to_json(inst.link)}, {"decompositions", ds}};
}

pipeline::Instance instance_from_json(const Json& j) {
  pipeline::Instance inst;
  inst.link = link_from_json(field(j, "link"));
  for (const auto& t : field(j, "decompositions")) inst.decompositions.push_back(decomp_from_json(t));
  return inst;
}

Json to_json(const pipeline::Verdict& v) {
  Json reports = Json::array();
  for (const auto& r : v.per_decomposition) reports.push_back(to_json(r));
  return {{"essentialness", v.essentialness ? to_json(*v.essentialness) : Json(nullptr)},
          {"perDecomposition", reports},
          {"conclusion", pipeline::to_string(v.conclusion)},
          {"parallelCopyComponents", v.parallel_copy_components},
          {"narrative", v.narrative}};
}

pipeline::Verdict verdict_from_json(const Json& j) {
  pipeline::Verdict v;
  const auto& e = field(j, "essentialness");
  if (!e.is_null()) v.essentialness = certificate_from_json(e);
  for (const auto& r : field(j, "perDecomposition")) v.per_decomposition.push_back(side_report_from_json(r));
  const auto c = string_field(j, "conclusion");
  if (c == "obstructed") {
    v.conclusion = pipeline::Conclusion::Obstructed;
  } else if (c == "inconclusive") {
    v.conclusion = pipeline::Conclusion::Inconclusive;
  } else {
    fail("unknown conclusion '" + c + "'");
  }
  v.parallel_copy_components = int_field(j, "parallelCopyComponents");
  v.narrative = string_array(field(j, "narrative"), "'narrative'");
  return v;
}

// DOT -----------------------------------------------------------------------

std::string to_dot(const model::DecompTree& t) {
  std::ostringstream os;
  os << "digraph decomposition {\n  node [fontname=\"Helvetica\"];\n";
  int next = 0;
  auto walk = [&](auto&& self, const model::DecompTree& d) -> int {
    const int id = next++;
    if (d.is_leaf()) {
      os << "  n" << id << " [shape=box, label=\"Leaf(" << model::to_char(d.owner) << ")\"];\n";
    } else {
      os << "  n" << id << " [shape=ellipse, label=\"Stage(" << model::to_char(d.owner) << ", g="
         << d.genus << ")\"];\n";
    }
    for (int i = 0; i < d.pair_count(); ++i) {
      for (int k = 0; k < 2; ++k) {
        const std::string label = std::to_string(i + 1) + "." + std::to_string(k + 1);
        const int c = self(self, d.children[2 * i + k]);
        os << "  n" << id << " -> n" << c << " [label=\"" << label << "\"];\n";
      }
    }
    return id;
  };
  walk(walk, t);
  os << "}\n";
  return os.str();
}

std::string to_dot(const cell::BingCellTree& t) {
  std::ostringstream os;
  os << "digraph bing_cell {\n  node [fontname=\"Helvetica\"];\n";
  for (const auto& v : t.vertices()) {
    os << "  v" << v.id << " [";
    switch (v.kind) {
      case cell::VertexKind::Root:
        os << "shape=circle, label=\"root\"";
        break;
      case cell::VertexKind::Body:
        os << "shape=circle, label=\"P" << v.id << " (" << v.data << ")\"";
        break;
      case cell::VertexKind::Link:
        os << "shape=square, style=filled, fillcolor=black, fontcolor=white, label=\"L" << v.id << " ("
           << v.data << ")\"";
        break;
      case cell::VertexKind::Handle:
        os << "shape=doublecircle, label=\"h" << v.id << "\"";
        break;
    }
    os << "];\n";
  }
  for (const auto& v : t.vertices())
    for (int c : v.children) os << "  v" << v.id << " -> v" << c << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const grope::GropeTree& g) {
  std::ostringstream os;
  os << "digraph grope {\n  node [fontname=\"Helvetica\"];\n";
  int next = 0;
  auto walk = [&](auto&& self, const grope::GropeTree& x) -> int {
    const int id = next++;
    std::string label = x.is_circle() ? "circle" : "genus " + std::to_string(x.genus);
    if (x.copies != 1) label += " x" + std::to_string(x.copies);
    os << "  g" << id << " [shape=" << (x.is_circle() ? "plaintext" : "ellipse") << ", label=\""
       << dot_escape(label) << "\"];\n";
    for (int i = 0; i < x.pair_count(); ++i) {
      const int a = self(self, x.on_alpha(i));
      os << "  g" << id << " -> g" << a << " [label=\"alpha" << i + 1 << "\"];\n";
      const int b = self(self, x.on_beta(i));
      os << "  g" << id << " -> g" << b << " [label=\"beta" << i + 1 << "\"];\n";
    }
    return id;
  };
  walk(walk, g);
  os << "}\n";
  return os.str();
}

}  // namespace abslice::io
