#include "abslice/bingcell.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace abslice::cell {

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Root: return "root";
    case VertexKind::Body: return "body";
    case VertexKind::Link: return "link";
    case VertexKind::Handle: return "handle";
  }
  return "?";
}

VertexKind vertex_kind_from_string(const std::string& s) {
  if (s == "root") return VertexKind::Root;
  if (s == "body") return VertexKind::Body;
  if (s == "link") return VertexKind::Link;
  if (s == "handle") return VertexKind::Handle;
  throw std::invalid_argument("unknown vertex kind '" + s + "'");
}

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

BingCellTree BingCellTree::from_vertices(std::vector<Vertex> vertices) {
  BingCellTree t;
  for (auto& v : vertices) v.children.clear();
  for (const auto& v : vertices) {
    if (v.parent >= 0 && v.parent < static_cast<int>(vertices.size()) && v.parent != v.id) {
      vertices[v.parent].children.push_back(v.id);
    }
  }
  t.vertices_ = std::move(vertices);
  return t;
}

const Vertex& BingCellTree::vertex(int id) const {
  if (!contains(id)) throw std::invalid_argument("no vertex with id " + std::to_string(id));
  return vertices_[id];
}

int BingCellTree::valence(int id) const {
  const auto& v = vertex(id);
  return static_cast<int>(v.children.size()) + (v.parent >= 0 ? 1 : 0);
}

std::vector<int> BingCellTree::handles() const {
  std::vector<int> out;
  for (const auto& v : vertices_)
    if (v.kind == VertexKind::Handle) out.push_back(v.id);
  return out;
}

std::vector<int> BingCellTree::bodies() const {
  std::vector<int> out;
  for (const auto& v : vertices_)
    if (v.kind == VertexKind::Body) out.push_back(v.id);
  return out;
}

int BingCellTree::marked_count() const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [](const Vertex& v) { return is_marked(v.kind); }));
}

std::vector<int> BingCellTree::ancestors(int id) const {
  std::vector<int> path;
  for (int cur = vertex(id).id; cur >= 0; cur = vertices_[cur].parent) {
    path.push_back(cur);
    if (path.size() > vertices_.size()) throw std::invalid_argument("cycle in cell tree");
  }
  return path;
}

int BingCellTree::depth(int id) const { return static_cast<int>(ancestors(id).size()) - 1; }

int BingCellTree::add_root() {
  if (!vertices_.empty()) throw std::logic_error("cell tree already has a root");
  vertices_.push_back({0, VertexKind::Root, -1, {}, 0});
  return 0;
}

int BingCellTree::add_child(int parent, VertexKind kind, int data) {
  if (!contains(parent)) throw std::invalid_argument("no parent vertex " + std::to_string(parent));
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back({id, kind, parent, {}, data});
  vertices_[parent].children.push_back(id);
  return id;
}

int BingCellTree::graft(int parent, const BingCellTree& sub) {
  if (sub.vertices_.empty() || sub.vertices_[0].children.size() != 1) {
    throw std::invalid_argument("graft needs a cell tree with a single root edge");
  }
  // Copy in pre-order so ids stay in construction order.
  int top = -1;
  auto copy = [&](auto&& self, int src, int dst_parent) -> void {
    const auto& v = sub.vertices_[src];
    const int id = add_child(dst_parent, v.kind, v.data);
    if (top < 0) top = id;
    for (int c : v.children) self(self, c, id);
  };
  copy(copy, sub.vertices_[0].children.front(), parent);
  return top;
}

namespace {

void lower(const CellShape& s, BingCellTree& t, int parent) {
  switch (s.kind) {
    case CellShape::Kind::Disk:
      t.add_child(parent, VertexKind::Handle);
      return;
    case CellShape::Kind::Body: {
      const int id = t.add_child(parent, VertexKind::Body, 1 + static_cast<int>(s.parts.size()));
      for (const auto& p : s.parts) lower(p, t, id);
      return;
    }
    case CellShape::Kind::Link: {
      const int id = t.add_child(parent, VertexKind::Link, static_cast<int>(s.parts.size()));
      for (const auto& p : s.parts) lower(p, t, id);
      return;
    }
  }
}

}  // namespace

BingCellTree build(const CellShape& shape) {
  BingCellTree t;
  const int root = t.add_root();
  switch (shape.kind) {
    case CellShape::Kind::Disk:
      t.add_child(root, VertexKind::Body, 1);
      break;
    case CellShape::Kind::Body:
      lower(shape, t, root);
      break;
    case CellShape::Kind::Link:
      throw std::invalid_argument("a cell cannot start with a marked vertex");
  }
  return t;
}

BingCellTree model_cell(int boundary_components, const std::vector<int>& link_components) {
  if (boundary_components < 1) throw std::invalid_argument("a planar body needs a boundary circle");
  if (static_cast<int>(link_components.size()) != boundary_components - 1) {
    throw std::invalid_argument("a body with " + std::to_string(boundary_components) +
                                " boundary circles carries " +
                                std::to_string(boundary_components - 1) + " links, got " +
                                std::to_string(link_components.size()));
  }
  std::vector<CellShape> links;
  for (int c : link_components) {
    if (c < 2 || !is_power_of_two(c)) {
      throw std::invalid_argument("iterated Bing doubles have 2^d >= 2 components, got " +
                                  std::to_string(c));
    }
    links.push_back(CellShape::link(std::vector<CellShape>(c, CellShape::disk())));
  }
  return build(CellShape::body(std::move(links)));
}

int height_of(const BingCellTree& t) {
  if (t.size() == 0) return 0;
  int best = 0;
  auto walk = [&](auto&& self, int id, int marked) -> void {
    const auto& v = t.vertex(id);
    if (is_marked(v.kind)) ++marked;
    if (v.children.empty()) best = std::max(best, marked);
    for (int c : v.children) self(self, c, marked);
  };
  walk(walk, 0, 0);
  return best;
}

int first_common_ancestor(const BingCellTree& t, int a, int b) {
  const auto up_a = t.ancestors(a);
  const std::unordered_set<int> seen(up_a.begin(), up_a.end());
  for (int v : t.ancestors(b))
    if (seen.contains(v)) return v;
  throw std::invalid_argument("vertices lie in different trees");
}

bool allowed_intersection(const BingCellTree& t, int a, int b) {
  for (int id : {a, b}) {
    const auto k = t.vertex(id).kind;
    if (k != VertexKind::Body && k != VertexKind::Handle) {
      throw std::invalid_argument("vertex " + std::to_string(id) + " is a " + to_string(k) +
                                  ", not a surface");
    }
  }
  if (a == b) return true;
  return !is_marked(t.vertex(first_common_ancestor(t, a, b)).kind);
}

std::vector<std::string> validate_plumbing(const BingCellTree& t, const PlumbingPattern& p) {
  std::vector<std::string> out;
  auto is_surface = [&](int id) {
    if (!t.contains(id)) return false;
    const auto k = t.vertex(id).kind;
    return k == VertexKind::Body || k == VertexKind::Handle;
  };
  for (int s : p.surfaces) {
    if (!is_surface(s)) out.push_back("surface " + std::to_string(s) + " is not a body or handle");
  }
  for (const auto& [a, b] : p.intersections) {
    const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (!is_surface(a) || !is_surface(b)) {
      out.push_back("intersection " + pair + " names a vertex that is not a body or handle");
      continue;
    }
    if (!allowed_intersection(t, a, b)) {
      out.push_back("intersection " + pair + " meets below marked vertex " +
                    std::to_string(first_common_ancestor(t, a, b)));
    }
  }
  return out;
}

std::vector<std::string> validate_tree(const BingCellTree& t) {
  std::vector<std::string> out;
  const auto& vs = t.vertices();
  if (vs.empty()) return {"empty cell tree"};

  const int n = static_cast<int>(vs.size());
  for (int i = 0; i < n; ++i) {
    if (vs[i].id != i) out.push_back("vertex at index " + std::to_string(i) + " has id " + std::to_string(vs[i].id));
    const int p = vs[i].parent;
    if (i == 0) {
      if (p != -1) out.push_back("vertex 0 must be the root");
    } else if (p < 0 || p >= n) {
      out.push_back("vertex " + std::to_string(i) + " has no valid parent");
    } else if (std::count(vs[p].children.begin(), vs[p].children.end(), i) != 1) {
      out.push_back("vertex " + std::to_string(i) + " missing from its parent's children");
    }
  }
  if (!out.empty()) return out;

  // Every vertex must reach the root without revisiting.
  for (int i = 0; i < n; ++i) {
    int steps = 0;
    for (int cur = i; cur != 0; cur = vs[cur].parent) {
      if (++steps > n) {
        out.push_back("vertex " + std::to_string(i) + " is on a cycle");
        return out;
      }
    }
  }

  auto kind_of = [&](int id) { return vs[id].kind; };
  for (const auto& v : vs) {
    const std::string who = to_string(v.kind) + " " + std::to_string(v.id);
    const int val = t.valence(v.id);
    switch (v.kind) {
      case VertexKind::Root:
        if (v.id != 0) out.push_back(who + ": only vertex 0 may be a root");
        if (v.children.size() != 1) out.push_back(who + ": root must be 1-valent");
        else if (kind_of(v.children[0]) != VertexKind::Body) out.push_back(who + ": root must lead to a body");
        break;
      case VertexKind::Body:
        if (v.data < 1) out.push_back(who + ": needs at least one boundary circle");
        if (val != v.data) {
          out.push_back(who + ": valence " + std::to_string(val) + " but " + std::to_string(v.data) +
                        " boundary circles");
        }
        if (v.parent >= 0 && kind_of(v.parent) == VertexKind::Handle) out.push_back(who + ": attached to a handle");
        break;
      case VertexKind::Link:
        if (v.data < 2 || !is_power_of_two(v.data)) {
          out.push_back(who + ": Bing-double link with " + std::to_string(v.data) + " components");
        }
        if (val != v.data + 1) {
          out.push_back(who + ": valence " + std::to_string(val) + " but link has " +
                        std::to_string(v.data) + " components");
        }
        if (v.parent < 0 || kind_of(v.parent) != VertexKind::Body) out.push_back(who + ": must hang off a body");
        for (int c : v.children) {
          if (kind_of(c) == VertexKind::Link || kind_of(c) == VertexKind::Root) {
            out.push_back(who + ": child " + std::to_string(c) + " must be a body or handle");
          }
        }
        break;
      case VertexKind::Handle:
        if (!v.children.empty()) out.push_back(who + ": handles are leaves");
        if (v.parent <= 0 || kind_of(v.parent) == VertexKind::Handle || kind_of(v.parent) == VertexKind::Root) {
          out.push_back(who + ": must hang off a body or a link");
        }
        break;
    }
  }
  return out;
}

}  // namespace abslice::cell
