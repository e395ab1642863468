#pragma once

// Trees associated to model Bing cells.
//
// Unmarked vertices: the root (attaching circle), body vertices (cone points
// of planar surfaces) and handle leaves. Marked vertices stand for the
// Bing-double links along which handles or higher cells are attached.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abslice::cell {

enum class VertexKind { Root, Body, Link, Handle };

std::string to_string(VertexKind k);
VertexKind vertex_kind_from_string(const std::string& s);

inline bool is_marked(VertexKind k) { return k == VertexKind::Link; }

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::Root;
  int parent = -1;  // -1 for the root
  std::vector<int> children;
  // Body: boundary-component count of the planar surface.
  // Link: component count of the Bing-double link. Unused otherwise.
  int data = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Vertex ids equal their index and are assigned in construction (pre-order)
/// order.
class BingCellTree {
 public:
  BingCellTree() = default;

  /// Builds a tree from explicit vertex records (e.g. parsed input). Children
  /// lists are recomputed from parents; nothing else is checked here, use
  /// validate_tree for that.
  static BingCellTree from_vertices(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int id) const;
  std::size_t size() const { return vertices_.size(); }
  bool contains(int id) const { return id >= 0 && id < static_cast<int>(vertices_.size()); }

  int valence(int id) const;
  std::vector<int> handles() const;
  std::vector<int> bodies() const;
  int marked_count() const;

  /// Path from id up to the root, starting with id itself.
  std::vector<int> ancestors(int id) const;
  int depth(int id) const;

  // Construction. Each returns the new vertex id.
  int add_root();
  int add_child(int parent, VertexKind kind, int data = 0);

  /// Copies `sub` below `parent`, skipping sub's root. Returns the id of the
  /// copy of sub's first non-root vertex.
  int graft(int parent, const BingCellTree& sub);

  friend bool operator==(const BingCellTree&, const BingCellTree&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Recursive description of a cell, lowered to a BingCellTree by build().
/// A Disk at the top becomes root -> body(1); anywhere else it is a handle.
struct CellShape {
  enum class Kind { Disk, Body, Link };
  Kind kind = Kind::Disk;
  // Body: attached pieces (each joined at this unmarked cone point).
  // Link: one piece per Bing component, joined at the marked vertex.
  std::vector<CellShape> parts;

  static CellShape disk() { return {Kind::Disk, {}}; }
  static CellShape body(std::vector<CellShape> parts) { return {Kind::Body, std::move(parts)}; }
  static CellShape link(std::vector<CellShape> components) {
    return {Kind::Link, std::move(components)};
  }

  friend bool operator==(const CellShape&, const CellShape&) = default;
};

BingCellTree build(const CellShape& shape);

/// Height-1 model cell on a planar surface with `boundary_components` = k+1
/// boundary circles, carrying k Bing-double links with the given component
/// counts (powers of two, at least 2).
BingCellTree model_cell(int boundary_components, const std::vector<int>& link_components);

/// Maximum number of marked vertices on a root-to-leaf path.
int height_of(const BingCellTree& t);

int first_common_ancestor(const BingCellTree& t, int a, int b);

/// Whether surfaces a and b may intersect: a == b, or their first common
/// ancestor is unmarked. Throws std::invalid_argument for unknown ids and for
/// vertices that are not bodies or handles.
bool allowed_intersection(const BingCellTree& t, int a, int b);

struct PlumbingPattern {
  std::vector<int> surfaces;
  std::vector<std::pair<int, int>> intersections;
};

std::vector<std::string> validate_plumbing(const BingCellTree& t, const PlumbingPattern& p);
std::vector<std::string> validate_tree(const BingCellTree& t);

bool is_power_of_two(int x);

}  // namespace abslice::cell
