#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treeloc {

// Vertices are 0-based in the C++ API. Tree files and CLI output are 1-based.
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// A tree with a distinguished root. Children are kept in ascending index
// order and the postorder lists every child before its parent, root last.
class RootedTree {
 public:
  std::size_t size() const { return parent_.size(); }
  Vertex root() const { return root_; }
  std::optional<Vertex> parent(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  std::span<const Vertex> postorder() const { return postorder_; }
  std::size_t degree(Vertex v) const;
  bool is_leaf(Vertex v) const { return degree(v) <= 1 && size() > 1; }

  // (child, parent) pairs ordered by child index.
  std::vector<Edge> edges() const;

 private:
  friend RootedTree build_tree(std::span<const Edge> edges, Vertex root);

  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> postorder_;
};

// Orients the edges toward root. The vertex set is 0..edges.size(); an
// empty edge list gives the single-vertex tree.
// Throws BadVertexId for ids out of range and NotATree for self-loops,
// duplicate edges, cycles or disconnection.
RootedTree build_tree(std::span<const Edge> edges, Vertex root);

// Same tree, different root.
RootedTree reroot(const RootedTree& tree, Vertex root);

// Tree file: one "u v" edge per line with 1-based ids, optional "root k",
// blank lines and '#' comments ignored. Default root is the last vertex.
RootedTree parse_tree(std::istream& in);
RootedTree read_tree_file(const std::string& path);

// Inverse of parse_tree: edges as "u v" lines, then "root k".
void write_tree(std::ostream& out, const RootedTree& tree);

}  // namespace treeloc
