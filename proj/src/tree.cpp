#include "treeloc/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "treeloc/errors.hpp"

namespace treeloc {

std::optional<Vertex> RootedTree::parent(Vertex v) const {
  Vertex p = parent_.at(v);
  if (p == kNone) return std::nullopt;
  return p;
}

std::size_t RootedTree::degree(Vertex v) const {
  return children_.at(v).size() + (parent_.at(v) == kNone ? 0 : 1);
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(size() > 0 ? size() - 1 : 0);
  for (Vertex v = 0; v < size(); ++v) {
    if (parent_[v] != kNone) out.emplace_back(v, parent_[v]);
  }
  return out;
}

RootedTree build_tree(std::span<const Edge> edges, Vertex root) {
  const std::size_t n = edges.size() + 1;
  if (root >= n) throw BadVertexId("root " + std::to_string(root) + " is not a vertex");

  std::vector<std::vector<Vertex>> adj(n);
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw BadVertexId("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") names a vertex outside 0.." +
                        std::to_string(n - 1));
    }
    if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw NotATree("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  RootedTree t;
  t.root_ = root;
  t.parent_.assign(n, RootedTree::kNone);
  t.children_.assign(n, {});
  t.postorder_.reserve(n);

  // Iterative DFS; children visited in ascending order.
  std::vector<bool> visited(n, false);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  visited[root] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < adj[v].size()) {
      Vertex w = adj[v][next++];
      if (visited[w]) {
        if (w != t.parent_[v]) throw NotATree("cycle through vertex " + std::to_string(w));
        continue;
      }
      visited[w] = true;
      t.parent_[w] = v;
      t.children_[v].push_back(w);
      stack.emplace_back(w, 0);
    } else {
      t.postorder_.push_back(v);
      stack.pop_back();
    }
  }
  if (t.postorder_.size() != n) throw NotATree("graph is disconnected");
  return t;
}

RootedTree reroot(const RootedTree& tree, Vertex root) {
  auto e = tree.edges();
  return build_tree(e, root);
}

RootedTree parse_tree(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<long long> root;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("tree file line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "root") {
      long long k = 0;
      if (!(ss >> k)) fail("expected 'root k'");
      if (root) fail("duplicate root line");
      root = k;
    } else {
      long long u = 0;
      long long v = 0;
      std::istringstream head(first);
      if (!(head >> u) || !head.eof() || !(ss >> v)) fail("expected 'u v'");
      if (u < 1 || v < 1) fail("vertex ids are 1-based");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    }
    std::string extra;
    if (ss >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  std::size_t n = edges.size() + 1;
  long long r = root.value_or(static_cast<long long>(n));
  if (r < 1) throw BadVertexId("root must be a 1-based vertex id");
  return build_tree(edges, static_cast<Vertex>(r - 1));
}

RootedTree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tree file '" + path + "'");
  return parse_tree(in);
}

void write_tree(std::ostream& out, const RootedTree& tree) {
  for (auto [child, parent] : tree.edges()) out << (child + 1) << ' ' << (parent + 1) << '\n';
  out << "root " << (tree.root() + 1) << '\n';
}

}  // namespace treeloc
