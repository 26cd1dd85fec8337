#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "treeloc/errors.hpp"
#include "treeloc/limits.hpp"
#include "treeloc/tree.hpp"

using namespace treeloc;

TEST_SUITE("tree") {

TEST_CASE("single edge") {
  std::vector<Edge> e{{0, 1}};
  auto t = build_tree(e, 1);
  CHECK(t.size() == 2);
  CHECK(t.parent(0) == 1);
  CHECK_FALSE(t.parent(1).has_value());
  CHECK(std::vector<Vertex>(t.postorder().begin(), t.postorder().end()) == std::vector<Vertex>{0, 1});
}

TEST_CASE("star postorder visits children in ascending order") {
  std::vector<Edge> e{{2, 3}, {0, 3}, {1, 3}};
  auto t = build_tree(e, 3);
  CHECK(std::vector<Vertex>(t.postorder().begin(), t.postorder().end()) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(t.degree(3) == 3);
  CHECK(t.is_leaf(0));
}

TEST_CASE("postorder lists children before parents, root last") {
  auto t = limits::t_lmn({2, 3, 4});
  std::vector<std::size_t> pos(t.size());
  auto order = t.postorder();
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  CHECK(order.back() == t.root());
  for (auto [c, p] : t.edges()) CHECK(pos[c] < pos[p]);
}

TEST_CASE("invalid edge lists") {
  std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(build_tree(cycle, 0), Error);
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(build_tree(loop, 0), NotATree);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(build_tree(dup, 0), NotATree);
  std::vector<Edge> bad{{0, 5}};
  CHECK_THROWS_AS(build_tree(bad, 0), BadVertexId);
  std::vector<Edge> ok{{0, 1}};
  CHECK_THROWS_AS(build_tree(ok, 2), BadVertexId);
}

TEST_CASE("reroot keeps the edge set") {
  auto t = limits::t_lmn({1, 2, 2});
  auto r = reroot(t, 0);
  CHECK(r.root() == 0);
  auto norm = [](const RootedTree& x) {
    std::vector<Edge> out;
    for (auto [a, b] : x.edges()) out.push_back(std::minmax(a, b));
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(norm(t) == norm(r));
}

TEST_CASE("tree file round trip") {
  std::istringstream in("# a path\n1 2\n\n2 3  # middle\n3 4\nroot 2\n");
  auto t = parse_tree(in);
  CHECK(t.size() == 4);
  CHECK(t.root() == 1);
  std::ostringstream out;
  write_tree(out, t);
  std::istringstream again(out.str());
  auto t2 = parse_tree(again);
  CHECK(t2.root() == t.root());
  CHECK(t2.edges() == t.edges());

  std::istringstream no_root("1 3\n2 3\n");
  CHECK(parse_tree(no_root).root() == 2);

  std::istringstream junk("1 x\n");
  CHECK_THROWS_AS(parse_tree(junk), InputError);
  CHECK_THROWS_AS(read_tree_file("/nonexistent/tree.txt"), InputError);
}

}  // TEST_SUITE
