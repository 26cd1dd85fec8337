#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "treeloc/errors.hpp"
#include "treeloc/oracle.hpp"

using namespace treeloc;
using treediag::MatrixKind;

namespace {

RootedTree path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return build_tree(e, n - 1);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("small paths") {
  auto p2 = oracle::dense_spectrum(treediag::build_matrix(path(2), MatrixKind::Adjacency));
  CHECK(p2.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(p2.eigenvalues[1] == doctest::Approx(1.0));

  auto p3 = oracle::dense_spectrum(treediag::build_matrix(path(3), MatrixKind::Adjacency)).eigenvalues;
  CHECK(p3[0] == doctest::Approx(-std::sqrt(2.0)));
  CHECK(std::abs(p3[1]) < 1e-12);
  CHECK(p3[2] == doctest::Approx(std::sqrt(2.0)));

  auto l3 = oracle::dense_spectrum(treediag::build_matrix(path(3), MatrixKind::Laplacian)).eigenvalues;
  CHECK(std::abs(l3[0]) < 1e-12);
  CHECK(l3[1] == doctest::Approx(1.0));
  CHECK(l3[2] == doctest::Approx(3.0));
}

TEST_CASE("trace and Frobenius identities") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto t = oracle::random_tree(3 + seed % 20, seed);
    for (auto kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
      auto m = treediag::build_matrix(t, kind);
      auto s = oracle::dense_spectrum(m).eigenvalues;
      auto dense = oracle::to_dense(m);
      double trace = 0, frob = 0;
      for (std::size_t i = 0; i < t.size(); ++i) trace += dense[i * t.size() + i];
      for (double x : dense) frob += x * x;
      double sum = std::accumulate(s.begin(), s.end(), 0.0);
      double sq = 0;
      for (double x : s) sq += x * x;
      CHECK(std::abs(sum - trace) <= 1e-9 * t.size());
      CHECK(std::abs(sq - frob) <= 1e-9 * t.size());
      CHECK(std::is_sorted(s.begin(), s.end()));
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(oracle::dense_spectrum(treediag::build_matrix(path(65), MatrixKind::Adjacency)), SizeLimit);
  CHECK_NOTHROW(oracle::dense_spectrum(treediag::build_matrix(path(64), MatrixKind::Adjacency)));
}

TEST_CASE("random trees") {
  CHECK(oracle::random_tree(1, 3).size() == 1);
  auto two = oracle::random_tree(2, 99);
  CHECK(two.size() == 2);
  CHECK(two.edges().size() == 1);

  auto a = oracle::random_tree(8, 42);
  auto b = oracle::random_tree(8, 42);
  CHECK(a.edges() == b.edges());
  CHECK(a.root() == 7);

  // Different seeds should usually differ.
  int same = 0;
  for (std::uint64_t s = 0; s < 20; ++s) same += oracle::random_tree(10, s).edges() == oracle::random_tree(10, s + 1).edges();
  CHECK(same < 3);
}

TEST_CASE("Pruefer decoding") {
  // Sequence (3, 3, 3) over 5 vertices is the star centered at 3 plus the edge 3-4.
  auto t = oracle::tree_from_pruefer({3, 3, 3}, 4);
  CHECK(t.degree(3) == 4);
  CHECK(t.size() == 5);
  // Every labelled tree on 4 vertices appears: 4^2 = 16 distinct sequences, 16 distinct trees.
  std::set<std::vector<Edge>> seen;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      auto tr = oracle::tree_from_pruefer({a, b}, 3);
      std::vector<Edge> e;
      for (auto [x, y] : tr.edges()) e.push_back(std::minmax(x, y));
      std::sort(e.begin(), e.end());
      seen.insert(e);
    }
  }
  CHECK(seen.size() == 16);
}

}  // TEST_SUITE
