#include "treeloc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <random>

#include <Eigen/Dense>

#include "treeloc/errors.hpp"

namespace treeloc::oracle {

std::vector<double> to_dense(const treediag::SymmetricTreeMatrix<double>& m) {
  const std::size_t n = m.size();
  std::vector<double> a(n * n, 0.0);
  for (Vertex v = 0; v < n; ++v) a[v * n + v] = m.diag[v];
  for (auto [child, parent] : m.tree.edges()) {
    a[child * n + parent] = m.weight[child];
    a[parent * n + child] = m.weight[child];
  }
  return a;
}

DenseSpectrum dense_spectrum(const treediag::SymmetricTreeMatrix<double>& m, double tol) {
  const std::size_t n = m.size();
  if (n > kMaxDenseSize) {
    throw SizeLimit("dense oracle limited to " + std::to_string(kMaxDenseSize) + " vertices, got " +
                    std::to_string(n));
  }
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto dense = to_dense(m);
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dense[i * n + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("dense eigensolver did not converge");
  DenseSpectrum out{{}, tol};
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

RootedTree tree_from_pruefer(const std::vector<Vertex>& seq, Vertex root) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw BadVertexId("Pruefer entry " + std::to_string(v) + " out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex u = leaves.top();
  leaves.pop();
  Vertex w = leaves.top();
  edges.emplace_back(u, w);
  return build_tree(edges, root);
}

RootedTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_tree needs n >= 1");
  if (n == 1) return build_tree({}, 0);
  if (n == 2) {
    std::vector<Edge> e{{0, 1}};
    return build_tree(e, 1);
  }
  std::mt19937_64 gen(seed);
  const std::uint64_t range = n;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of n not exceeding 2^64, minus one.
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::vector<Vertex> seq(n - 2);
  for (auto& entry : seq) {
    std::uint64_t x = gen();
    while (x > limit) x = gen();
    entry = static_cast<Vertex>(x % range);
  }
  return tree_from_pruefer(seq, n - 1);
}

}  // namespace treeloc::oracle
