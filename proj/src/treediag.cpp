#include "treeloc/treediag.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "treeloc/errors.hpp"

namespace treeloc::treediag {

const char* to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::NormalizedLaplacian: return "normalized";
  }
  return "?";
}

MatrixKind parse_matrix_kind(const std::string& name) {
  if (name == "adjacency") return MatrixKind::Adjacency;
  if (name == "laplacian") return MatrixKind::Laplacian;
  if (name == "normalized") return MatrixKind::NormalizedLaplacian;
  throw InputError("unknown matrix kind '" + name + "'");
}

template <class T>
SymmetricTreeMatrix<T> make_matrix(RootedTree tree, std::vector<T> diag, std::vector<T> weight) {
  const std::size_t n = tree.size();
  if (diag.size() != n || weight.size() != n) throw InputError("matrix data does not match the tree size");
  for (Vertex v = 0; v < n; ++v) {
    if (v == tree.root()) {
      weight[v] = T(0);
    } else if (sign_of(weight[v], 0.0) == 0) {
      throw InputError("edge above vertex " + std::to_string(v) + " has zero weight");
    }
  }
  return {std::move(tree), std::move(diag), std::move(weight)};
}

namespace {

template <class T>
SymmetricTreeMatrix<T> build_generic(const RootedTree& tree, MatrixKind kind) {
  const std::size_t n = tree.size();
  std::vector<T> diag(n, T(0));
  std::vector<T> weight(n, T(0));
  for (Vertex v = 0; v < n; ++v) {
    auto deg = static_cast<long>(tree.degree(v));
    auto p = tree.parent(v);
    switch (kind) {
      case MatrixKind::Adjacency:
        diag[v] = T(0);
        if (p) weight[v] = T(1);
        break;
      case MatrixKind::Laplacian:
        diag[v] = T(deg);
        if (p) weight[v] = T(-1);
        break;
      case MatrixKind::NormalizedLaplacian:
        if constexpr (std::is_same_v<T, double>) {
          diag[v] = 1.0;
          if (p) weight[v] = -1.0 / std::sqrt(static_cast<double>(deg * static_cast<long>(tree.degree(*p))));
        } else {
          throw Unsupported("normalized Laplacian has irrational entries; use the double backend");
        }
        break;
    }
  }
  return make_matrix(tree, std::move(diag), std::move(weight));
}

}  // namespace

SymmetricTreeMatrix<double> build_matrix(const RootedTree& tree, MatrixKind kind) {
  return build_generic<double>(tree, kind);
}

SymmetricTreeMatrix<Rational> build_exact_matrix(const RootedTree& tree, MatrixKind kind) {
  return build_generic<Rational>(tree, kind);
}

template <class T>
SymmetricTreeMatrix<T> reroot(const SymmetricTreeMatrix<T>& m, Vertex root) {
  std::map<Edge, T> by_edge;
  for (auto [child, parent] : m.tree.edges()) by_edge.emplace(std::minmax(child, parent), m.weight[child]);
  RootedTree t = treeloc::reroot(m.tree, root);
  std::vector<T> weight(t.size(), T(0));
  for (auto [child, parent] : t.edges()) weight[child] = by_edge.at(std::minmax(child, parent));
  return make_matrix(std::move(t), m.diag, std::move(weight));
}

template <class T>
std::vector<T> diagonalize(const SymmetricTreeMatrix<T>& m, const T& alpha, double zero_rel_tol) {
  const RootedTree& tree = m.tree;
  const std::size_t n = tree.size();
  std::vector<T> a(n);
  double scale = 1.0;
  for (Vertex v = 0; v < n; ++v) {
    a[v] = m.diag[v] - alpha;
    scale = std::max(scale, magnitude(a[v]));
  }
  const double zero_tol = zero_rel_tol * scale;

  // detached[v]: the edge from v to its parent has been removed.
  std::vector<bool> detached(n, false);
  for (Vertex v : tree.postorder()) {
    bool has_child = false;
    std::optional<Vertex> zero_child;
    for (Vertex c : tree.children(v)) {
      if (detached[c]) continue;
      has_child = true;
      if (!zero_child && is_zero(a[c], zero_tol)) zero_child = c;
    }
    if (!has_child) continue;

    if (zero_child) {
      const T& w = m.weight[*zero_child];
      a[v] = T(-(w * w) / 2);
      a[*zero_child] = T(2);
      if (tree.parent(v)) detached[v] = true;
    } else {
      for (Vertex c : tree.children(v)) {
        if (detached[c]) continue;
        const T& w = m.weight[c];
        a[v] = T(a[v] - (w * w) / a[c]);
      }
    }
  }
  return a;
}

template <class T>
InertiaTriple locate(const SymmetricTreeMatrix<T>& m, const T& alpha, double zero_rel_tol) {
  auto values = diagonalize(m, alpha, zero_rel_tol);
  double scale = 1.0;
  for (Vertex v = 0; v < m.size(); ++v) scale = std::max(scale, magnitude(T(m.diag[v] - alpha)));
  const double zero_tol = zero_rel_tol * scale;
  InertiaTriple out;
  for (const T& x : values) {
    switch (sign_of(x, zero_tol)) {
      case -1: ++out.below; break;
      case 0: ++out.equal; break;
      default: ++out.above; break;
    }
  }
  return out;
}

Bracket gershgorin_bounds(const SymmetricTreeMatrix<double>& m) {
  const std::size_t n = m.size();
  std::vector<double> radius(n, 0.0);
  for (auto [child, parent] : m.tree.edges()) {
    radius[child] += std::abs(m.weight[child]);
    radius[parent] += std::abs(m.weight[child]);
  }
  Bracket b{m.diag[0] - radius[0], m.diag[0] + radius[0]};
  for (Vertex v = 1; v < n; ++v) {
    b.lo = std::min(b.lo, m.diag[v] - radius[v]);
    b.hi = std::max(b.hi, m.diag[v] + radius[v]);
  }
  return b;
}

double spectral_radius(const SymmetricTreeMatrix<double>& m, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto [lo, hi] = gershgorin_bounds(m);
  // Invariant: lambda_max in [lo, hi]. Counts use a pure sign test; a tolerance
  // band here would shift the answer by more than tol near the eigenvalue.
  for (int it = 0; it < kMaxBisection && hi - lo > 2 * tol; ++it) {
    double mid = lo + (hi - lo) / 2;
    if (locate(m, mid, 0.0).above == 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

double kth_eigenvalue(const SymmetricTreeMatrix<double>& m, std::size_t k, double tol) {
  if (k < 1 || k > m.size()) {
    throw BadIndex("eigenvalue index " + std::to_string(k) + " outside 1.." + std::to_string(m.size()));
  }
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto [lo, hi] = gershgorin_bounds(m);
  // Invariant: lambda_k in [lo, hi].
  for (int it = 0; it < kMaxBisection && hi - lo > 2 * tol; ++it) {
    double mid = lo + (hi - lo) / 2;
    if (locate(m, mid, 0.0).below >= k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

template SymmetricTreeMatrix<double> make_matrix(RootedTree, std::vector<double>, std::vector<double>);
template SymmetricTreeMatrix<Rational> make_matrix(RootedTree, std::vector<Rational>, std::vector<Rational>);
template SymmetricTreeMatrix<double> reroot(const SymmetricTreeMatrix<double>&, Vertex);
template SymmetricTreeMatrix<Rational> reroot(const SymmetricTreeMatrix<Rational>&, Vertex);
template std::vector<double> diagonalize(const SymmetricTreeMatrix<double>&, const double&, double);
template std::vector<Rational> diagonalize(const SymmetricTreeMatrix<Rational>&, const Rational&, double);
template InertiaTriple locate(const SymmetricTreeMatrix<double>&, const double&, double);
template InertiaTriple locate(const SymmetricTreeMatrix<Rational>&, const Rational&, double);

}  // namespace treeloc::treediag
