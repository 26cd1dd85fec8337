#pragma once

// Symmetric matrices whose graph is a tree, and eigenvalue location on them
// by congruence diagonalization performed directly on the tree.

#include <cstddef>
#include <vector>

#include "treeloc/arith.hpp"
#include "treeloc/tree.hpp"

namespace treeloc::treediag {

enum class MatrixKind { Adjacency, Laplacian, NormalizedLaplacian };

const char* to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(const std::string& name);  // adjacency|laplacian|normalized

// diag[v] = m_{v,v}; weight[v] = m_{v,parent(v)} for every non-root v.
// The root's weight slot is unused and held at zero.
template <class T>
struct SymmetricTreeMatrix {
  RootedTree tree;
  std::vector<T> diag;
  std::vector<T> weight;

  std::size_t size() const { return tree.size(); }
};

// Validates sizes and that every tree edge carries a nonzero weight.
template <class T>
SymmetricTreeMatrix<T> make_matrix(RootedTree tree, std::vector<T> diag, std::vector<T> weight);

// Adjacency: diag 0, weights 1. Laplacian: diag = degree, weights -1.
// NormalizedLaplacian: diag 1, weight(u,v) = -1/sqrt(deg u deg v); double only.
SymmetricTreeMatrix<double> build_matrix(const RootedTree& tree, MatrixKind kind);
SymmetricTreeMatrix<Rational> build_exact_matrix(const RootedTree& tree, MatrixKind kind);

// Same matrix, rows and columns unchanged, tree rooted elsewhere.
template <class T>
SymmetricTreeMatrix<T> reroot(const SymmetricTreeMatrix<T>& m, Vertex root);

// Relative zero threshold for the double backend: |a(v)| <= kZeroRelTol *
// max(1, max_v |m_vv - alpha|) counts as zero.
inline constexpr double kZeroRelTol = 1e-10;

// Diagonal of a matrix congruent to M - alpha I, indexed by vertex.
template <class T>
std::vector<T> diagonalize(const SymmetricTreeMatrix<T>& m, const T& alpha, double zero_rel_tol = kZeroRelTol);

struct InertiaTriple {
  std::size_t below = 0;  // eigenvalues < alpha
  std::size_t equal = 0;
  std::size_t above = 0;  // eigenvalues > alpha

  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

template <class T>
InertiaTriple locate(const SymmetricTreeMatrix<T>& m, const T& alpha, double zero_rel_tol = kZeroRelTol);

struct Bracket {
  double lo;
  double hi;
};

// Union of the Gershgorin discs.
Bracket gershgorin_bounds(const SymmetricTreeMatrix<double>& m);

inline constexpr int kMaxBisection = 200;

// Largest eigenvalue within tol, by bisection on locate().above.
double spectral_radius(const SymmetricTreeMatrix<double>& m, double tol);

// k-th smallest eigenvalue (1-based) within tol, by bisection on locate().below.
double kth_eigenvalue(const SymmetricTreeMatrix<double>& m, std::size_t k, double tol);

}  // namespace treeloc::treediag
