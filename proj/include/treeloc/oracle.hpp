#pragma once

// Brute-force references for tests: dense symmetric eigenvalues and
// reproducible random labelled trees.

#include <cstdint>
#include <vector>

#include "treeloc/tree.hpp"
#include "treeloc/treediag.hpp"

namespace treeloc::oracle {

inline constexpr std::size_t kMaxDenseSize = 64;
inline constexpr double kDefaultTol = 1e-10;

struct DenseSpectrum {
  std::vector<double> eigenvalues;  // ascending
  double tolerance;
};

// Row-major n x n expansion of the tree matrix.
std::vector<double> to_dense(const treediag::SymmetricTreeMatrix<double>& m);

// All eigenvalues of the dense matrix. Throws SizeLimit when n > 64.
DenseSpectrum dense_spectrum(const treediag::SymmetricTreeMatrix<double>& m, double tol = kDefaultTol);

// Uniform random labelled tree on n vertices, rooted at vertex n-1.
//
// The Pruefer sequence has n-2 entries. Entry i is drawn from a
// std::mt19937_64 seeded with `seed`: raw 64-bit outputs x are rejected while
// x >= 2^64 - (2^64 mod n), and the first accepted x gives x mod n. The
// sequence is decoded with the usual smallest-leaf-first rule.
RootedTree random_tree(std::size_t n, std::uint64_t seed);

// Decodes a Pruefer sequence over 0..n-1 (n = seq.size() + 2).
RootedTree tree_from_pruefer(const std::vector<Vertex>& seq, Vertex root);

}  // namespace treeloc::oracle
