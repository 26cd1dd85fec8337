#pragma once

// Starlike trees T_{l,m,n} and the spectral-radius limits of T_{1,n,n}.

#include "treeloc/tree.hpp"
#include "treeloc/treediag.hpp"

namespace treeloc::limits {

// Three paths with l, m and n_arm vertices, each joined by one end to a
// common center.
struct StarlikeSpec {
  int l;
  int m;
  int n_arm;

  int order() const { return l + m + n_arm + 1; }
};

// Rooted at the center, which gets the largest id. Arm vertices are numbered
// arm by arm from the leaf inward.
RootedTree t_lmn(const StarlikeSpec& spec);

// sqrt(2 + sqrt(5)), the limit of the adjacency radius of T_{1,n,n}.
double shearer_constant();
// Real root of x^3 - 4x - 4.
double guo_epsilon();
// 2 + guo_epsilon(), the limit of the Laplacian radius of T_{1,n,n}.
double guo_constant();

double radius_1nn(int n_arm, treediag::MatrixKind kind, double tol);

// limit - radius(T_{1,n,n}); positive, shrinking with n_arm.
double adjacency_limit_gap(int n_arm, double tol);
double laplacian_limit_gap(int n_arm, double tol);

// Diagonal value left at the center of T_{1,n,n} when the adjacency matrix is
// diagonalized at lambda: -lambda - 1/z_1 - 2/z_n, with z_1 = -lambda and
// z_{k+1} = -lambda - 1/z_k along each long arm. Vanishes at eigenvalues.
double center_residual(int n_arm, double lambda);

}  // namespace treeloc::limits
