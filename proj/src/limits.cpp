#include "treeloc/limits.hpp"

#include <cmath>
#include <string>

#include "treeloc/errors.hpp"

namespace treeloc::limits {

namespace {

void require_arm(int n_arm) {
  if (n_arm < 1) throw DomainError("arm length must be at least 1, got " + std::to_string(n_arm));
}

}  // namespace

RootedTree t_lmn(const StarlikeSpec& spec) {
  if (spec.l < 1 || spec.m < 1 || spec.n_arm < 1) throw DomainError("arm lengths must be positive");
  const auto center = static_cast<Vertex>(spec.order() - 1);
  std::vector<Edge> edges;
  Vertex next = 0;
  for (int len : {spec.l, spec.m, spec.n_arm}) {
    for (int i = 0; i < len; ++i, ++next) {
      edges.emplace_back(next, i + 1 < len ? next + 1 : center);
    }
  }
  return build_tree(edges, center);
}

double shearer_constant() { return std::sqrt(2.0 + std::sqrt(5.0)); }

double guo_epsilon() {
  const double c = std::cbrt(54.0 + 6.0 * std::sqrt(33.0));
  return c / 3.0 + 4.0 / c;
}

double guo_constant() { return 2.0 + guo_epsilon(); }

double radius_1nn(int n_arm, treediag::MatrixKind kind, double tol) {
  require_arm(n_arm);
  auto m = treediag::build_matrix(t_lmn({1, n_arm, n_arm}), kind);
  return treediag::spectral_radius(m, tol);
}

double adjacency_limit_gap(int n_arm, double tol) {
  return shearer_constant() - radius_1nn(n_arm, treediag::MatrixKind::Adjacency, tol);
}

double laplacian_limit_gap(int n_arm, double tol) {
  return guo_constant() - radius_1nn(n_arm, treediag::MatrixKind::Laplacian, tol);
}

double center_residual(int n_arm, double lambda) {
  require_arm(n_arm);
  double z = -lambda;
  for (int k = 1; k < n_arm; ++k) z = -lambda - 1.0 / z;
  return -lambda + 1.0 / lambda - 2.0 / z;
}

}  // namespace treeloc::limits
