#include "treeloc/signs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <string>

#include "treeloc/errors.hpp"

namespace treeloc::signs {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order(int n) {
  if (n < 3) throw OutOfDomain("tree order n must be at least 3, got " + std::to_string(n));
}

void require_admissible(const PendantConfig& cfg) {
  if (!in_admissible_set(cfg)) {
    throw OutOfDomain("(n, r) = (" + std::to_string(cfg.n) + ", " + std::to_string(cfg.r) +
                      ") is outside n >= 8, 1 <= r <= floor(n/4)");
  }
}

// r = 0 is accepted wherever the path sequence x_j itself is meant.
void require_admissible_or_path(const PendantConfig& cfg) {
  if (cfg.r == 0 && cfg.n >= 8) return;
  require_admissible(cfg);
}

recurrence::Params average_params(int n) { return {2.0 / n, -1.0}; }
recurrence::ExactParams exact_average_params(int n) { return {Rational(2, n), Rational(-1)}; }

}  // namespace

bool in_admissible_set(const PendantConfig& cfg) { return cfg.n >= 8 && cfg.r >= 1 && cfg.r <= cfg.n / 4; }

Rational initial_value_exact(const PendantConfig& cfg) {
  require_order(cfg.n);
  if (cfg.r < 0) throw OutOfDomain("r must be non-negative");
  Rational x1(2 - cfg.n, cfg.n);
  x1.canonicalize();
  Rational x2 = Rational(2, cfg.n) - 1 / x1;
  return Rational(x1 + cfg.r * (1 - 1 / x2));
}

double initial_value(const PendantConfig& cfg) { return initial_value_exact(cfg).get_d(); }

recurrence::OrbitResult<double> b_sequence(const PendantConfig& cfg, std::size_t count) {
  return recurrence::iterate(average_params(cfg.n), initial_value(cfg), count);
}

recurrence::OrbitResult<Rational> b_sequence_exact(const PendantConfig& cfg, std::size_t count) {
  return recurrence::iterate(exact_average_params(cfg.n), initial_value_exact(cfg), count);
}

Rational r0(int n) {
  require_order(n);
  Rational v(mpz_class(n - 2) * (n * n + 2 * n - 4), mpz_class(4) * n * (n - 1));
  v.canonicalize();
  return v;
}

double phi_angle(int n) {
  require_order(n);
  return std::atan(std::sqrt(static_cast<double>(n) * n - 1.0));
}

double period_n(int n) { return kPi / phi_angle(n); }

double phase_shift(const PendantConfig& cfg) {
  double root = std::sqrt(static_cast<double>(cfg.n) * cfg.n - 1.0);
  double b1 = initial_value(cfg);
  return std::atan((1.0 - cfg.n * b1) / root) - std::atan(root);
}

double omega_r(const PendantConfig& cfg) {
  require_admissible(cfg);
  return phase_shift(cfg);
}

recurrence::Type3Solution closed_form(const PendantConfig& cfg) {
  auto sol = recurrence::solve(average_params(cfg.n), initial_value(cfg));
  return std::get<recurrence::Type3Solution>(sol);
}

double h_function(int n, int r, int m) {
  PendantConfig cfg{n, r};
  require_admissible(cfg);
  double phi = phi_angle(n);
  double P = kPi / phi;
  double w = phase_shift(cfg);
  double atan_cot = std::atan(1.0 / std::tan(phi));
  return 1.0 / (P - 2) + (w - atan_cot) / (phi * (P - 2)) - m * P / (P - 2);
}

long k0(const PendantConfig& cfg) {
  return static_cast<long>(std::floor(h_function(cfg.n, cfg.r, 0)));
}

double j_star(const PendantConfig& cfg) {
  require_admissible(cfg);
  recurrence::ClosedFormSolution sol = closed_form(cfg);
  double P = period_n(cfg.n);
  auto breaks = recurrence::zeros_and_poles(sol, 0.0, P + 1.0);
  for (double z : breaks.zeros) {
    if (z > 0) return z;
  }
  throw PatternNotFound("no positive zero within one period");
}

int mlas(const PendantConfig& cfg) {
  if (cfg.r == 0) {
    require_admissible_or_path(cfg);
    return mlas({cfg.n, 1}) + 2;
  }
  require_admissible(cfg);
  return static_cast<int>(2 * k0(cfg) + 2);
}

int mlas_direct(const PendantConfig& cfg, std::optional<int> j_max) {
  require_admissible_or_path(cfg);
  const int limit = j_max.value_or(kDefaultScanFactor * cfg.n);
  auto params = exact_average_params(cfg.n);
  Rational b = initial_value_exact(cfg);
  if (sgn(b) >= 0) throw PatternNotFound("b_1 is not negative; no alternating pattern to measure");
  for (int j = 2; j <= limit; ++j) {
    b = params.alpha() + params.gamma() / b;
    int s = sgn(b);
    if (s == 0) {
      throw PatternNotFound("b_" + std::to_string(j) + " = 0 exactly; 2 - 2/n is an eigenvalue");
    }
    if (j % 2 == 1 && s > 0) return j - 1;
  }
  throw PatternNotFound("no positive odd-indexed term up to j = " + std::to_string(limit));
}

int mlas_lower_bound_raw(const PendantConfig& cfg) {
  require_admissible(cfg);
  auto base = static_cast<int>(std::floor(kPi / 8.0 * (cfg.n - 2)));
  return 2 * base - 4 * (cfg.r - 1);
}

int mlas_lower_bound(const PendantConfig& cfg) { return std::max(mlas_lower_bound_raw(cfg), 2); }

MlasReport mlas_report(const PendantConfig& cfg) {
  require_admissible(cfg);
  MlasReport rep{};
  rep.n = cfg.n;
  rep.r = cfg.r;
  rep.phi_angle = phi_angle(cfg.n);
  rep.period = kPi / rep.phi_angle;
  rep.omega_r = omega_r(cfg);
  rep.j_star = j_star(cfg);
  rep.k0 = k0(cfg);
  rep.mlas = static_cast<int>(2 * rep.k0 + 2);
  rep.lower_bound_raw = mlas_lower_bound_raw(cfg);
  rep.lower_bound = std::max(rep.lower_bound_raw, 2);
  auto seq = b_sequence_exact(cfg, static_cast<std::size_t>(2 * rep.k0 + 3));
  if (!seq.completed()) throw PatternNotFound("b sequence hit zero before index 2 k0 + 3");
  rep.b_last_even = seq.at(static_cast<std::size_t>(2 * rep.k0 + 2)).get_d();
  rep.b_first_flip = seq.at(static_cast<std::size_t>(2 * rep.k0 + 3)).get_d();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct SideLayout {
  Vertex star;
  Vertex top;  // path vertex adjacent to the center
};

SideLayout add_side(std::vector<Edge>& edges, Vertex& next, int pendants, int half_length) {
  Vertex star = next++;
  for (int i = 0; i < pendants; ++i) {
    Vertex mid = next++;
    Vertex leaf = next++;
    edges.emplace_back(mid, star);
    edges.emplace_back(leaf, mid);
  }
  Vertex prev = star;
  for (int i = 1; i < 2 * half_length; ++i) {
    Vertex v = next++;
    edges.emplace_back(prev, v);
    prev = v;
  }
  return {star, prev};
}

Sign sign_from(int s) {
  if (s < 0) return Sign::Negative;
  if (s > 0) return Sign::Positive;
  return Sign::Zero;
}

}  // namespace

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

DoubleBroomTree double_broom_tree(const DoubleBroom& b) {
  if (b.r < 1 || b.R < 1 || b.q < 1 || b.p < 1) {
    throw PreconditionViolated("double broom needs r, q, p, R >= 1");
  }
  std::vector<Edge> edges;
  Vertex next = 0;
  SideLayout left = add_side(edges, next, b.r, b.q);
  SideLayout right = add_side(edges, next, b.R, b.p);
  Vertex center = next++;
  edges.emplace_back(left.top, center);
  edges.emplace_back(right.top, center);
  return {build_tree(edges, center), center, left.star, right.star};
}

int sigma(const RootedTree& tree) {
  const auto n = static_cast<long>(tree.size());
  auto lap = treediag::build_exact_matrix(tree, treediag::MatrixKind::Laplacian);
  Rational d(2 * n - 2, n);
  d.canonicalize();
  return static_cast<int>(treediag::locate(lap, d).above);
}

BroomSigma double_broom_sigma(const DoubleBroom& b) {
  DoubleBroomTree built = double_broom_tree(b);
  const int n = b.order();
  auto lap = treediag::build_exact_matrix(built.tree, treediag::MatrixKind::Laplacian);
  Rational d(2 * n - 2, n);
  d.canonicalize();

  BroomSigma out{};
  out.inertia = treediag::locate(lap, d);
  auto values = treediag::diagonalize(lap, d);
  Sign direct_root = sign_from(sgn(values[built.center]));

  const int quarter = (n - 1) / 4;
  bool met = b.r < quarter && b.R < quarter;
  if (met) {
    met = 2 * b.q <= mlas_lower_bound({n, b.r}) && 2 * b.p <= mlas_lower_bound({n, b.R});
  }
  out.hypotheses_met = met;

  if (!met) {
    out.sigma = static_cast<int>(out.inertia.above);
    out.root_sign = direct_root;
    out.agrees_with_locate = true;
    return out;
  }

  auto left = b_sequence_exact({n, b.r}, static_cast<std::size_t>(2 * b.q));
  auto right = b_sequence_exact({n, b.R}, static_cast<std::size_t>(2 * b.p));
  if (!left.completed() || !right.completed()) {
    throw PatternNotFound("pendant-path sequence hit zero inside the broom handle");
  }
  Rational root = Rational(2, n) - 1 / left.values.back() - 1 / right.values.back();
  out.root_sign = sign_from(sgn(root));
  out.sigma = b.r + b.R + b.q + b.p + (out.root_sign == Sign::Positive ? 1 : 0);
  out.agrees_with_locate =
      static_cast<std::size_t>(out.sigma) == out.inertia.above && out.root_sign == direct_root;
  return out;
}

RootedTree star_up(const RootedTree& tree, const StarUpSite& site) {
  const std::size_t n = tree.size();
  if (site.star >= n || site.anchor >= n) throw BadVertexId("star-up site names a vertex outside the tree");
  if (n < 8) throw PreconditionViolated("star-up needs a tree with at least 8 vertices");

  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : tree.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // Path star -> anchor.
  std::vector<Vertex> from(n, n);
  std::queue<Vertex> queue;
  queue.push(site.star);
  from[site.star] = site.star;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : adj[v]) {
      if (from[w] == n) {
        from[w] = v;
        queue.push(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = site.anchor; v != site.star; v = from[v]) path.push_back(v);
  path.push_back(site.star);
  std::reverse(path.begin(), path.end());  // star, w1, ..., anchor

  const std::size_t interior = path.size() - 2;
  if (path.size() < 2 || interior < 2) {
    throw PreconditionViolated("path from star to anchor needs at least 2 interior vertices");
  }
  if (adj[site.anchor].size() < 2) throw PreconditionViolated("anchor must not be a leaf");
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (adj[path[i]].size() != 2) {
      throw PreconditionViolated("interior path vertex " + std::to_string(path[i]) + " has degree != 2");
    }
  }

  int pendants = 0;
  for (Vertex w : adj[site.star]) {
    if (w == path[1]) continue;
    bool pendant_p2 = adj[w].size() == 2 && adj[adj[w][0] == site.star ? adj[w][1] : adj[w][0]].size() == 1;
    if (!pendant_p2) {
      throw PreconditionViolated("star vertex has a branch at " + std::to_string(w) + " that is not a pendant P2");
    }
    ++pendants;
  }
  if (pendants > static_cast<int>(n / 4) - 1) {
    throw PreconditionViolated("star vertex carries " + std::to_string(pendants) + " P2's, more than floor(n/4) - 1");
  }

  const Vertex w2 = path[2];
  const Vertex w3 = path[3];
  std::vector<Edge> edges;
  for (auto e : tree.edges()) {
    if (std::minmax(e.first, e.second) == std::minmax(w2, w3)) continue;
    edges.push_back(e);
  }
  edges.emplace_back(site.star, w3);
  return build_tree(edges, tree.root());
}

}  // namespace treeloc::signs
