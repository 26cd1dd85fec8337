#pragma once

// Sign patterns of the Laplacian average-degree recurrence on generalized
// pendant paths, and the double-broom / star-up constructions built on them.
//
// For a tree of order n, locating d = 2 - 2/n on a path carrying r pendant
// P2's gives
//
//   b_1 = x_1 + r (1 - 1/x_2),  x_1 = -1 + 2/n,  x_2 = 2/n - 1/x_1,
//   b_{j+1} = 2/n - 1/b_j,
//
// a Type3 recurrence with rho = 1, phi = atan(sqrt(n^2 - 1)) and period
// P = pi/phi > 2. Most functions here require (n, r) in the admissible set
// A = {n >= 8, 1 <= r <= floor(n/4)} and throw OutOfDomain otherwise.

#include <cstddef>
#include <optional>

#include "treeloc/arith.hpp"
#include "treeloc/recurrence.hpp"
#include "treeloc/tree.hpp"
#include "treeloc/treediag.hpp"

namespace treeloc::signs {

struct PendantConfig {
  int n;  // tree order, >= 3
  int r;  // number of pendant P2's, >= 0
};

bool in_admissible_set(const PendantConfig& cfg);

Rational initial_value_exact(const PendantConfig& cfg);  // b_1
double initial_value(const PendantConfig& cfg);

recurrence::OrbitResult<double> b_sequence(const PendantConfig& cfg, std::size_t count);
recurrence::OrbitResult<Rational> b_sequence_exact(const PendantConfig& cfg, std::size_t count);

// Threshold with b_1(r) < 0 exactly when r <= floor(r0).
Rational r0(int n);

double phi_angle(int n);  // atan(sqrt(n^2 - 1))
double period_n(int n);   // pi / phi_angle(n)

// Phase of the closed form for any n >= 3, r >= 0 (r = 0 gives -phi/2).
double phase_shift(const PendantConfig& cfg);
// phase_shift restricted to A; lies in (-pi/2, -pi/4) there.
double omega_r(const PendantConfig& cfg);

// Closed form of b_j as a recurrence solution (Type3, rho = 1).
recurrence::Type3Solution closed_form(const PendantConfig& cfg);

// Candidate first-positive-root index for the odd-term sign change, shifted
// by m whole periods.
double h_function(int n, int r, int m);

long k0(const PendantConfig& cfg);          // floor(H(n, r, 0))
double j_star(const PendantConfig& cfg);    // first positive zero of the extended b_j
int mlas(const PendantConfig& cfg);         // 2 k0 + 2; for r = 0 the path value mlas_1 + 2

inline constexpr int kDefaultScanFactor = 4;

// Sign scan of the exact sequence; the oracle for mlas(). Throws
// PatternNotFound when b_1 >= 0 or no positive odd-indexed term appears by
// j_max (default 4n).
int mlas_direct(const PendantConfig& cfg, std::optional<int> j_max = std::nullopt);

int mlas_lower_bound_raw(const PendantConfig& cfg);  // 2 floor(pi (n-2) / 8) - 4 (r - 1)
int mlas_lower_bound(const PendantConfig& cfg);      // max(raw, 2)

struct MlasReport {
  int n;
  int r;
  double period;
  double phi_angle;
  double omega_r;
  double j_star;
  long k0;
  int mlas;
  int lower_bound;      // max(raw, 2)
  int lower_bound_raw;
  double b_last_even;   // b_{2 k0 + 2}
  double b_first_flip;  // b_{2 k0 + 3}, the first positive odd-indexed term
};

MlasReport mlas_report(const PendantConfig& cfg);

// ---------------------------------------------------------------------------
// Double brooms.

// Two star vertices carrying r and R pendant P2's. Each star is the far end of
// a path with 2q (resp. 2p) vertices, the star included, hanging from a
// degree-2 center. n = 2r + 2R + 2q + 2p + 1.
struct DoubleBroom {
  int r;
  int q;
  int p;
  int R;

  int order() const { return 2 * r + 2 * R + 2 * q + 2 * p + 1; }
};

struct DoubleBroomTree {
  RootedTree tree;  // rooted at center
  Vertex center;
  Vertex left_star;   // carries r P2's
  Vertex right_star;  // carries R P2's
};

DoubleBroomTree double_broom_tree(const DoubleBroom& b);

enum class Sign { Negative, Zero, Positive };
const char* to_string(Sign s);

struct BroomSigma {
  int sigma;                 // Laplacian eigenvalues strictly above 2 - 2/n
  Sign root_sign;            // sign of the center in the diagonalization at 2 - 2/n
  bool hypotheses_met;       // closed-form route used
  bool agrees_with_locate;   // closed-form sigma matches a direct exact locate
  treediag::InertiaTriple inertia;  // direct exact locate on the built tree
};

// sigma(T) from the pendant-path analysis when its hypotheses hold
// (2q, 2p within the mlas lower bounds, r, R < floor((n-1)/4)); otherwise the
// direct locate result with hypotheses_met = false.
BroomSigma double_broom_sigma(const DoubleBroom& b);

// Number of Laplacian eigenvalues strictly above the average degree.
int sigma(const RootedTree& tree);

// Star-up: `star` has only pendant P2's besides the path to `anchor`, whose
// q >= 2 interior vertices all have degree 2. The two path vertices next to
// the star become a new pendant P2 on it and the path shrinks by two.
struct StarUpSite {
  Vertex star;
  Vertex anchor;
};

RootedTree star_up(const RootedTree& tree, const StarUpSite& site);

}  // namespace treeloc::signs
