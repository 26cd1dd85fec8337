#pragma once

// The rational recurrence x_{j+1} = phi(x_j), phi(t) = alpha + gamma / t.
//
// Iteration, the inverse map psi(t) = gamma / (t - alpha), forbidden initial
// values and orbit reversal are templates over the scalar type (double or
// Rational). The closed-form solution and its real-index extension are
// double-only because they involve square roots and trigonometry.

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treeloc/arith.hpp"
#include "treeloc/errors.hpp"

namespace treeloc::recurrence {

// Default absolute tolerances for the double backend.
inline constexpr double kZeroTol = 1e-12;
inline constexpr double kDeltaTol = 1e-12;
inline constexpr double kPoleTol = 1e-9;

template <class T>
class RecurrenceParams {
 public:
  RecurrenceParams(T alpha, T gamma) : alpha_(std::move(alpha)), gamma_(std::move(gamma)) {
    if (sign_of(gamma_, 0.0) == 0) throw DomainError("gamma must be nonzero");
  }

  const T& alpha() const { return alpha_; }
  const T& gamma() const { return gamma_; }

 private:
  T alpha_;
  T gamma_;
};

using Params = RecurrenceParams<double>;
using ExactParams = RecurrenceParams<Rational>;

template <class T>
T phi_apply(const RecurrenceParams<T>& p, const T& t, double zero_tol = kZeroTol) {
  if (is_zero(t, zero_tol)) throw DomainError("phi is undefined at t = 0");
  return T(p.alpha() + p.gamma() / t);
}

template <class T>
T psi_apply(const RecurrenceParams<T>& p, const T& t, double zero_tol = kZeroTol) {
  T shifted = t - p.alpha();
  if (is_zero(shifted, zero_tol)) throw DomainError("psi is undefined at t = alpha");
  return T(p.gamma() / shifted);
}

// Type1: Delta = 0, Type2: Delta > 0, Type3: Delta < 0.
enum class DeltaKind { Type1, Type2, Type3 };

struct DeltaClass {
  double delta;
  DeltaKind kind;
};

DeltaClass classify(const Params& p, double eps = kDeltaTol);
DeltaClass classify(const ExactParams& p);

const char* to_string(DeltaKind kind);

// Real roots of t^2 - alpha t - gamma, ascending.
std::vector<double> fixed_points(const Params& p, double eps = kDeltaTol);

template <class T>
struct OrbitResult {
  std::vector<T> values;  // values[0] is x_1
  // 1-based index of the term that hit zero; values.size() == *hit_zero.
  std::optional<std::size_t> hit_zero;

  bool completed() const { return !hit_zero.has_value(); }
  // x_j with a 1-based index.
  const T& at(std::size_t j) const { return values.at(j - 1); }
};

template <class T>
OrbitResult<T> iterate(const RecurrenceParams<T>& p, const T& x1, std::size_t count,
                       double zero_tol = kZeroTol) {
  if (is_zero(x1, zero_tol)) throw DomainError("initial value x1 must be nonzero");
  OrbitResult<T> out;
  out.values.reserve(count);
  T x = x1;
  for (std::size_t j = 1; j <= count; ++j) {
    if (j > 1) x = T(p.alpha() + p.gamma() / x);
    out.values.push_back(x);
    if (is_zero(x, zero_tol)) {
      out.hit_zero = j;
      break;
    }
  }
  return out;
}

// [psi(0), psi^2(0), ..., psi^count(0)]: starting the forward iteration at
// psi^k(0) reaches 0 after exactly k applications of phi.
template <class T>
std::vector<T> forbidden_initials(const RecurrenceParams<T>& p, std::size_t count,
                                  double zero_tol = kZeroTol) {
  std::vector<T> out;
  out.reserve(count);
  T y = T(0);
  for (std::size_t k = 1; k <= count; ++k) {
    T shifted = y - p.alpha();
    if (is_zero(shifted, zero_tol)) {
      throw DomainError("psi-orbit of 0 reaches alpha after " + std::to_string(k - 1) +
                        " steps; only finitely many forbidden initials");
    }
    y = T(p.gamma() / shifted);
    out.push_back(y);
  }
  return out;
}

// The unique x_1 whose forward orbit has x_r at index r, i.e. psi^{r-1}(x_r).
template <class T>
T reverse_initial(const RecurrenceParams<T>& p, const T& x_r, std::size_t r,
                  double zero_tol = kZeroTol) {
  if (r < 1) throw DomainError("r must be at least 1");
  T y = x_r;
  for (std::size_t step = 1; step < r; ++step) {
    T shifted = y - p.alpha();
    if (is_zero(shifted, zero_tol)) {
      throw DomainError("reverse orbit hits t = alpha at step " + std::to_string(step));
    }
    y = T(p.gamma() / shifted);
  }
  return y;
}

enum class LocalBehavior { Attracting, Repelling, Neutral };

const char* to_string(LocalBehavior b);

// Compares |phi'(t)| = |gamma| / t^2 with 1.
LocalBehavior local_behavior(const Params& p, double t, double tol = kZeroTol);

// ---------------------------------------------------------------------------
// Closed-form solutions.

// x_j = theta for all j (x_1 is a fixed point).
struct ConstantSolution {
  double theta;
};

// Delta = 0: x_j = theta (1 + 1 / (beta + j)).
struct Type1Solution {
  double theta;
  double beta;
};

// Delta > 0: x_j = theta + (theta' - theta) / (beta (theta/theta')^j + 1).
//
// theta = alpha/2 + sqrt(Delta)/2 and theta' = alpha/2 - sqrt(Delta)/2 as
// produced by solve(). The formula is valid under either labelling of the
// two roots; swapped() gives the same function with the roles exchanged.
struct Type2Solution {
  double theta;
  double theta_prime;
  double beta;

  double ratio() const { return theta / theta_prime; }
  Type2Solution swapped() const { return {theta_prime, theta, 1.0 / beta}; }
};

// Delta < 0, alpha != 0: x_j = rho (cos phi - sin phi tan(j phi + omega)).
// phi in (0, pi); omega reduced modulo pi into (-pi/2, pi/2].
struct Type3Solution {
  double rho;
  double phi_angle;
  double omega;
};

// alpha = 0, gamma < 0: x_j = x1 for odd j, gamma / x1 for even j.
struct AlternatingSolution {
  double x1;
  double gamma;
};

using ClosedFormSolution =
    std::variant<ConstantSolution, Type1Solution, Type2Solution, Type3Solution, AlternatingSolution>;

ClosedFormSolution solve(const Params& p, double x1, double eps = kDeltaTol,
                         double zero_tol = kZeroTol);

struct Pole {};
using Evaluation = std::variant<double, Pole>;

inline bool is_pole(const Evaluation& e) { return std::holds_alternative<Pole>(e); }

// Evaluates the closed form at real j. Solutions without a real-index
// extension (Alternating, Type2 with a negative ratio) accept integer j only
// and throw Unsupported otherwise.
Evaluation eval(const ClosedFormSolution& sol, double j, double pole_tol = kPoleTol);

struct SignBreaks {
  std::vector<double> zeros;
  std::vector<double> poles;
};

// Zeros and vertical asymptotes of the extended solution in [j_lo, j_hi].
SignBreaks zeros_and_poles(const ClosedFormSolution& sol, double j_lo, double j_hi);

// Distance from j to the nearest vertical asymptote; +inf when there is none.
// For a Type2 solution with a negative ratio the candidate |beta q^j| = 1 is
// used, which over-approximates the set of poles.
double nearest_pole_distance(const ClosedFormSolution& sol, double j);

// P = pi / phi for Type3 solutions.
double period(const ClosedFormSolution& sol);

}  // namespace treeloc::recurrence
