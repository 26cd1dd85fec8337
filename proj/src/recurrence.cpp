#include "treeloc/recurrence.hpp"

#include <algorithm>
#include <cmath>

namespace treeloc::recurrence {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool is_integer(double j) { return std::isfinite(j) && j == std::round(j); }

double reduce_mod_pi(double w) {
  double r = std::remainder(w, kPi);
  if (r <= -kPi / 2) r += kPi;
  return r;
}

// Real j in [lo, hi] of the form (base + k pi) / phi, k integer, ascending.
std::vector<double> lattice_in(double base, double phi, double lo, double hi) {
  std::vector<double> out;
  auto k_lo = static_cast<long long>(std::ceil((lo * phi - base) / kPi)) - 1;
  auto k_hi = static_cast<long long>(std::floor((hi * phi - base) / kPi)) + 1;
  for (long long k = k_lo; k <= k_hi; ++k) {
    double j = (base + static_cast<double>(k) * kPi) / phi;
    if (j >= lo && j <= hi) out.push_back(j);
  }
  return out;
}

// Real j with q^j = target (q > 0, q != 1, target > 0).
std::optional<double> log_solve(double q, double target) {
  if (!(target > 0) || !(q > 0) || q == 1.0) return std::nullopt;
  return std::log(target) / std::log(q);
}

}  // namespace

DeltaClass classify(const Params& p, double eps) {
  double delta = p.alpha() * p.alpha() + 4.0 * p.gamma();
  DeltaKind kind = DeltaKind::Type1;
  if (delta > eps) {
    kind = DeltaKind::Type2;
  } else if (delta < -eps) {
    kind = DeltaKind::Type3;
  }
  return {delta, kind};
}

DeltaClass classify(const ExactParams& p) {
  Rational delta = p.alpha() * p.alpha() + 4 * p.gamma();
  int s = sgn(delta);
  DeltaKind kind = s == 0 ? DeltaKind::Type1 : (s > 0 ? DeltaKind::Type2 : DeltaKind::Type3);
  return {delta.get_d(), kind};
}

const char* to_string(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::Type1: return "Type1";
    case DeltaKind::Type2: return "Type2";
    case DeltaKind::Type3: return "Type3";
  }
  return "?";
}

const char* to_string(LocalBehavior b) {
  switch (b) {
    case LocalBehavior::Attracting: return "attracting";
    case LocalBehavior::Repelling: return "repelling";
    case LocalBehavior::Neutral: return "neutral";
  }
  return "?";
}

std::vector<double> fixed_points(const Params& p, double eps) {
  auto cls = classify(p, eps);
  const double a = p.alpha();
  switch (cls.kind) {
    case DeltaKind::Type3:
      return {};
    case DeltaKind::Type1:
      return {a / 2};
    case DeltaKind::Type2: {
      // The product of the roots is -gamma; avoids cancellation in the smaller one.
      double big = (a + std::copysign(std::sqrt(cls.delta), a)) / 2;
      double other = -p.gamma() / big;
      std::vector<double> roots{big, other};
      std::sort(roots.begin(), roots.end());
      return roots;
    }
  }
  return {};
}

LocalBehavior local_behavior(const Params& p, double t, double tol) {
  if (t == 0.0) throw DomainError("phi' is undefined at t = 0");
  double unit = std::sqrt(std::abs(p.gamma()));
  double gap = std::abs(t) - unit;
  if (std::abs(gap) <= tol * std::max(1.0, unit)) return LocalBehavior::Neutral;
  return gap > 0 ? LocalBehavior::Attracting : LocalBehavior::Repelling;
}

ClosedFormSolution solve(const Params& p, double x1, double eps, double zero_tol) {
  if (is_zero(x1, zero_tol)) throw DomainError("initial value x1 must be nonzero");
  const double a = p.alpha();
  const double g = p.gamma();
  auto cls = classify(p, eps);

  auto near = [&](double u, double v) { return std::abs(u - v) <= zero_tol * std::max(1.0, std::abs(v)); };

  switch (cls.kind) {
    case DeltaKind::Type1: {
      double theta = a / 2;
      if (near(x1, theta)) return ConstantSolution{theta};
      return Type1Solution{theta, -1.0 + theta / (x1 - theta)};
    }
    case DeltaKind::Type2: {
      auto roots = fixed_points(p, eps);
      double theta = roots[1];  // alpha/2 + sqrt(Delta)/2
      double theta_prime = roots[0];
      if (near(x1, theta)) return ConstantSolution{theta};
      if (near(x1, theta_prime)) return ConstantSolution{theta_prime};
      double beta = (theta_prime / theta) * ((theta_prime - theta) / (x1 - theta) - 1.0);
      return Type2Solution{theta, theta_prime, beta};
    }
    case DeltaKind::Type3: {
      if (a == 0.0) return AlternatingSolution{x1, g};
      double rho = std::sqrt(-g);
      double phi = std::atan(std::sqrt(-cls.delta) / a);
      if (a < 0) phi += kPi;
      double omega = -phi + std::atan((std::cos(phi) - x1 / rho) / std::sin(phi));
      return Type3Solution{rho, phi, reduce_mod_pi(omega)};
    }
  }
  throw Unsupported("unreachable classification");
}

Evaluation eval(const ClosedFormSolution& sol, double j, double pole_tol) {
  return std::visit(
      Overloaded{
          [](const ConstantSolution& s) -> Evaluation { return s.theta; },
          [&](const Type1Solution& s) -> Evaluation {
            double d = s.beta + j;
            if (std::abs(d) <= pole_tol) return Pole{};
            return s.theta * (1.0 + 1.0 / d);
          },
          [&](const Type2Solution& s) -> Evaluation {
            double q = s.ratio();
            if (q < 0 && !is_integer(j)) {
              throw Unsupported("Type2 solution with negative root ratio has no real-index extension");
            }
            if (q > 0) {
              if (auto jp = log_solve(q, -1.0 / s.beta); jp && std::abs(j - *jp) <= pole_tol) return Pole{};
            }
            double denom = s.beta * std::pow(q, j) + 1.0;
            if (denom == 0.0) return Pole{};
            return s.theta + (s.theta_prime - s.theta) / denom;
          },
          [&](const Type3Solution& s) -> Evaluation {
            double angle = j * s.phi_angle + s.omega;
            double k = std::round((angle - kPi / 2) / kPi);
            double jp = (kPi / 2 + k * kPi - s.omega) / s.phi_angle;
            if (std::abs(j - jp) <= pole_tol) return Pole{};
            return s.rho * (std::cos(s.phi_angle) - std::sin(s.phi_angle) * std::tan(angle));
          },
          [&](const AlternatingSolution& s) -> Evaluation {
            if (!is_integer(j)) throw Unsupported("alternating solution is defined for integer j only");
            auto parity = static_cast<long long>(j) % 2;
            return parity == 0 ? s.gamma / s.x1 : s.x1;
          },
      },
      sol);
}

SignBreaks zeros_and_poles(const ClosedFormSolution& sol, double j_lo, double j_hi) {
  if (!(j_lo < j_hi)) throw DomainError("zeros_and_poles needs j_lo < j_hi");
  auto within = [&](double j) { return j >= j_lo && j <= j_hi; };
  return std::visit(
      Overloaded{
          [](const ConstantSolution&) { return SignBreaks{}; },
          [&](const Type1Solution& s) {
            SignBreaks out;
            if (double z = -s.beta - 1.0; within(z)) out.zeros.push_back(z);
            if (double pl = -s.beta; within(pl)) out.poles.push_back(pl);
            return out;
          },
          [&](const Type2Solution& s) {
            double q = s.ratio();
            if (q < 0) throw Unsupported("Type2 solution with negative root ratio has no real-index extension");
            SignBreaks out;
            if (auto z = log_solve(q, -s.theta_prime / (s.theta * s.beta)); z && within(*z)) out.zeros.push_back(*z);
            if (auto pl = log_solve(q, -1.0 / s.beta); pl && within(*pl)) out.poles.push_back(*pl);
            return out;
          },
          [&](const Type3Solution& s) {
            // tan(j phi + omega) = cot(phi) at zeros, and j phi + omega = pi/2 (mod pi) at poles.
            SignBreaks out;
            out.zeros = lattice_in(kPi / 2 - s.phi_angle - s.omega, s.phi_angle, j_lo, j_hi);
            out.poles = lattice_in(kPi / 2 - s.omega, s.phi_angle, j_lo, j_hi);
            return out;
          },
          [](const AlternatingSolution&) -> SignBreaks {
            throw Unsupported("alternating solution has no continuous extension");
          },
      },
      sol);
}

double nearest_pole_distance(const ClosedFormSolution& sol, double j) {
  return std::visit(
      Overloaded{
          [](const ConstantSolution&) { return kInf; },
          [&](const Type1Solution& s) { return std::abs(j + s.beta); },
          [&](const Type2Solution& s) {
            double q = s.ratio();
            if (q > 0) {
              auto pl = log_solve(q, -1.0 / s.beta);
              return pl ? std::abs(j - *pl) : kInf;
            }
            double mag = std::abs(q);
            if (mag == 1.0) return std::abs(std::abs(s.beta) - 1.0) < 1e-15 ? 0.0 : kInf;
            return std::abs(j + std::log(std::abs(s.beta)) / std::log(mag));
          },
          [&](const Type3Solution& s) {
            double angle = j * s.phi_angle + s.omega;
            double k = std::round((angle - kPi / 2) / kPi);
            double jp = (kPi / 2 + k * kPi - s.omega) / s.phi_angle;
            return std::abs(j - jp);
          },
          [](const AlternatingSolution&) { return kInf; },
      },
      sol);
}

double period(const ClosedFormSolution& sol) {
  if (const auto* s = std::get_if<Type3Solution>(&sol)) return kPi / s->phi_angle;
  throw Unsupported("period is defined for Type3 solutions only");
}

}  // namespace treeloc::recurrence
