#include "ricci/prescribed.hpp"

#include <cmath>
#include <sstream>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

constexpr double kBracketLow = 1e-12;
constexpr double kBisectionWidth = 1e-13;
constexpr int kNewtonSteps = 5;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// Bisection on a function negative at lo and positive at hi, then Newton
// polishing that is accepted only while it stays in the bracket and shrinks |f|.
template <class F, class DF>
double bracketed_root(F f, DF df, double lo, double hi) {
  while (hi - lo > kBisectionWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int n = 0; n < kNewtonSteps; ++n) {
    const double fx = f(x);
    const double dfx = df(x);
    if (fx == 0.0 || dfx == 0.0) break;
    const double next = x - fx / dfx;
    if (!(next >= lo && next <= hi) || std::abs(f(next)) >= std::abs(fx)) break;
    x = next;
  }
  return x;
}

PrescribedSolution finish(const HomogeneousSpace& space, double alpha_g, double z1, double z2) {
  const RicciComponents r = ricci_s2(space, alpha_g);
  // c from the component with the larger target entry; the other one checks it.
  PrescribedSolution sol;
  sol.alpha_g = alpha_g;
  if (z1 >= z2) {
    sol.c = r[0] / z1;
    sol.consistency_residual = std::abs(r[1] - sol.c * z2) / std::max(std::abs(sol.c), 1e-300);
  } else {
    sol.c = r[1] / z2;
    sol.consistency_residual = std::abs(r[0] - sol.c * z1) / std::max(std::abs(sol.c), 1e-300);
  }
  sol.unique = true;
  return sol;
}

void require_maximal(const HomogeneousSpace& space, const char* op) {
  require_two_summands(space, op);
  if (!space.is_maximal) throw DomainError(std::string(op) + ": space is not maximal");
  if (!(space.g(1, 1, 2) > 0.0) || !(space.g(2, 2, 1) > 0.0))
    throw DomainError(std::string(op) + ": maximal space needs gamma_11^2, gamma_22^1 > 0");
}

}  // namespace

EtaConstants eta_constants(const HomogeneousSpace& space) {
  require_two_summands(space, "eta_constants");
  const double d1 = space.d(1), d2 = space.d(2), g221 = space.g(2, 2, 1);
  if (!(g221 > 0.0)) throw DomainError("eta_constants: requires gamma_22^1 > 0");
  EtaConstants eta;
  eta.eta_tilde1 = space.zeta(1) + space.g(1, 1, 1) / (4 * d1);
  eta.eta_tilde2 = space.zeta(2) + space.g(2, 2, 2) / (4 * d2) + g221 / d2;
  const double scale = 2 * d2 * d2 / (d1 * g221);
  eta.eta1 = scale * eta.eta_tilde1;
  eta.eta2 = scale * eta.eta_tilde2;
  return eta;
}

double solution_map(const HomogeneousSpace& space, const EtaConstants& eta, double x) {
  // sqrt(x^2 + 2 eta2 x - 2 eta1) - x, rationalized against cancellation at large x.
  const double q = 2 * eta.eta2 * x - 2 * eta.eta1;
  return space.d(1) / space.d(2) * q / (std::sqrt(x * x + q) + x);
}

PrescribedSolution solve_maximal(const HomogeneousSpace& space, double alpha_T) {
  require_maximal(space, "solve_maximal");
  if (!(alpha_T > 0.0) || !std::isfinite(alpha_T))
    throw DomainError("solve_maximal: alpha_T must be positive and finite");
  return solve_maximal_semidefinite(space, alpha_T, 1.0);
}

PrescribedSolution solve_maximal_semidefinite(const HomogeneousSpace& space, double z1,
                                              double z2) {
  require_maximal(space, "solve_maximal");
  if (!(z1 >= 0.0) || !(z2 >= 0.0) || !(z1 > 0.0 || z2 > 0.0) || !std::isfinite(z1) ||
      !std::isfinite(z2))
    throw DomainError("solve_maximal: target must be positive semidefinite and nonzero");
  const RicciPolynomial P(space);
  // z2 * P(x, z1/z2), which stays finite as z2 -> 0.
  auto f = [&](double x) {
    const double x2 = x * x;
    return z2 * (P.d2() * P.g221() * x2 * x2 + P.theta1() * x2 - 2 * P.d2() * P.g112() * x) +
           z1 * (2 * P.d1() * P.g221() * x2 * x - P.theta2() * x2 - P.d1() * P.g112());
  };
  auto df = [&](double x) {
    const double x2 = x * x;
    return z2 * (4 * P.d2() * P.g221() * x2 * x + 2 * P.theta1() * x - 2 * P.d2() * P.g112()) +
           z1 * (6 * P.d1() * P.g221() * x2 - 2 * P.theta2() * x);
  };

  double lo = kBracketLow;
  if (f(lo) > 0.0) throw NumericalError("solve_maximal: P(eps, y) > 0; invalid space data");
  double hi = std::max(1.0, z2 > 0.0 ? z1 / z2 : 1.0);
  for (int n = 0; f(hi) <= 0.0; ++n) {
    if (n > 200 || !std::isfinite(hi))
      throw NumericalError("solve_maximal: failed to bracket the root");
    lo = hi;
    hi *= 2.0;
  }
  const double alpha_g = bracketed_root(f, df, lo, hi);
  return finish(space, alpha_g, z1, z2);
}

SolveResult solve_nonmaximal(const HomogeneousSpace& space, double alpha_T) {
  require_two_summands(space, "solve_nonmaximal");
  if (!space.has_intermediate) throw DomainError("solve_nonmaximal: no intermediate subgroup");
  if (!(alpha_T > 0.0) || !std::isfinite(alpha_T))
    throw DomainError("solve_nonmaximal: alpha_T must be positive and finite");

  if (!(space.g(2, 2, 1) > 0.0)) {
    // Every metric has the Ricci tensor of any other.
    const RicciComponents r = ricci_s2(space, 1.0);
    if (!(r[0] > 0.0 && r[1] > 0.0))
      return NotSolvable{0.0, "gamma_22^1 = 0 and the common Ricci tensor is not positive"};
    const double ratio = r[0] / r[1];
    if (std::abs(alpha_T - ratio) > 1e-12 * std::max(1.0, ratio))
      return NotSolvable{ratio, "gamma_22^1 = 0: target must be proportional to the Ricci tensor"
                                " with ratio " + fmt(ratio)};
    PrescribedSolution sol = finish(space, ratio, alpha_T, 1.0);
    sol.unique = false;
    return sol;
  }

  const EtaConstants eta = eta_constants(space);
  const double threshold = eta.threshold();
  if (!(alpha_T > threshold))
    return NotSolvable{threshold, "alpha_T=" + fmt(alpha_T) + " not above eta1/eta2=" + fmt(threshold)};
  const double alpha_g = solution_map(space, eta, alpha_T);
  const RicciComponents r = ricci_s2(space, alpha_g);
  PrescribedSolution sol;
  sol.alpha_g = alpha_g;
  sol.c = r[1];  // T = (alpha_T, 1); r_2 carries no 1/alpha cancellation here
  sol.consistency_residual = std::abs(r[0] - sol.c * alpha_T) / std::max(std::abs(sol.c), 1e-300);
  sol.unique = true;
  return sol;
}

SolveResult solve(const HomogeneousSpace& space, const DiagonalMetric& T) {
  require_two_summands(space, "solve");
  if (!T.is_metric() || T.size() != 2) throw DomainError("solve: T must be a positive 2-vector");
  const double alpha_T = T.ratio();
  if (space.is_maximal) return solve_maximal(space, alpha_T);
  if (space.has_intermediate) return solve_nonmaximal(space, alpha_T);
  throw DomainError("solve: space is neither maximal nor has an intermediate subgroup");
}

}  // namespace ricci
