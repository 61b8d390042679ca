#pragma once

#include <string>
#include <variant>

#include "ricci/curvature.hpp"
#include "ricci/space.hpp"

namespace ricci {

/// Solution of Ric g = c T for T = (alpha_T, 1), normalized so that g = (alpha_g, 1).
struct PrescribedSolution {
  double alpha_g = 0.0;
  double c = 0.0;
  bool unique = true;
  /// |r_1/alpha_T - r_2| / c at the solution; both components must agree on c.
  double consistency_residual = 0.0;

  DiagonalMetric metric() const { return DiagonalMetric{alpha_g, 1.0}; }
};

/// Ric g = c T has no solution with c > 0.
struct NotSolvable {
  double threshold = 0.0;  // eta_1/eta_2, solvability needs alpha_T above it
  std::string reason;
};

using SolveResult = std::variant<PrescribedSolution, NotSolvable>;

inline bool solvable(const SolveResult& r) { return std::holds_alternative<PrescribedSolution>(r); }

/// Normalized constants eta_i = (2 d_2^2 / (d_1 gamma_22^1)) eta~_i with
///   eta~_1 = zeta_1 + gamma_11^1/(4 d_1),
///   eta~_2 = zeta_2 + gamma_22^2/(4 d_2) + gamma_22^1/d_2.
struct EtaConstants {
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta_tilde1 = 0.0;
  double eta_tilde2 = 0.0;

  double threshold() const { return eta1 / eta2; }
};

EtaConstants eta_constants(const HomogeneousSpace& space);

/// Closed-form solution map alpha_T -> alpha_g of the non-maximal case,
///   F(x) = (d1/d2) (sqrt(x^2 + 2 eta2 x - 2 eta1) - x),  x > eta1/eta2.
double solution_map(const HomogeneousSpace& space, const EtaConstants& eta, double alpha_T);

/// Maximal isotropy: the unique positive root of x -> P(x, alpha_T).
/// Throws DomainError for wrong inputs, NumericalError if no root is bracketed.
PrescribedSolution solve_maximal(const HomogeneousSpace& space, double alpha_T);

/// Maximal isotropy with a positive-semidefinite nonzero target (z1, z2 >= 0).
/// The solution metric is returned as (alpha_g, 1) with c relative to (z1, z2).
PrescribedSolution solve_maximal_semidefinite(const HomogeneousSpace& space, double z1, double z2);

/// Intermediate subgroup K: closed-form solution, or NotSolvable when
/// alpha_T <= eta1/eta2. With gamma_22^1 = 0 every metric has the same Ricci
/// tensor; the target is solvable only when proportional to it.
SolveResult solve_nonmaximal(const HomogeneousSpace& space, double alpha_T);

/// Dispatches on the space flags with alpha_T = z1/z2.
SolveResult solve(const HomogeneousSpace& space, const DiagonalMetric& T);

}  // namespace ricci
