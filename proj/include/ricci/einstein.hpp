#pragma once

#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/space.hpp"

namespace ricci {

/// Invariant Einstein metrics of a two-summand space, up to scaling, as ratios
/// eps = x1/x2 with Ric g^eps = c g^eps, g^eps = eps pi_1^*Q + pi_2^*Q.
struct EinsteinSet {
  std::vector<double> ratios;       // sorted ascending
  std::vector<double> constants;    // c for each ratio
  std::vector<int> multiplicities;  // 2 for a tangential (double) root
  double alpha_minus = 0.0;         // NaN when empty
  double alpha_plus = 0.0;          // NaN when empty

  bool empty() const noexcept { return ratios.empty(); }
  /// Index of the ratio within rel_tol of `ratio`, or -1.
  int find(double ratio, double rel_tol) const;
};

/// All positive roots of P(x, x). Maximal spaces: cubic, deflated after an
/// initial bisection root. Non-maximal spaces: at most two roots. Throws
/// NumericalError when a maximal space yields no Einstein metric.
EinsteinSet find_einstein(const HomogeneousSpace& space);

/// The unique metric on the ray through (ratio, 1) with Ric g = g.
/// Throws DomainError when `ratio` is not an Einstein ratio.
DiagonalMetric ricci_fixed_point(const HomogeneousSpace& space, double ratio);
DiagonalMetric ricci_fixed_point(const HomogeneousSpace& space, const EinsteinSet& set,
                                 double ratio);

/// Closed-form membership of (alpha_T, 1) in the set of metrics with infinite
/// Ricci index.
bool membership_M_infinity(const HomogeneousSpace& space, double alpha_T);
bool membership_M_infinity(const HomogeneousSpace& space, const EinsteinSet& set,
                           double alpha_T);

}  // namespace ricci
