#include "ricci/einstein.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMultiplicityTol = 1e-8;
constexpr double kMembershipSlack = 1e-12;

double horner(const std::array<double, 4>& a, double x) {
  return ((a[3] * x + a[2]) * x + a[1]) * x + a[0];
}

double horner_derivative(const std::array<double, 4>& a, double x) {
  return (3 * a[3] * x + 2 * a[2]) * x + a[1];
}

double polish(const std::array<double, 4>& a, double x) {
  for (int n = 0; n < 5; ++n) {
    const double fx = horner(a, x);
    const double dfx = horner_derivative(a, x);
    if (fx == 0.0 || dfx == 0.0) break;
    const double next = x - fx / dfx;
    if (!(next > 0.0) || std::abs(horner(a, next)) >= std::abs(fx)) break;
    x = next;
  }
  return x;
}

// Real roots of a x^2 + b x + c with a != 0; a tiny negative discriminant is
// read as a double root.
std::vector<double> quadratic_roots(double a, double b, double c) {
  double disc = b * b - 4 * a * c;
  const double scale = std::max({b * b, std::abs(4 * a * c), 1e-300});
  if (disc < 0.0) {
    if (disc < -1e-12 * scale) return {};
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  if (q == 0.0) return {0.0, 0.0};
  return {q / a, c / q};
}

// Positive roots, with multiplicity, of a[3] x^3 + a[2] x^2 + a[1] x + a[0].
std::vector<double> positive_roots(const std::array<double, 4>& a) {
  // Factor out x^k (zero roots are not ratios) and drop vanishing leading terms.
  int low = 0;
  while (low < 4 && a[low] == 0.0) ++low;
  int high = 3;
  while (high >= 0 && a[high] == 0.0) --high;
  if (high < low) throw NumericalError("find_einstein: P(x, x) vanishes identically");
  const int degree = high - low;

  std::vector<double> roots;
  if (degree == 1) {
    roots.push_back(-a[low] / a[low + 1]);
  } else if (degree == 2) {
    roots = quadratic_roots(a[low + 2], a[low + 1], a[low]);
  } else if (degree == 3) {
    if (a[0] * a[3] >= 0.0)
      throw NumericalError("find_einstein: cubic without a sign change on (0, inf)");
    // Bisection for one root, then deflation to a quadratic.
    const double sign_low = a[0] < 0.0 ? -1.0 : 1.0;
    double lo = 0.0, hi = 1.0;
    while (sign_low * horner(a, hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw NumericalError("find_einstein: failed to bracket");
    }
    while (hi - lo > 1e-15 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (sign_low * horner(a, mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    const double r = polish(a, 0.5 * (lo + hi));
    // a3 x^3 + a2 x^2 + a1 x + a0 = (x - r)(a3 x^2 + q1 x + q0)
    const double q1 = a[2] + a[3] * r;
    const double q0 = a[1] + q1 * r;
    roots = quadratic_roots(a[3], q1, q0);
    roots.push_back(r);
  }

  std::vector<double> out;
  for (double r : roots)
    if (r > 0.0 && std::isfinite(r)) out.push_back(degree == 3 ? polish(a, r) : r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int EinsteinSet::find(double ratio, double rel_tol) const {
  for (std::size_t n = 0; n < ratios.size(); ++n)
    if (std::abs(ratios[n] - ratio) <= rel_tol * std::max(1.0, ratios[n]))
      return static_cast<int>(n);
  return -1;
}

EinsteinSet find_einstein(const HomogeneousSpace& space) {
  require_two_summands(space, "find_einstein");
  const RicciPolynomial P(space);
  const std::vector<double> roots = positive_roots(P.einstein_cubic());

  EinsteinSet set;
  for (double r : roots) {
    if (!set.ratios.empty() &&
        std::abs(r - set.ratios.back()) <= kMultiplicityTol * std::max(1.0, r)) {
      ++set.multiplicities.back();
      continue;
    }
    set.ratios.push_back(r);
    set.multiplicities.push_back(1);
    set.constants.push_back(ricci_s2(space, r)[0] / r);
  }
  if (space.is_maximal && set.empty())
    throw NumericalError("find_einstein: maximal space without Einstein metrics; invalid data");
  set.alpha_minus = set.empty() ? kNaN : set.ratios.front();
  set.alpha_plus = set.empty() ? kNaN : set.ratios.back();
  return set;
}

DiagonalMetric ricci_fixed_point(const HomogeneousSpace& space, const EinsteinSet& set,
                                 double ratio) {
  const int n = set.find(ratio, kMultiplicityTol);
  if (n < 0) throw DomainError("ricci_fixed_point: ratio is not an Einstein ratio");
  const double c = set.constants[n];
  (void)space;
  return DiagonalMetric{c * set.ratios[n], c};
}

DiagonalMetric ricci_fixed_point(const HomogeneousSpace& space, double ratio) {
  return ricci_fixed_point(space, find_einstein(space), ratio);
}

bool membership_M_infinity(const HomogeneousSpace& space, const EinsteinSet& set,
                           double alpha_T) {
  require_two_summands(space, "membership_M_infinity");
  if (set.empty()) return false;
  const double lo = set.alpha_minus * (1.0 - kMembershipSlack);
  const double hi = set.alpha_plus * (1.0 + kMembershipSlack);
  if (space.is_maximal) return alpha_T >= lo && alpha_T <= hi;
  if (space.has_intermediate) {
    if (first_summand_trivial(space)) return alpha_T <= set.alpha_minus * (1.0 + kMembershipSlack);
    return alpha_T <= hi;
  }
  return false;
}

bool membership_M_infinity(const HomogeneousSpace& space, double alpha_T) {
  return membership_M_infinity(space, find_einstein(space), alpha_T);
}

}  // namespace ricci
