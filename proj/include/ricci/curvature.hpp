#pragma once

#include <array>
#include <span>
#include <vector>

#include "ricci/space.hpp"

namespace ricci {

/// Components (x_1, ..., x_s) of the diagonal invariant tensor sum x_i pi_i^* Q.
/// A metric has every component positive; the same record with arbitrary
/// signs stands for a general invariant symmetric tensor.
struct DiagonalMetric {
  std::vector<double> components;

  DiagonalMetric() = default;
  explicit DiagonalMetric(std::vector<double> x) : components(std::move(x)) {}
  DiagonalMetric(std::initializer_list<double> x) : components(x) {}

  std::size_t size() const noexcept { return components.size(); }
  double operator[](std::size_t i) const { return components[i]; }
  bool is_metric() const;
  /// x_1 / x_2 for two-summand tensors.
  double ratio() const { return components.at(0) / components.at(1); }

  bool operator==(const DiagonalMetric&) const = default;
};

/// Ric g = sum r_i pi_i^* Q. Entries may have either sign.
struct RicciComponents {
  std::vector<double> components;

  std::size_t size() const noexcept { return components.size(); }
  double operator[](std::size_t i) const { return components[i]; }
  bool positive() const;
  DiagonalMetric as_tensor() const { return DiagonalMetric(components); }
};

/// Ricci components of a diagonal metric for any number of summands:
///   r_i = b_i/2 + sum_{j,k} gamma_jk^i / (4 d_i) (x_i^2/(x_j x_k) - 2 x_j/x_k).
/// Throws DomainError naming the first non-positive component.
RicciComponents ricci_components(const HomogeneousSpace& space, std::span<const double> x);
inline RicciComponents ricci_components(const HomogeneousSpace& space, const DiagonalMetric& g) {
  return ricci_components(space, std::span<const double>(g.components));
}

/// Closed two-summand form of the Ricci components at g = alpha pi_1^*Q + pi_2^*Q.
RicciComponents ricci_s2(const HomogeneousSpace& space, double alpha);

/// S = sum_i d_i r_i / x_i.
double scalar_curvature(const HomogeneousSpace& space, const DiagonalMetric& g);

/// Coefficients of the two-summand Einstein/prescribed-Ricci polynomial
///   P(x, y) = d2 g221 x^4 + 2 d1 g221 y x^3 + (theta1 - y theta2) x^2
///             - 2 d2 g112 x - d1 g112 y,
/// whose zero set in x (for fixed y = z1/z2) is the set of ratios x1/x2 with
/// Ric g = c T.
class RicciPolynomial {
 public:
  explicit RicciPolynomial(const HomogeneousSpace& space);

  double operator()(double x, double y) const;
  /// dP/dx at fixed y.
  double derivative(double x, double y) const;
  /// Magnitude of the largest monomial at (x, y); the natural scale for |P|.
  double scale(double x, double y) const;

  /// Cubic -P(x, x)/x, whose sign at alpha_g equals the sign of alpha_g - alpha_T.
  double tilde(double x) const;

  /// Coefficients {a0, a1, a2, a3} of P(x, x)/x = a3 x^3 + a2 x^2 + a1 x + a0.
  std::array<double, 4> einstein_cubic() const;

  double theta1() const noexcept { return theta1_; }
  double theta2() const noexcept { return theta2_; }
  /// theta_i recomputed through the Casimir constants.
  double theta1_casimir() const noexcept { return theta1_casimir_; }
  double theta2_casimir() const noexcept { return theta2_casimir_; }
  /// Largest relative disagreement between the two theta routes.
  double theta_residual() const;

  double d1() const noexcept { return d1_; }
  double d2() const noexcept { return d2_; }
  double g111() const noexcept { return g111_; }
  double g112() const noexcept { return g112_; }
  double g221() const noexcept { return g221_; }
  double g222() const noexcept { return g222_; }

 private:
  double d1_, d2_, g111_, g112_, g221_, g222_;
  double theta1_, theta2_, theta1_casimir_, theta2_casimir_;
};

RicciPolynomial build_polynomial(const HomogeneousSpace& space);
double poly_P(const HomogeneousSpace& space, double x, double y);
double tilde_P(const HomogeneousSpace& space, double x);

struct StepDistance {
  double lhs;  // |g - h|_g^2
  double rhs;  // n + |Ric g|_g^2 - 2 S(g)
};

/// Both sides of |g - h|_g^2 = n + |Ric g|_g^2 - 2 S(g) for h = Ric g, with
/// |T|_g^2 = sum d_i (T_i/x_i)^2. The left side uses h as given; the right
/// side recomputes Ric g.
StepDistance step_distance_identity(const HomogeneousSpace& space, const DiagonalMetric& g,
                                    const DiagonalMetric& h);

/// Throws DomainError unless the space has exactly two summands.
void require_two_summands(const HomogeneousSpace& space, const char* operation);

}  // namespace ricci
