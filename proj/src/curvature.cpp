#include "ricci/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

bool DiagonalMetric::is_metric() const {
  return !components.empty() &&
         std::all_of(components.begin(), components.end(),
                     [](double v) { return std::isfinite(v) && v > 0.0; });
}

bool RicciComponents::positive() const {
  return std::all_of(components.begin(), components.end(), [](double v) { return v > 0.0; });
}

void require_two_summands(const HomogeneousSpace& space, const char* operation) {
  if (space.s != 2)
    throw DomainError(std::string(operation) + ": requires s = 2, got s = " +
                      std::to_string(space.s));
}

namespace {

void require_metric(const HomogeneousSpace& space, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(space.s))
    throw DomainError("metric has " + std::to_string(x.size()) + " components, space has s = " +
                      std::to_string(space.s));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0) || !std::isfinite(x[i]))
      throw DomainError("metric component x_" + std::to_string(i + 1) +
                        " must be positive and finite");
}

}  // namespace

RicciComponents ricci_components(const HomogeneousSpace& space, std::span<const double> x) {
  require_metric(space, x);
  const int s = space.s;
  RicciComponents ric;
  ric.components.resize(s);
  // b_i/2 - (1/(2 d_i)) sum gamma_jk^i is folded into a constant first, so the
  // metric-dependent part x_i^2/(x_j x_k) + 2(1 - x_j/x_k) vanishes exactly for
  // j = k instead of cancelling against b_i at small ratios.
  for (int i = 0; i < s; ++i) {
    double gamma_sum = 0.0, sum = 0.0;
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k) {
        const double gam = space.gamma(j, k, i);
        if (gam == 0.0) continue;
        gamma_sum += gam;
        sum += gam * (x[i] * x[i] / (x[j] * x[k]) + 2.0 * (1.0 - x[j] / x[k]));
      }
    const double base = space.killing[i] / 2.0 - gamma_sum / (2.0 * space.dims[i]);
    ric.components[i] = base + sum / (4.0 * space.dims[i]);
  }
  return ric;
}

RicciComponents ricci_s2(const HomogeneousSpace& space, double alpha) {
  require_two_summands(space, "ricci_s2");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("ricci_s2: alpha must be positive and finite");
  const double d1 = space.d(1), d2 = space.d(2);
  const double g111 = space.g(1, 1, 1), g112 = space.g(1, 1, 2);
  const double g221 = space.g(2, 2, 1), g222 = space.g(2, 2, 2);
  const double base1 = space.b(1) / 2 - (g111 + 2 * g112 + g221) / (2 * d1);
  const double base2 = space.b(2) / 2 - (g222 + 2 * g221 + g112) / (2 * d2);
  const double r1 = base1 + (g111 + g112 * (4 - 2 / alpha) + g221 * alpha * alpha) / (4 * d1);
  const double r2 = base2 + (g222 + g221 * (4 - 2 * alpha) + g112 / (alpha * alpha)) / (4 * d2);
  return RicciComponents{{r1, r2}};
}

double scalar_curvature(const HomogeneousSpace& space, const DiagonalMetric& g) {
  const RicciComponents ric = ricci_components(space, g);
  double S = 0.0;
  for (int i = 0; i < space.s; ++i) S += space.dims[i] * ric[i] / g[i];
  return S;
}

RicciPolynomial::RicciPolynomial(const HomogeneousSpace& space) {
  require_two_summands(space, "build_polynomial");
  d1_ = space.d(1);
  d2_ = space.d(2);
  g111_ = space.g(1, 1, 1);
  g112_ = space.g(1, 1, 2);
  g221_ = space.g(2, 2, 1);
  g222_ = space.g(2, 2, 2);
  theta1_ = 2 * d1_ * d2_ * space.b(1) - d2_ * g111_ - 2 * d2_ * g221_;
  theta2_ = 2 * d1_ * d2_ * space.b(2) - d1_ * g222_ - 2 * d1_ * g112_;
  theta1_casimir_ = 4 * d1_ * d2_ * space.zeta(1) + d2_ * g111_ + 4 * d2_ * g112_;
  theta2_casimir_ = 4 * d1_ * d2_ * space.zeta(2) + d1_ * g222_ + 4 * d1_ * g221_;
}

double RicciPolynomial::operator()(double x, double y) const {
  const double x2 = x * x;
  return d2_ * g221_ * x2 * x2 + 2 * d1_ * g221_ * y * x2 * x + (theta1_ - y * theta2_) * x2 -
         2 * d2_ * g112_ * x - d1_ * g112_ * y;
}

double RicciPolynomial::derivative(double x, double y) const {
  const double x2 = x * x;
  return 4 * d2_ * g221_ * x2 * x + 6 * d1_ * g221_ * y * x2 + 2 * (theta1_ - y * theta2_) * x -
         2 * d2_ * g112_;
}

double RicciPolynomial::scale(double x, double y) const {
  const double x2 = x * x;
  return std::max({std::abs(d2_ * g221_ * x2 * x2), std::abs(2 * d1_ * g221_ * y * x2 * x),
                   std::abs(theta1_ * x2), std::abs(y * theta2_ * x2),
                   std::abs(2 * d2_ * g112_ * x), std::abs(d1_ * g112_ * y)});
}

double RicciPolynomial::tilde(double x) const {
  return -(2 * d1_ + d2_) * g221_ * x * x * x + theta2_ * x * x - theta1_ * x +
         (d1_ + 2 * d2_) * g112_;
}

std::array<double, 4> RicciPolynomial::einstein_cubic() const {
  return {-(2 * d2_ + d1_) * g112_, theta1_, -theta2_, (d2_ + 2 * d1_) * g221_};
}

double RicciPolynomial::theta_residual() const {
  return std::max(std::abs(theta1_ - theta1_casimir_) / std::max(1.0, std::abs(theta1_)),
                  std::abs(theta2_ - theta2_casimir_) / std::max(1.0, std::abs(theta2_)));
}

RicciPolynomial build_polynomial(const HomogeneousSpace& space) { return RicciPolynomial(space); }

double poly_P(const HomogeneousSpace& space, double x, double y) {
  return RicciPolynomial(space)(x, y);
}

double tilde_P(const HomogeneousSpace& space, double x) {
  if (!(x > 0.0)) throw DomainError("tilde_P: x must be positive");
  return RicciPolynomial(space).tilde(x);
}

StepDistance step_distance_identity(const HomogeneousSpace& space, const DiagonalMetric& g,
                                    const DiagonalMetric& h) {
  const RicciComponents ric = ricci_components(space, g);
  if (h.size() != g.size()) throw DomainError("step_distance_identity: size mismatch");
  double lhs = 0.0, ric_norm = 0.0, S = 0.0;
  for (int i = 0; i < space.s; ++i) {
    const double d = space.dims[i];
    const double diff = (g[i] - h[i]) / g[i];
    lhs += d * diff * diff;
    const double q = ric[i] / g[i];
    ric_norm += d * q * q;
    S += d * q;
  }
  return {lhs, space.dimension() + ric_norm - 2.0 * S};
}

}  // namespace ricci
