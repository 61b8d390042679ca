#include "ricci/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "ricci/einstein.hpp"
#include "ricci/errors.hpp"

namespace ricci {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMaxRelativeChange = 0.1;
constexpr double kRegrowRelativeChange = 0.025;
constexpr double kEquilibriumTol = 1e-10;
constexpr double kAgreementTol = 1e-6;
constexpr double kExtinctionFraction = 1e-12;

void check_flow_args(double t_max, double dt, const char* op) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw DomainError(std::string(op) + ": t_max must be positive and finite");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw DomainError(std::string(op) + ": dt must be positive and finite");
}

// Classic RK4 increment; NaN when a stage leaves the positive cone.
template <class F>
double rk4_increment(F f, double y, double h) {
  const double k1 = f(y);
  const double y2 = y + 0.5 * h * k1;
  if (!(y2 > 0.0)) return kNaN;
  const double k2 = f(y2);
  const double y3 = y + 0.5 * h * k2;
  if (!(y3 > 0.0)) return kNaN;
  const double k3 = f(y3);
  const double y4 = y + h * k3;
  if (!(y4 > 0.0)) return kNaN;
  const double k4 = f(y4);
  return h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
}

FlowSample ratio_sample(const HomogeneousSpace& space, double t, double alpha) {
  FlowSample s;
  s.t = t;
  s.x = DiagonalMetric{alpha, 1.0};
  s.alpha = alpha;
  s.scalar = scalar_curvature(space, s.x);
  return s;
}

FlowSample metric_sample(const HomogeneousSpace& space, double t, const DiagonalMetric& x) {
  FlowSample s;
  s.t = t;
  s.x = x;
  s.alpha = x.ratio();
  s.scalar = scalar_curvature(space, x);
  return s;
}

void classify_terminal_ratio(const EinsteinSet& set, double alpha, FlowTrajectory& traj) {
  const int n = set.find(alpha, kFlowConvergenceTol);
  if (n >= 0) {
    traj.outcome = FlowOutcome::RatioConverged;
    traj.limit_ratio = set.ratios[n];
  } else {
    traj.outcome = FlowOutcome::Inconclusive;
    std::ostringstream msg;
    msg.precision(17);
    msg << "ratio " << alpha << " at t_max is not within 1e-8 of an Einstein ratio";
    traj.reason = msg.str();
  }
}

}  // namespace

FlowTrajectory::FlowTrajectory() : limit_ratio(kNaN) {}
ComparisonReport::ComparisonReport() : iteration_limit_ratio(kNaN), flow_limit_ratio(kNaN) {}

const char* to_string(FlowOutcome outcome) {
  switch (outcome) {
    case FlowOutcome::RatioConverged: return "RatioConverged";
    case FlowOutcome::RatioCollapsedToZero: return "RatioCollapsedToZero";
    case FlowOutcome::RatioDivergedToInfinity: return "RatioDivergedToInfinity";
    case FlowOutcome::ExtinctionReached: return "ExtinctionReached";
    case FlowOutcome::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

std::vector<double> flow_rhs(const HomogeneousSpace& space, const DiagonalMetric& x) {
  if (!x.is_metric()) throw DomainError("flow_rhs: x must be positive");
  const RicciComponents r = ricci_components(space, x);
  std::vector<double> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = -2.0 * r[i];
  return out;
}

double ratio_flow_rhs(const HomogeneousSpace& space, double alpha) {
  require_two_summands(space, "ratio_flow_rhs");
  if (!(alpha > 0.0)) throw DomainError("ratio_flow_rhs: alpha must be positive");
  const RicciComponents r = ricci_s2(space, alpha);
  return -2.0 * (r[0] - alpha * r[1]);
}

FlowTrajectory integrate_ratio_flow(const HomogeneousSpace& space, double alpha0, double t_max,
                                    double dt) {
  require_two_summands(space, "integrate_ratio_flow");
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
    throw DomainError("integrate_ratio_flow: alpha0 must be positive and finite");
  check_flow_args(t_max, dt, "integrate_ratio_flow");

  const EinsteinSet set = find_einstein(space);
  FlowTrajectory traj;
  traj.samples.push_back(ratio_sample(space, 0.0, alpha0));

  if (const int n = set.find(alpha0, kEquilibriumTol); n >= 0) {
    // Stationary solution; integrating would only amplify rounding at an unstable ratio.
    traj.samples.push_back(ratio_sample(space, t_max, alpha0));
    traj.outcome = FlowOutcome::RatioConverged;
    traj.limit_ratio = set.ratios[n];
    return traj;
  }

  auto f = [&](double a) { return ratio_flow_rhs(space, a); };
  double t = 0.0, alpha = alpha0, h = dt;
  while (t < t_max) {
    const double step = std::min(h, t_max - t);
    const double delta = rk4_increment(f, alpha, step);
    if (!std::isfinite(delta) || std::abs(delta) > kMaxRelativeChange * alpha) {
      h = 0.5 * step;
      if (t + h == t) throw NumericalError("integrate_ratio_flow: step-size underflow");
      continue;
    }
    alpha += delta;
    t = (step == t_max - t) ? t_max : t + step;
    traj.samples.push_back(ratio_sample(space, t, alpha));
    if (alpha < kFlowCollapseRatio) {
      traj.outcome = FlowOutcome::RatioCollapsedToZero;
      traj.limit_ratio = 0.0;
      return traj;
    }
    if (alpha > kFlowDivergenceRatio) {
      traj.outcome = FlowOutcome::RatioDivergedToInfinity;
      traj.limit_ratio = std::numeric_limits<double>::infinity();
      return traj;
    }
    if (std::abs(delta) < kRegrowRelativeChange * alpha && h < dt) h = std::min(2.0 * h, dt);
  }
  classify_terminal_ratio(set, alpha, traj);
  return traj;
}

FlowTrajectory integrate_flow(const HomogeneousSpace& space, const DiagonalMetric& x0,
                              double t_max, double dt) {
  require_two_summands(space, "integrate_flow");
  if (!x0.is_metric() || x0.size() != 2) throw DomainError("integrate_flow: x0 must be positive");
  check_flow_args(t_max, dt, "integrate_flow");

  const EinsteinSet set = find_einstein(space);
  FlowTrajectory traj;
  traj.samples.push_back(metric_sample(space, 0.0, x0));
  const double floor = kExtinctionFraction * std::max(x0[0], x0[1]);

  auto rhs = [&](const std::array<double, 2>& y) {
    const RicciComponents r = ricci_components(space, DiagonalMetric{y[0], y[1]});
    return std::array<double, 2>{-2.0 * r[0], -2.0 * r[1]};
  };
  auto axpy = [](const std::array<double, 2>& y, double a, const std::array<double, 2>& k) {
    return std::array<double, 2>{y[0] + a * k[0], y[1] + a * k[1]};
  };
  auto positive = [](const std::array<double, 2>& y) { return y[0] > 0.0 && y[1] > 0.0; };

  std::array<double, 2> y{x0[0], x0[1]};
  double t = 0.0, h = dt;
  while (t < t_max) {
    const double step = std::min(h, t_max - t);
    bool ok = true;
    std::array<double, 2> delta{};
    const auto k1 = rhs(y);
    const auto y2 = axpy(y, 0.5 * step, k1);
    ok = positive(y2);
    std::array<double, 2> k2{}, k3{}, k4{};
    if (ok) {
      k2 = rhs(y2);
      const auto y3 = axpy(y, 0.5 * step, k2);
      ok = positive(y3);
      if (ok) {
        k3 = rhs(y3);
        const auto y4 = axpy(y, step, k3);
        ok = positive(y4);
        if (ok) k4 = rhs(y4);
      }
    }
    if (ok) {
      for (int i = 0; i < 2; ++i) {
        delta[i] = step / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        ok = ok && std::isfinite(delta[i]) && std::abs(delta[i]) <= kMaxRelativeChange * y[i];
      }
    }
    if (!ok) {
      h = 0.5 * step;
      if (t + h == t || std::min(y[0], y[1]) < floor) {
        traj.outcome = FlowOutcome::ExtinctionReached;
        traj.reason = "a component reaches zero in finite time";
        return traj;
      }
      continue;
    }
    y = axpy(y, 1.0, delta);
    t = (step == t_max - t) ? t_max : t + step;
    traj.samples.push_back(metric_sample(space, t, DiagonalMetric{y[0], y[1]}));
    if (std::min(y[0], y[1]) < floor) {
      traj.outcome = FlowOutcome::ExtinctionReached;
      traj.reason = "a component reaches zero in finite time";
      return traj;
    }
    const bool small = std::abs(delta[0]) < kRegrowRelativeChange * y[0] &&
                       std::abs(delta[1]) < kRegrowRelativeChange * y[1];
    if (small && h < dt) h = std::min(2.0 * h, dt);
  }
  classify_terminal_ratio(set, y[0] / y[1], traj);
  return traj;
}

ComparisonReport compare_flow_iteration(const HomogeneousSpace& space, double alpha0,
                                        double t_max, double dt) {
  require_two_summands(space, "compare_flow_iteration");
  ComparisonReport rep;
  rep.alpha0 = alpha0;
  const DiagonalMetric T{alpha0, 1.0};
  rep.prediction = classify(space, T);

  const IterationTrajectory it = run_forward(space, T);
  rep.iteration = it.outcome.tag;
  rep.iteration_limit_ratio = it.outcome.limit_ratio;

  const FlowTrajectory fl = integrate_ratio_flow(space, alpha0, t_max, dt);
  rep.flow = fl.outcome;
  rep.flow_limit_ratio = fl.limit_ratio;

  rep.agree = rep.iteration == OutcomeTag::ConvergedEinstein &&
              rep.flow == FlowOutcome::RatioConverged &&
              std::abs(rep.iteration_limit_ratio - rep.flow_limit_ratio) <=
                  kAgreementTol * std::max(1.0, rep.flow_limit_ratio);
  rep.divergence_flagged = rep.iteration == OutcomeTag::NoIterationExists &&
                           rep.flow == FlowOutcome::RatioCollapsedToZero;
  const SpaceRegime regime = rep.prediction.regime;
  rep.divergence_expected =
      regime == SpaceRegime::IntermediateNoEinstein ||
      (regime == SpaceRegime::IntermediateNontrivial && !rep.prediction.forward_exists);

  std::ostringstream msg;
  msg.precision(17);
  if (rep.agree)
    msg << "agreement: both limits at ratio " << rep.flow_limit_ratio;
  else if (rep.divergence_flagged)
    msg << "divergence: flow collapses, iteration stops";
  else
    msg << "mismatch: iteration " << to_string(rep.iteration) << ", flow " << to_string(rep.flow);
  rep.summary = msg.str();
  return rep;
}

}  // namespace ricci
