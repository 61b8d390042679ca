#pragma once

#include <string>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/dynamics.hpp"
#include "ricci/space.hpp"

namespace ricci {

enum class FlowOutcome {
  RatioConverged,
  RatioCollapsedToZero,
  RatioDivergedToInfinity,
  ExtinctionReached,
  Inconclusive,
};

const char* to_string(FlowOutcome outcome);

struct FlowSample {
  double t = 0.0;
  DiagonalMetric x;  // (alpha, 1) for the ratio flow
  double alpha = 0.0;
  double scalar = 0.0;
};

struct FlowTrajectory {
  std::vector<FlowSample> samples;  // t strictly increasing
  FlowOutcome outcome = FlowOutcome::Inconclusive;
  double limit_ratio;  // Einstein ratio, 0 on collapse, inf on divergence, else NaN
  std::string reason;

  FlowTrajectory();
};

inline constexpr double kFlowCollapseRatio = 1e-9;
inline constexpr double kFlowDivergenceRatio = 1e9;
inline constexpr double kFlowConvergenceTol = 1e-8;

/// dx_i/dt = -2 r_i(x).
std::vector<double> flow_rhs(const HomogeneousSpace& space, const DiagonalMetric& x);

/// d alpha/dt = -2 (r_1(alpha) - alpha r_2(alpha)), the flow with x_2 normalized to 1.
/// Its zeros are the Einstein ratios.
double ratio_flow_rhs(const HomogeneousSpace& space, double alpha);

/// RK4 with nominal step dt; a step is halved while |d alpha| > 0.1 alpha and
/// regrows toward dt once it is small again. Runs to t_max unless alpha leaves
/// [1e-9, 1e9]. A start within 1e-10 of an Einstein ratio is that equilibrium.
FlowTrajectory integrate_ratio_flow(const HomogeneousSpace& space, double alpha0, double t_max,
                                    double dt);

/// The unnormalized flow of both components, with the same step control per
/// component. Ends with ExtinctionReached once a component would reach zero.
FlowTrajectory integrate_flow(const HomogeneousSpace& space, const DiagonalMetric& x0,
                              double t_max, double dt);

struct ComparisonReport {
  double alpha0 = 0.0;
  RegimePrediction prediction;
  OutcomeTag iteration = OutcomeTag::Inconclusive;
  double iteration_limit_ratio;
  FlowOutcome flow = FlowOutcome::Inconclusive;
  double flow_limit_ratio;
  bool agree = false;               // both converged to the same ratio within 1e-6
  bool divergence_flagged = false;  // flow collapses where the iteration stops
  bool divergence_expected = false; // predicted from the regime alone
  std::string summary;

  ComparisonReport();
};

ComparisonReport compare_flow_iteration(const HomogeneousSpace& space, double alpha0,
                                        double t_max = 100.0, double dt = 0.01);

}  // namespace ricci
