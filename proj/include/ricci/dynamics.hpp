#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/einstein.hpp"
#include "ricci/prescribed.hpp"
#include "ricci/space.hpp"

namespace ricci {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultMaxSteps = 10000;
/// A converged ratio is matched to an Einstein ratio within this relative distance.
inline constexpr double kSnapTolerance = 1e-6;
/// Collapse is declared once x_1 < kCollapseRatio * x_2 ...
inline constexpr double kCollapseRatio = 1e-9;
/// ... and x_2 is within kCollapseCoefficientTol of the limit coefficient.
inline constexpr double kCollapseCoefficientTol = 1e-6;

enum class OutcomeTag {
  ConvergedEinstein,
  NoIterationExists,
  StoppedFinite,
  CollapsedToSubgroup,
  DivergedPositivityLoss,
  Inconclusive,
};

const char* to_string(OutcomeTag tag);

struct RegimeOutcome {
  OutcomeTag tag = OutcomeTag::Inconclusive;
  double limit_ratio;     // Einstein ratio, 0 for a collapse, NaN otherwise
  DiagonalMetric limit;   // fixed point, or the degenerate limit (0, A_2)
  int step = 0;           // step at which the run stopped or failed
  int component = 0;      // 1-based component that lost positivity
  std::string reason;
  std::map<std::string, double> diagnostics;

  RegimeOutcome();
};

/// One metric of an iteration. `c` is the scale with g = c (alpha, 1); in the
/// forward direction it is also the constant in Ric g^{alpha_{i+1}} = c g^{alpha_i}.
struct TrajectoryRecord {
  int step = 0;
  double alpha = 0.0;
  double x1 = 0.0, x2 = 0.0;
  double r1 = 0.0, r2 = 0.0;
  double c = 0.0;
  double scalar = 0.0;
};

struct IterationTrajectory {
  std::vector<TrajectoryRecord> records;
  RegimeOutcome outcome;
  /// c with g_1 = c T (forward runs only).
  double initial_scale_c = 0.0;
};

/// alpha_{i+1} from alpha_i: the ratio of the solution of Ric g = c g^{alpha_i}.
std::variant<double, NotSolvable> step_forward(const HomogeneousSpace& space, double alpha);

/// Ric g_{i+1} = g_i with g_1 = c T. Stops once
/// |alpha_{i+1} - alpha_i| < tol max(1, alpha_i), on a failed step, or after
/// max_steps metrics.
IterationTrajectory run_forward(const HomogeneousSpace& space, const DiagonalMetric& T,
                                int max_steps = kDefaultMaxSteps,
                                double tol = kDefaultTolerance);

struct PositivityLoss {
  int component = 0;  // 1-based
  RicciComponents ricci;
};

/// Ric g when it is again a metric.
std::variant<DiagonalMetric, PositivityLoss> step_backward(const HomogeneousSpace& space,
                                                           const DiagonalMetric& g);

struct RicciIndex {
  enum class Kind { Finite, Infinite, CapReached } kind = Kind::Finite;
  int value = 0;  // number of metrics in g, Ric g, Ric Ric g, ...

  bool infinite() const noexcept { return kind == Kind::Infinite; }
};

/// Infinite by closed-form membership; otherwise counts the chain until the
/// first non-metric. `cap` bounds that count.
RicciIndex ricci_index(const HomogeneousSpace& space, const DiagonalMetric& g, int cap = 1000);

/// g_{i-1} = Ric g_i starting from g_1. Stops on convergence to a fixed point,
/// on collapse of the first summand, on positivity loss, or after `steps`.
IterationTrajectory run_ancient(const HomogeneousSpace& space, const DiagonalMetric& g1,
                                int steps = kDefaultMaxSteps, double tol = kDefaultTolerance);

enum class SpaceRegime {
  Maximal,             // H maximal in G
  IntermediateTrivial, // K exists, isotropy action on m_1 trivial
  IntermediateNontrivial,
  IntermediateNoEinstein,
  ConstantRicci,       // gamma_22^1 = 0: all metrics share one Ricci tensor
  Unclassified,
};

const char* to_string(SpaceRegime regime);

enum class AncientLimit { None, Einstein, Collapse };

const char* to_string(AncientLimit limit);

/// Regime predicted from the closed-form statements, without iterating.
struct RegimePrediction {
  SpaceRegime regime = SpaceRegime::Unclassified;
  double alpha_T = 0.0;
  double alpha_minus;
  double alpha_plus;
  bool einstein_empty = true;
  bool trivial_first_summand = false;

  bool forward_exists = false;
  double forward_limit_ratio;

  bool ancient_member = false;
  AncientLimit ancient_limit = AncientLimit::None;
  double ancient_limit_ratio;

  RegimePrediction();
};

RegimePrediction classify(const HomogeneousSpace& space, const DiagonalMetric& T);

}  // namespace ricci
