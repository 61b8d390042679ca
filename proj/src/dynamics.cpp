#include "ricci/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

void require_classifiable(const HomogeneousSpace& space, const char* op) {
  require_two_summands(space, op);
  if (!space.is_maximal && !space.has_intermediate)
    throw DomainError(std::string(op) +
                      ": space is neither maximal nor has an intermediate subgroup");
}

TrajectoryRecord make_record(const HomogeneousSpace& space, int step, const DiagonalMetric& g,
                             const RicciComponents& ric) {
  TrajectoryRecord rec;
  rec.step = step;
  rec.x1 = g[0];
  rec.x2 = g[1];
  rec.alpha = g[0] / g[1];
  rec.r1 = ric[0];
  rec.r2 = ric[1];
  rec.c = g[1];
  rec.scalar = space.d(1) * ric[0] / g[0] + space.d(2) * ric[1] / g[1];
  return rec;
}

// Matches a limit ratio to the Einstein set; Inconclusive when nothing is close.
void snap_to_einstein(const HomogeneousSpace& space, const EinsteinSet& set, double ratio,
                      RegimeOutcome& out) {
  const int n = set.find(ratio, kSnapTolerance);
  out.diagnostics["empirical_ratio"] = ratio;
  if (n < 0) {
    out.tag = OutcomeTag::Inconclusive;
    out.reason = "limit ratio " + fmt(ratio) + " matches no Einstein ratio";
    return;
  }
  out.tag = OutcomeTag::ConvergedEinstein;
  out.limit_ratio = set.ratios[n];
  out.limit = ricci_fixed_point(space, set, set.ratios[n]);
}

}  // namespace

RegimeOutcome::RegimeOutcome() : limit_ratio(kNaN) {}
RegimePrediction::RegimePrediction()
    : alpha_minus(kNaN), alpha_plus(kNaN), forward_limit_ratio(kNaN), ancient_limit_ratio(kNaN) {}

const char* to_string(OutcomeTag tag) {
  switch (tag) {
    case OutcomeTag::ConvergedEinstein: return "ConvergedEinstein";
    case OutcomeTag::NoIterationExists: return "NoIterationExists";
    case OutcomeTag::StoppedFinite: return "StoppedFinite";
    case OutcomeTag::CollapsedToSubgroup: return "CollapsedToSubgroup";
    case OutcomeTag::DivergedPositivityLoss: return "DivergedPositivityLoss";
    case OutcomeTag::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

const char* to_string(SpaceRegime regime) {
  switch (regime) {
    case SpaceRegime::Maximal: return "maximal";
    case SpaceRegime::IntermediateTrivial: return "intermediate-trivial";
    case SpaceRegime::IntermediateNontrivial: return "intermediate-nontrivial";
    case SpaceRegime::IntermediateNoEinstein: return "intermediate-no-einstein";
    case SpaceRegime::ConstantRicci: return "constant-ricci";
    case SpaceRegime::Unclassified: return "unclassified";
  }
  return "unknown";
}

const char* to_string(AncientLimit limit) {
  switch (limit) {
    case AncientLimit::None: return "none";
    case AncientLimit::Einstein: return "einstein";
    case AncientLimit::Collapse: return "collapse";
  }
  return "unknown";
}

std::variant<double, NotSolvable> step_forward(const HomogeneousSpace& space, double alpha) {
  require_classifiable(space, "step_forward");
  if (space.is_maximal) return solve_maximal(space, alpha).alpha_g;
  SolveResult r = solve_nonmaximal(space, alpha);
  if (auto* sol = std::get_if<PrescribedSolution>(&r)) return sol->alpha_g;
  return std::get<NotSolvable>(r);
}

IterationTrajectory run_forward(const HomogeneousSpace& space, const DiagonalMetric& T,
                                int max_steps, double tol) {
  require_classifiable(space, "run_forward");
  if (!T.is_metric() || T.size() != 2) throw DomainError("run_forward: T must be a positive 2-vector");
  if (max_steps < 1) throw DomainError("run_forward: max_steps must be positive");
  if (!(tol > 0.0)) throw DomainError("run_forward: tol must be positive");

  const EinsteinSet set = find_einstein(space);
  IterationTrajectory traj;
  RegimeOutcome& out = traj.outcome;

  // g_i is only known once alpha_{i+1} is: g_i = Ric g^{alpha_{i+1}}.
  double alpha = T.ratio();
  for (int i = 1;; ++i) {
    auto next = step_forward(space, alpha);
    if (auto* fail = std::get_if<NotSolvable>(&next)) {
      out.tag = OutcomeTag::NoIterationExists;
      out.step = i;
      out.reason = "step " + std::to_string(i) + ": " + fail->reason;
      out.diagnostics["failed_alpha"] = alpha;
      out.diagnostics["threshold"] = fail->threshold;
      return traj;
    }
    const double alpha_next = std::get<double>(next);
    const RicciComponents ric_next = ricci_s2(space, alpha_next);
    const DiagonalMetric g{ric_next[0], ric_next[1]};
    const RicciComponents ric = ricci_components(space, g);
    traj.records.push_back(make_record(space, i, g, ric));
    if (i == 1) traj.initial_scale_c = g[1] / T[1];

    if (std::abs(alpha_next - alpha) < tol * std::max(1.0, alpha)) {
      out.step = i;
      snap_to_einstein(space, set, alpha_next, out);
      return traj;
    }
    if (i >= max_steps) {
      out.tag = OutcomeTag::StoppedFinite;
      out.step = i;
      out.reason = "step cap reached before convergence";
      out.diagnostics["last_alpha"] = alpha_next;
      return traj;
    }
    alpha = alpha_next;
  }
}

std::variant<DiagonalMetric, PositivityLoss> step_backward(const HomogeneousSpace& space,
                                                           const DiagonalMetric& g) {
  const RicciComponents ric = ricci_components(space, g);
  for (std::size_t i = 0; i < ric.size(); ++i)
    if (!(ric[i] > 0.0)) return PositivityLoss{static_cast<int>(i) + 1, ric};
  return ric.as_tensor();
}

RicciIndex ricci_index(const HomogeneousSpace& space, const DiagonalMetric& g, int cap) {
  require_two_summands(space, "ricci_index");
  if (!g.is_metric()) throw DomainError("ricci_index: g must be a metric");
  const EinsteinSet set = find_einstein(space);
  if ((space.is_maximal || space.has_intermediate) && membership_M_infinity(space, set, g.ratio()))
    return {RicciIndex::Kind::Infinite, 0};
  DiagonalMetric current = g;
  for (int count = 1; count <= cap; ++count) {
    auto next = step_backward(space, current);
    if (std::holds_alternative<PositivityLoss>(next)) return {RicciIndex::Kind::Finite, count};
    current = std::get<DiagonalMetric>(next);
  }
  return {RicciIndex::Kind::CapReached, cap};
}

IterationTrajectory run_ancient(const HomogeneousSpace& space, const DiagonalMetric& g1, int steps,
                                double tol) {
  require_classifiable(space, "run_ancient");
  if (!g1.is_metric() || g1.size() != 2) throw DomainError("run_ancient: g1 must be a positive 2-vector");
  if (steps < 1) throw DomainError("run_ancient: steps must be positive");
  if (!(tol > 0.0)) throw DomainError("run_ancient: tol must be positive");

  const EinsteinSet set = find_einstein(space);
  const RicciPolynomial P(space);
  const double collapse_coefficient = P.theta2() / (4 * P.d1() * P.d2());

  IterationTrajectory traj;
  RegimeOutcome& out = traj.outcome;
  out.diagnostics["member_M_infinity"] = membership_M_infinity(space, set, g1.ratio()) ? 1.0 : 0.0;

  DiagonalMetric g = g1;
  for (int k = 0;; ++k) {
    const int step = 1 - k;
    const RicciComponents ric = ricci_components(space, g);
    traj.records.push_back(make_record(space, step, g, ric));

    if (g[0] < kCollapseRatio * g[1] &&
        std::abs(g[1] - collapse_coefficient) <= kCollapseCoefficientTol) {
      out.tag = OutcomeTag::CollapsedToSubgroup;
      out.step = step;
      out.limit_ratio = 0.0;
      out.limit = DiagonalMetric{0.0, collapse_coefficient};
      out.diagnostics["A2"] = collapse_coefficient;
      return traj;
    }
    if (!ric.positive()) {
      out.tag = OutcomeTag::DivergedPositivityLoss;
      out.step = step - 1;
      out.component = ric[0] > 0.0 ? 2 : 1;
      out.reason = "Ric g_" + std::to_string(step) + " is not positive in component " +
                   std::to_string(out.component);
      return traj;
    }
    const DiagonalMetric next = ric.as_tensor();
    bool settled = true;
    for (std::size_t i = 0; i < 2; ++i)
      settled = settled && std::abs(next[i] - g[i]) < tol * std::max(1.0, std::abs(g[i])) &&
                next[i] > tol;
    if (settled) {
      out.step = step - 1;
      snap_to_einstein(space, set, next.ratio(), out);
      traj.records.push_back(make_record(space, step - 1, next, ricci_components(space, next)));
      return traj;
    }
    if (k + 1 >= steps) {
      out.tag = OutcomeTag::StoppedFinite;
      out.step = step;
      out.reason = "step cap reached before convergence";
      out.diagnostics["last_alpha"] = g.ratio();
      return traj;
    }
    g = next;
  }
}

RegimePrediction classify(const HomogeneousSpace& space, const DiagonalMetric& T) {
  RegimePrediction p;
  if (space.s != 2 || !T.is_metric() || T.size() != 2) return p;
  p.alpha_T = T.ratio();
  p.trivial_first_summand = first_summand_trivial(space);
  if (!space.is_maximal && !space.has_intermediate) return p;

  const EinsteinSet set = find_einstein(space);
  p.einstein_empty = set.empty();
  p.alpha_minus = set.alpha_minus;
  p.alpha_plus = set.alpha_plus;
  const double a = p.alpha_T;
  const RicciPolynomial P(space);

  if (!space.is_maximal && !(space.g(2, 2, 1) > 0.0)) {
    p.regime = SpaceRegime::ConstantRicci;
    const bool einstein = !set.empty() && set.find(a, 1e-12) >= 0;
    p.forward_exists = einstein;
    p.forward_limit_ratio = einstein ? set.ratios.front() : kNaN;
    p.ancient_member = einstein;
    p.ancient_limit = einstein ? AncientLimit::Einstein : AncientLimit::None;
    p.ancient_limit_ratio = p.forward_limit_ratio;
    return p;
  }

  p.ancient_member = membership_M_infinity(space, set, a);
  const int at = set.find(a, 1e-12);

  if (space.is_maximal) {
    p.regime = SpaceRegime::Maximal;
    p.forward_exists = true;
    p.ancient_limit = p.ancient_member ? AncientLimit::Einstein : AncientLimit::None;
    if (at >= 0) {
      p.forward_limit_ratio = p.ancient_limit_ratio = set.ratios[at];
      return p;
    }
    // Between consecutive Einstein ratios the forward sequence moves toward
    // the endpoint given by the sign of tilde P, the ancient one away from it.
    const auto& r = set.ratios;
    if (a < r.front()) {
      p.forward_limit_ratio = r.front();
    } else if (a > r.back()) {
      p.forward_limit_ratio = r.back();
    } else {
      std::size_t n = 0;
      while (!(a > r[n] && a < r[n + 1])) ++n;
      const bool decreasing = P.tilde(a) < 0.0;
      p.forward_limit_ratio = decreasing ? r[n] : r[n + 1];
      if (p.ancient_member) p.ancient_limit_ratio = decreasing ? r[n + 1] : r[n];
    }
    return p;
  }

  if (set.empty()) {
    p.regime = SpaceRegime::IntermediateNoEinstein;
    return p;
  }
  if (p.trivial_first_summand) {
    p.regime = SpaceRegime::IntermediateTrivial;
    p.forward_exists = true;
    p.forward_limit_ratio = set.alpha_minus;
    if (p.ancient_member) {
      if (at >= 0) {
        p.ancient_limit = AncientLimit::Einstein;
        p.ancient_limit_ratio = set.alpha_minus;
      } else {
        p.ancient_limit = AncientLimit::Collapse;
        p.ancient_limit_ratio = 0.0;
      }
    }
    return p;
  }
  p.regime = SpaceRegime::IntermediateNontrivial;
  const double alpha_minus = set.alpha_minus;
  p.forward_exists = a >= alpha_minus * (1.0 - 1e-12);
  if (p.forward_exists)
    p.forward_limit_ratio = at >= 0 ? set.ratios[at] : set.alpha_plus;
  if (p.ancient_member) {
    p.ancient_limit = AncientLimit::Einstein;
    p.ancient_limit_ratio = at >= 0 ? set.ratios[at] : set.alpha_minus;
  }
  return p;
}

}  // namespace ricci
