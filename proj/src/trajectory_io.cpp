#include "ricci/trajectory_io.hpp"

#include <cmath>
#include <cstdio>

namespace ricci {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void append_row(std::string& out, std::initializer_list<double> values, int first) {
  out += std::to_string(first);
  for (double v : values) {
    out += ',';
    out += format_number(v);
  }
  out += '\n';
}

void append_summary(std::string& out, const char* tag, double ratio, double x1, double x2) {
  out += "# outcome=";
  out += tag;
  out += " limit_ratio=" + format_number(ratio);
  out += " limit_x1=" + format_number(x1);
  out += " limit_x2=" + format_number(x2);
  out += '\n';
}

}  // namespace

std::string trajectory_csv(const IterationTrajectory& traj) {
  std::string out = "step,alpha,x1,x2,r1,r2,c,scalar\n";
  for (const TrajectoryRecord& r : traj.records)
    append_row(out, {r.alpha, r.x1, r.x2, r.r1, r.r2, r.c, r.scalar}, r.step);
  const RegimeOutcome& o = traj.outcome;
  const bool has_limit = o.limit.size() == 2;
  append_summary(out, to_string(o.tag), o.limit_ratio, has_limit ? o.limit[0] : NAN,
                 has_limit ? o.limit[1] : NAN);
  return out;
}

std::string trajectory_csv(const HomogeneousSpace& space, const FlowTrajectory& traj) {
  std::string out = "t,alpha,x1,x2,r1,r2,c,scalar\n";
  for (const FlowSample& s : traj.samples) {
    const RicciComponents r = ricci_components(space, s.x);
    out += format_number(s.t);
    for (double v : {s.alpha, s.x[0], s.x[1], r[0], r[1], s.x[1], s.scalar}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  double x1 = NAN, x2 = NAN;
  if (traj.outcome == FlowOutcome::RatioConverged) {
    x1 = traj.limit_ratio;
    x2 = 1.0;
  } else if (traj.outcome == FlowOutcome::RatioCollapsedToZero) {
    x1 = 0.0;
    x2 = 1.0;
  }
  append_summary(out, to_string(traj.outcome), traj.limit_ratio, x1, x2);
  return out;
}

}  // namespace ricci
