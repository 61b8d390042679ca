#pragma once

#include <string>

#include "ricci/dynamics.hpp"
#include "ricci/flow.hpp"

namespace ricci {

/// CSV with header `step,alpha,x1,x2,r1,r2,c,scalar`, numbers in %.17g, and a
/// final `# outcome=<tag> limit_ratio=<v> limit_x1=<v> limit_x2=<v>` line.
std::string trajectory_csv(const IterationTrajectory& traj);

/// Same layout with `t` in place of `step`; r_i are the Ricci components at each sample
/// and c is x_2.
std::string trajectory_csv(const HomogeneousSpace& space, const FlowTrajectory& traj);

/// %.17g, with nan and inf spelled as such.
std::string format_number(double v);

}  // namespace ricci
