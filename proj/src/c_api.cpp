#include "ricci/ricci.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>

#include "ricci/curvature.hpp"
#include "ricci/dynamics.hpp"
#include "ricci/einstein.hpp"
#include "ricci/errors.hpp"
#include "ricci/flow.hpp"
#include "ricci/prescribed.hpp"
#include "ricci/space.hpp"
#include "ricci/trajectory_io.hpp"

struct ricci_space {
  ricci::HomogeneousSpace value;
};

struct ricci_trajectory {
  ricci::IterationTrajectory value;
};

struct ricci_flow {
  ricci::HomogeneousSpace space;
  ricci::FlowTrajectory value;
};

static_assert(RICCI_CONVERGED_EINSTEIN == static_cast<int>(ricci::OutcomeTag::ConvergedEinstein));
static_assert(RICCI_INCONCLUSIVE == static_cast<int>(ricci::OutcomeTag::Inconclusive));
static_assert(RICCI_REGIME_UNCLASSIFIED == static_cast<int>(ricci::SpaceRegime::Unclassified));
static_assert(RICCI_ANCIENT_COLLAPSE == static_cast<int>(ricci::AncientLimit::Collapse));
static_assert(RICCI_FLOW_INCONCLUSIVE == static_cast<int>(ricci::FlowOutcome::Inconclusive));
static_assert(RICCI_INDEX_CAP_REACHED == static_cast<int>(ricci::RicciIndex::Kind::CapReached));

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

thread_local std::string last_error;

ricci_status fail(ricci_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
ricci_status guarded(Body body) {
  try {
    last_error.clear();
    return body();
  } catch (const ricci::DomainError& e) {
    return fail(RICCI_ERR_DOMAIN, e.what());
  } catch (const ricci::ParseError& e) {
    return fail(RICCI_ERR_PARSE, e.what());
  } catch (const ricci::SchemaError& e) {
    return fail(RICCI_ERR_SCHEMA, e.what());
  } catch (const ricci::ValidationError& e) {
    return fail(RICCI_ERR_VALIDATION, e.what());
  } catch (const ricci::NumericalError& e) {
    return fail(RICCI_ERR_NUMERICAL, e.what());
  } catch (const ricci::IoError& e) {
    return fail(RICCI_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RICCI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RICCI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RICCI_ERR_INTERNAL, "unknown error");
  }
}

ricci_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  const size_t size = text.size() + 1;
  if (needed) *needed = size;
  if (cap < size || !buf) {
    if (cap > 0 && buf) buf[0] = '\0';
    return fail(RICCI_ERR_BUFFER, "buffer of " + std::to_string(cap) + " bytes, need " +
                                      std::to_string(size));
  }
  std::memcpy(buf, text.c_str(), size);
  return RICCI_OK;
}

ricci_status write_file(const std::string& text, const char* path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail(RICCI_ERR_IO, std::string("cannot write '") + path + "'");
  out << text;
  out.flush();
  if (!out) return fail(RICCI_ERR_IO, std::string("write failed for '") + path + "'");
  return RICCI_OK;
}

#define RICCI_REQUIRE(cond, what) \
  do {                            \
    if (!(cond)) return fail(RICCI_ERR_ARGUMENT, what); \
  } while (0)

ricci::DiagonalMetric to_metric(const double* x, size_t n) {
  return ricci::DiagonalMetric(std::vector<double>(x, x + n));
}

}  // namespace

extern "C" {

const char* ricci_last_error(void) { return last_error.c_str(); }

const char* ricci_status_name(ricci_status status) {
  switch (status) {
    case RICCI_OK: return "ok";
    case RICCI_ERR_ARGUMENT: return "argument";
    case RICCI_ERR_DOMAIN: return "domain";
    case RICCI_ERR_PARSE: return "parse";
    case RICCI_ERR_SCHEMA: return "schema";
    case RICCI_ERR_VALIDATION: return "validation";
    case RICCI_ERR_NUMERICAL: return "numerical";
    case RICCI_ERR_IO: return "io";
    case RICCI_ERR_BUFFER: return "buffer";
    case RICCI_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

ricci_status ricci_catalog_names(char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    std::string text;
    for (const std::string& n : ricci::catalog_names()) text += n + "\n";
    return copy_out(text, buf, cap, needed);
  });
}

ricci_status ricci_space_from_catalog(const char* name, ricci_space** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(name && out, "null argument");
  return guarded([&] {
    *out = new ricci_space{ricci::catalog_space(name)};
    return RICCI_OK;
  });
}

ricci_status ricci_space_load(const char* path, int reject_invalid, ricci_space** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(path && out, "null argument");
  return guarded([&] {
    ricci::LoadOptions opts;
    opts.policy = reject_invalid ? ricci::ValidationPolicy::Reject : ricci::ValidationPolicy::Warn;
    *out = new ricci_space{ricci::load_space(path, opts)};
    return RICCI_OK;
  });
}

ricci_status ricci_space_parse(const char* json, int reject_invalid, ricci_space** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(json && out, "null argument");
  return guarded([&] {
    ricci::LoadOptions opts;
    opts.policy = reject_invalid ? ricci::ValidationPolicy::Reject : ricci::ValidationPolicy::Warn;
    *out = new ricci_space{ricci::parse_space(json, opts)};
    return RICCI_OK;
  });
}

ricci_status ricci_space_save(const ricci_space* space, const char* path) {
  RICCI_REQUIRE(space && path, "null argument");
  return guarded([&] {
    ricci::save_space(space->value, path);
    return RICCI_OK;
  });
}

ricci_status ricci_space_to_json(const ricci_space* space, char* buf, size_t cap, size_t* needed) {
  RICCI_REQUIRE(space, "null space");
  return guarded([&] { return copy_out(ricci::serialize_space(space->value), buf, cap, needed); });
}

void ricci_space_free(ricci_space* space) { delete space; }

ricci_status ricci_space_describe(const ricci_space* space, ricci_space_summary* out) {
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    const ricci::HomogeneousSpace& sp = space->value;
    *out = ricci_space_summary{};
    out->summands = sp.s;
    out->dimension = sp.dimension();
    for (int i = 0; i < 2 && i < static_cast<int>(sp.dims.size()); ++i) out->dims[i] = sp.dims[i];
    out->is_maximal = sp.is_maximal;
    out->has_intermediate = sp.has_intermediate;
    out->trivial_first_summand = ricci::first_summand_trivial(sp);
    return RICCI_OK;
  });
}

ricci_status ricci_space_name(const ricci_space* space, char* buf, size_t cap, size_t* needed) {
  RICCI_REQUIRE(space, "null space");
  return guarded([&] { return copy_out(space->value.name, buf, cap, needed); });
}

ricci_status ricci_space_validate(const ricci_space* space, double tol, int* violations, char* buf,
                                  size_t cap, size_t* needed) {
  RICCI_REQUIRE(space && violations, "null argument");
  RICCI_REQUIRE(tol > 0.0, "tolerance must be positive");
  return guarded([&] {
    const ricci::ValidationReport rep = ricci::validate_space(space->value, tol);
    *violations = static_cast<int>(rep.violations.size());
    if (!buf && cap == 0) {
      if (needed) *needed = rep.to_string().size() + 1;
      return RICCI_OK;
    }
    return copy_out(rep.to_string(), buf, cap, needed);
  });
}

ricci_status ricci_ricci_components(const ricci_space* space, const double* x, size_t n,
                                    double* out) {
  RICCI_REQUIRE(space && x && out, "null argument");
  return guarded([&] {
    if (n != static_cast<size_t>(space->value.s))
      return fail(RICCI_ERR_ARGUMENT, "expected " + std::to_string(space->value.s) + " components");
    const ricci::RicciComponents r = ricci::ricci_components(space->value, to_metric(x, n));
    for (size_t i = 0; i < n; ++i) out[i] = r[i];
    return RICCI_OK;
  });
}

ricci_status ricci_scalar_curvature(const ricci_space* space, const double* x, size_t n,
                                    double* out) {
  RICCI_REQUIRE(space && x && out, "null argument");
  return guarded([&] {
    if (n != static_cast<size_t>(space->value.s))
      return fail(RICCI_ERR_ARGUMENT, "expected " + std::to_string(space->value.s) + " components");
    *out = ricci::scalar_curvature(space->value, to_metric(x, n));
    return RICCI_OK;
  });
}

ricci_status ricci_find_einstein(const ricci_space* space, ricci_einstein* out) {
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    const ricci::EinsteinSet set = ricci::find_einstein(space->value);
    *out = ricci_einstein{};
    out->count = static_cast<int>(set.ratios.size());
    for (size_t n = 0; n < set.ratios.size() && n < 3; ++n) {
      out->ratios[n] = set.ratios[n];
      out->constants[n] = set.constants[n];
      out->multiplicities[n] = set.multiplicities[n];
    }
    out->alpha_minus = set.alpha_minus;
    out->alpha_plus = set.alpha_plus;
    return RICCI_OK;
  });
}

ricci_status ricci_membership_infinite(const ricci_space* space, double alpha, int* out) {
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    *out = ricci::membership_M_infinity(space->value, alpha) ? 1 : 0;
    return RICCI_OK;
  });
}

ricci_status ricci_solve(const ricci_space* space, double alpha_T, ricci_solution* out) {
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    const ricci::SolveResult r = ricci::solve(space->value, ricci::DiagonalMetric{alpha_T, 1.0});
    *out = ricci_solution{};
    if (const auto* sol = std::get_if<ricci::PrescribedSolution>(&r)) {
      out->solvable = 1;
      out->alpha_g = sol->alpha_g;
      out->c = sol->c;
      out->unique = sol->unique;
      out->residual = sol->consistency_residual;
      out->threshold = kNaN;
    } else {
      const auto& ns = std::get<ricci::NotSolvable>(r);
      out->alpha_g = out->c = out->residual = kNaN;
      out->threshold = ns.threshold;
      last_error = ns.reason;
    }
    return RICCI_OK;
  });
}

ricci_status ricci_classify(const ricci_space* space, double alpha_T, ricci_prediction* out) {
  RICCI_REQUIRE(space && out, "null argument");
  if (!(alpha_T > 0.0) || !std::isfinite(alpha_T))
    return fail(RICCI_ERR_DOMAIN, "alpha_T must be positive and finite");
  return guarded([&] {
    const ricci::RegimePrediction p =
        ricci::classify(space->value, ricci::DiagonalMetric{alpha_T, 1.0});
    out->regime = static_cast<int>(p.regime);
    out->alpha_minus = p.alpha_minus;
    out->alpha_plus = p.alpha_plus;
    out->einstein_empty = p.einstein_empty;
    out->trivial_first_summand = p.trivial_first_summand;
    out->forward_exists = p.forward_exists;
    out->forward_limit_ratio = p.forward_limit_ratio;
    out->ancient_member = p.ancient_member;
    out->ancient_limit = static_cast<int>(p.ancient_limit);
    out->ancient_limit_ratio = p.ancient_limit_ratio;
    return RICCI_OK;
  });
}

const char* ricci_regime_name(int regime) {
  if (regime < 0 || regime > RICCI_REGIME_UNCLASSIFIED) return "unknown";
  return ricci::to_string(static_cast<ricci::SpaceRegime>(regime));
}

const char* ricci_ancient_limit_name(int limit) {
  if (limit < 0 || limit > RICCI_ANCIENT_COLLAPSE) return "unknown";
  return ricci::to_string(static_cast<ricci::AncientLimit>(limit));
}

ricci_status ricci_run_forward(const ricci_space* space, double alpha_T, int max_steps, double tol,
                               ricci_trajectory** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(space && out, "null argument");
  if (!(alpha_T > 0.0) || !std::isfinite(alpha_T))
    return fail(RICCI_ERR_DOMAIN, "alpha_T must be positive and finite");
  return guarded([&] {
    *out = new ricci_trajectory{
        ricci::run_forward(space->value, ricci::DiagonalMetric{alpha_T, 1.0}, max_steps, tol)};
    return RICCI_OK;
  });
}

ricci_status ricci_run_ancient(const ricci_space* space, double x1, double x2, int steps,
                               double tol, ricci_trajectory** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    *out = new ricci_trajectory{
        ricci::run_ancient(space->value, ricci::DiagonalMetric{x1, x2}, steps, tol)};
    return RICCI_OK;
  });
}

ricci_status ricci_trajectory_outcome(const ricci_trajectory* traj, ricci_outcome* out) {
  RICCI_REQUIRE(traj && out, "null argument");
  const ricci::RegimeOutcome& o = traj->value.outcome;
  out->tag = static_cast<int>(o.tag);
  out->limit_ratio = o.limit_ratio;
  out->limit_x1 = o.limit.size() == 2 ? o.limit[0] : kNaN;
  out->limit_x2 = o.limit.size() == 2 ? o.limit[1] : kNaN;
  out->step = o.step;
  out->component = o.component;
  out->initial_scale_c = traj->value.initial_scale_c;
  return RICCI_OK;
}

ricci_status ricci_trajectory_reason(const ricci_trajectory* traj, char* buf, size_t cap,
                                     size_t* needed) {
  RICCI_REQUIRE(traj, "null trajectory");
  return guarded([&] { return copy_out(traj->value.outcome.reason, buf, cap, needed); });
}

size_t ricci_trajectory_length(const ricci_trajectory* traj) {
  return traj ? traj->value.records.size() : 0;
}

ricci_status ricci_trajectory_record(const ricci_trajectory* traj, size_t index,
                                     ricci_record* out) {
  RICCI_REQUIRE(traj && out, "null argument");
  RICCI_REQUIRE(index < traj->value.records.size(), "record index out of range");
  const ricci::TrajectoryRecord& r = traj->value.records[index];
  *out = ricci_record{r.step, r.alpha, r.x1, r.x2, r.r1, r.r2, r.c, r.scalar};
  return RICCI_OK;
}

ricci_status ricci_trajectory_csv(const ricci_trajectory* traj, char* buf, size_t cap,
                                  size_t* needed) {
  RICCI_REQUIRE(traj, "null trajectory");
  return guarded([&] { return copy_out(ricci::trajectory_csv(traj->value), buf, cap, needed); });
}

ricci_status ricci_trajectory_write_csv(const ricci_trajectory* traj, const char* path) {
  RICCI_REQUIRE(traj && path, "null argument");
  return guarded([&] { return write_file(ricci::trajectory_csv(traj->value), path); });
}

void ricci_trajectory_free(ricci_trajectory* traj) { delete traj; }

const char* ricci_outcome_name(int tag) {
  if (tag < 0 || tag > RICCI_INCONCLUSIVE) return "unknown";
  return ricci::to_string(static_cast<ricci::OutcomeTag>(tag));
}

ricci_status ricci_ricci_index(const ricci_space* space, double x1, double x2, int cap, int* kind,
                               int* value) {
  RICCI_REQUIRE(space && kind && value, "null argument");
  RICCI_REQUIRE(cap > 0, "cap must be positive");
  return guarded([&] {
    const ricci::RicciIndex idx =
        ricci::ricci_index(space->value, ricci::DiagonalMetric{x1, x2}, cap);
    *kind = static_cast<int>(idx.kind);
    *value = idx.value;
    return RICCI_OK;
  });
}

ricci_status ricci_flow_rhs(const ricci_space* space, const double* x, size_t n, double* out) {
  RICCI_REQUIRE(space && x && out, "null argument");
  return guarded([&] {
    if (n != static_cast<size_t>(space->value.s))
      return fail(RICCI_ERR_ARGUMENT, "expected " + std::to_string(space->value.s) + " components");
    const std::vector<double> v = ricci::flow_rhs(space->value, to_metric(x, n));
    for (size_t i = 0; i < n; ++i) out[i] = v[i];
    return RICCI_OK;
  });
}

ricci_status ricci_ratio_flow_rhs(const ricci_space* space, double alpha, double* out) {
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    *out = ricci::ratio_flow_rhs(space->value, alpha);
    return RICCI_OK;
  });
}

ricci_status ricci_integrate_ratio_flow(const ricci_space* space, double alpha0, double t_max,
                                        double dt, ricci_flow** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    *out = new ricci_flow{space->value,
                          ricci::integrate_ratio_flow(space->value, alpha0, t_max, dt)};
    return RICCI_OK;
  });
}

ricci_status ricci_integrate_flow(const ricci_space* space, double x1, double x2, double t_max,
                                  double dt, ricci_flow** out) {
  if (out) *out = nullptr;
  RICCI_REQUIRE(space && out, "null argument");
  return guarded([&] {
    *out = new ricci_flow{
        space->value, ricci::integrate_flow(space->value, ricci::DiagonalMetric{x1, x2}, t_max, dt)};
    return RICCI_OK;
  });
}

ricci_status ricci_flow_result(const ricci_flow* flow, int* outcome, double* limit_ratio) {
  RICCI_REQUIRE(flow && outcome && limit_ratio, "null argument");
  *outcome = static_cast<int>(flow->value.outcome);
  *limit_ratio = flow->value.limit_ratio;
  return RICCI_OK;
}

size_t ricci_flow_length(const ricci_flow* flow) { return flow ? flow->value.samples.size() : 0; }

ricci_status ricci_flow_get_sample(const ricci_flow* flow, size_t index, ricci_flow_sample* out) {
  RICCI_REQUIRE(flow && out, "null argument");
  RICCI_REQUIRE(index < flow->value.samples.size(), "sample index out of range");
  const ricci::FlowSample& s = flow->value.samples[index];
  *out = ricci_flow_sample{s.t, s.alpha, s.x[0], s.x[1], s.scalar};
  return RICCI_OK;
}

ricci_status ricci_flow_csv(const ricci_flow* flow, char* buf, size_t cap, size_t* needed) {
  RICCI_REQUIRE(flow, "null flow");
  return guarded(
      [&] { return copy_out(ricci::trajectory_csv(flow->space, flow->value), buf, cap, needed); });
}

ricci_status ricci_flow_write_csv(const ricci_flow* flow, const char* path) {
  RICCI_REQUIRE(flow && path, "null argument");
  return guarded([&] { return write_file(ricci::trajectory_csv(flow->space, flow->value), path); });
}

void ricci_flow_free(ricci_flow* flow) { delete flow; }

const char* ricci_flow_outcome_name(int outcome) {
  if (outcome < 0 || outcome > RICCI_FLOW_INCONCLUSIVE) return "unknown";
  return ricci::to_string(static_cast<ricci::FlowOutcome>(outcome));
}

ricci_status ricci_compare_flow_iteration(const ricci_space* space, double alpha0, double t_max,
                                          double dt, ricci_comparison* out) {
  RICCI_REQUIRE(space && out, "null argument");
  RICCI_REQUIRE(alpha0 > 0.0 && std::isfinite(alpha0), "alpha0 must be positive");
  return guarded([&] {
    const ricci::ComparisonReport rep =
        ricci::compare_flow_iteration(space->value, alpha0, t_max, dt);
    out->alpha0 = rep.alpha0;
    out->regime = static_cast<int>(rep.prediction.regime);
    out->iteration = static_cast<int>(rep.iteration);
    out->iteration_limit_ratio = rep.iteration_limit_ratio;
    out->flow = static_cast<int>(rep.flow);
    out->flow_limit_ratio = rep.flow_limit_ratio;
    out->agree = rep.agree;
    out->divergence_flagged = rep.divergence_flagged;
    out->divergence_expected = rep.divergence_expected;
    return RICCI_OK;
  });
}

}  // extern "C"
