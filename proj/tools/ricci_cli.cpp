// Command-line front end over the C interface in ricci/ricci.h.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 mathematical
// non-existence, 3 validation failure, 4 step cap or inconclusive result.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci/ricci.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kNonExistence = 2, kValidation = 3, kCap = 4 };

struct Config {
  std::string space;
  std::string file;
  std::optional<double> ratio;
  std::optional<double> x1, x2;
  double tol = 1e-10;
  int max_steps = 10000;
  int steps = 10000;
  double t_max = 100.0;
  double dt = 0.01;
  std::string out;
  std::string format;  // empty: the command default
  // sweep
  double from = 0.1, to = 10.0;
  int count = 50;
  int threads = 0;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Listings for reading rather than round-tripping: 12 significant digits hide
// last-place noise in computed roots.
std::string display_num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Thrown to unwind with a specific exit code after printing a one-line error.
struct Abort {
  int code;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << message << '\n';
  throw Abort{code};
}

int status_exit(ricci_status s) {
  switch (s) {
    case RICCI_ERR_PARSE:
    case RICCI_ERR_SCHEMA:
    case RICCI_ERR_VALIDATION: return kValidation;
    case RICCI_ERR_NUMERICAL: return kCap;
    default: return kUsage;
  }
}

void check(ricci_status s) {
  if (s != RICCI_OK)
    die(status_exit(s), std::string("error: ") + ricci_status_name(s) + ": " + ricci_last_error());
}

using SpacePtr = std::unique_ptr<ricci_space, decltype(&ricci_space_free)>;
using TrajPtr = std::unique_ptr<ricci_trajectory, decltype(&ricci_trajectory_free)>;
using FlowPtr = std::unique_ptr<ricci_flow, decltype(&ricci_flow_free)>;

SpacePtr open_space(const Config& cfg, bool reject_invalid = true) {
  ricci_space* sp = nullptr;
  if (!cfg.space.empty())
    check(ricci_space_from_catalog(cfg.space.c_str(), &sp));
  else if (!cfg.file.empty())
    check(ricci_space_load(cfg.file.c_str(), reject_invalid ? 1 : 0, &sp));
  else
    die(kUsage, "error: usage: one of --space or --file is required");
  return SpacePtr(sp, &ricci_space_free);
}

std::string read_string(ricci_status (*fn)(const ricci_space*, char*, size_t, size_t*),
                        const ricci_space* sp) {
  size_t needed = 0;
  fn(sp, nullptr, 0, &needed);
  std::string s(needed, '\0');
  check(fn(sp, s.data(), s.size(), &needed));
  s.resize(needed - 1);
  return s;
}

std::string trajectory_text(const ricci_trajectory* t) {
  size_t needed = 0;
  ricci_trajectory_csv(t, nullptr, 0, &needed);
  std::string s(needed, '\0');
  check(ricci_trajectory_csv(t, s.data(), s.size(), &needed));
  s.resize(needed - 1);
  return s;
}

std::string trajectory_reason(const ricci_trajectory* t) {
  size_t needed = 0;
  ricci_trajectory_reason(t, nullptr, 0, &needed);
  std::string s(needed, '\0');
  check(ricci_trajectory_reason(t, s.data(), s.size(), &needed));
  s.resize(needed - 1);
  return s;
}

std::string flow_text(const ricci_flow* f) {
  size_t needed = 0;
  ricci_flow_csv(f, nullptr, 0, &needed);
  std::string s(needed, '\0');
  check(ricci_flow_csv(f, s.data(), s.size(), &needed));
  s.resize(needed - 1);
  return s;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) die(kUsage, "error: io: cannot write '" + cfg.out + "'");
  out << text;
  if (!out) die(kUsage, "error: io: write failed for '" + cfg.out + "'");
}

double initial_ratio(const Config& cfg) {
  if (cfg.ratio) return *cfg.ratio;
  if (cfg.x1 && cfg.x2) return *cfg.x1 / *cfg.x2;
  die(kUsage, "error: usage: --ratio or --x1/--x2 is required");
}

void require_positive(const Config& cfg) {
  if (cfg.ratio && !(*cfg.ratio > 0.0)) die(kUsage, "error: usage: --ratio must be positive");
  if ((cfg.x1 && !(*cfg.x1 > 0.0)) || (cfg.x2 && !(*cfg.x2 > 0.0)))
    die(kUsage, "error: usage: --x1 and --x2 must be positive");
}

ricci_prediction predict(const ricci_space* sp, double alpha) {
  ricci_prediction p{};
  check(ricci_classify(sp, alpha, &p));
  return p;
}

std::string outcome_text(const ricci_outcome& o, size_t records) {
  std::ostringstream s;
  s << "outcome=" << ricci_outcome_name(o.tag) << " limit_ratio=" << num(o.limit_ratio)
    << " limit_x1=" << num(o.limit_x1) << " limit_x2=" << num(o.limit_x2) << " step=" << o.step
    << " records=" << records << '\n';
  return s.str();
}

int cmd_catalog(const Config& cfg) {
  size_t needed = 0;
  ricci_catalog_names(nullptr, 0, &needed);
  std::string names(needed, '\0');
  check(ricci_catalog_names(names.data(), names.size(), &needed));
  names.resize(needed - 1);

  std::ostringstream out;
  std::istringstream lines(names);
  for (std::string name; std::getline(lines, name);) {
    ricci_space* raw = nullptr;
    check(ricci_space_from_catalog(name.c_str(), &raw));
    SpacePtr sp(raw, &ricci_space_free);
    const auto doc = nlohmann::json::parse(read_string(&ricci_space_to_json, sp.get()));
    ricci_einstein e{};
    check(ricci_find_einstein(sp.get(), &e));

    out << "[" << name << "] " << doc["name"].get<std::string>() << '\n';
    out << "  d =";
    for (const auto& d : doc["dims"]) out << ' ' << d.get<int>();
    out << "\n  zeta =";
    for (const auto& z : doc["casimir"]) out << ' ' << display_num(z.get<double>());
    out << "\n  gamma:";
    for (const auto& g : doc["gamma"])
      out << " (" << g["i"].get<int>() << g["k"].get<int>() << g["l"].get<int>()
          << ")=" << display_num(g["value"].get<double>());
    out << "\n  maximal=" << doc.value("is_maximal", false)
        << " intermediate=" << doc.value("has_intermediate", false) << '\n';
    out << "  alpha_minus=" << display_num(e.alpha_minus) << " alpha_plus=" << display_num(e.alpha_plus) << '\n';
    for (int n = 0; n < e.count; ++n)
      out << "  einstein ratio=" << display_num(e.ratios[n]) << " constant=" << display_num(e.constants[n])
          << " multiplicity=" << e.multiplicities[n] << '\n';
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_validate(const Config& cfg) {
  SpacePtr sp = open_space(cfg, false);
  int violations = 0;
  size_t needed = 0;
  check(ricci_space_validate(sp.get(), 1e-12, &violations, nullptr, 0, &needed));
  std::string report(needed, '\0');
  check(ricci_space_validate(sp.get(), 1e-12, &violations, report.data(), report.size(), &needed));
  report.resize(needed - 1);
  const std::string name = read_string(&ricci_space_name, sp.get());
  if (violations == 0) {
    emit(cfg, "valid: " + name + "\n");
    return kOk;
  }
  std::cerr << "validation: " << name << ": " << violations << " violation(s)\n" << report;
  if (!report.empty() && report.back() != '\n') std::cerr << '\n';
  return kValidation;
}

int cmd_iterate(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  const double alpha = initial_ratio(cfg);
  ricci_trajectory* raw = nullptr;
  check(ricci_run_forward(sp.get(), alpha, cfg.max_steps, cfg.tol, &raw));
  TrajPtr traj(raw, &ricci_trajectory_free);
  ricci_outcome o{};
  check(ricci_trajectory_outcome(traj.get(), &o));

  emit(cfg, cfg.format != "text" ? trajectory_text(traj.get())
                                : outcome_text(o, ricci_trajectory_length(traj.get())));
  switch (o.tag) {
    case RICCI_CONVERGED_EINSTEIN: return kOk;
    case RICCI_NO_ITERATION_EXISTS: {
      const ricci_prediction p = predict(sp.get(), alpha);
      if (alpha < p.alpha_minus)
        die(kNonExistence, "no-iteration: alpha_T below alpha_minus=" + short_num(p.alpha_minus));
      die(kNonExistence, "no-iteration: " + trajectory_reason(traj.get()));
    }
    case RICCI_STOPPED_FINITE: die(kCap, "cap: step cap reached after " + std::to_string(o.step) + " steps");
    default: die(kCap, "inconclusive: " + trajectory_reason(traj.get()));
  }
}

int cmd_ancient(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  double x1 = 0.0, x2 = 1.0;
  if (cfg.x1 && cfg.x2) {
    x1 = *cfg.x1;
    x2 = *cfg.x2;
  } else {
    x1 = initial_ratio(cfg);
  }
  ricci_trajectory* raw = nullptr;
  check(ricci_run_ancient(sp.get(), x1, x2, cfg.steps, cfg.tol, &raw));
  TrajPtr traj(raw, &ricci_trajectory_free);
  ricci_outcome o{};
  check(ricci_trajectory_outcome(traj.get(), &o));

  emit(cfg, cfg.format != "text" ? trajectory_text(traj.get())
                                : outcome_text(o, ricci_trajectory_length(traj.get())));
  switch (o.tag) {
    case RICCI_CONVERGED_EINSTEIN:
    case RICCI_COLLAPSED_TO_SUBGROUP: return kOk;
    case RICCI_DIVERGED_POSITIVITY_LOSS:
      die(kNonExistence, "positivity-loss: " + trajectory_reason(traj.get()));
    case RICCI_STOPPED_FINITE: die(kCap, "cap: step cap reached after " + std::to_string(cfg.steps) + " steps");
    default: die(kCap, "inconclusive: " + trajectory_reason(traj.get()));
  }
}

int cmd_flow(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  ricci_flow* raw = nullptr;
  if (cfg.x1 && cfg.x2)
    check(ricci_integrate_flow(sp.get(), *cfg.x1, *cfg.x2, cfg.t_max, cfg.dt, &raw));
  else
    check(ricci_integrate_ratio_flow(sp.get(), initial_ratio(cfg), cfg.t_max, cfg.dt, &raw));
  FlowPtr flow(raw, &ricci_flow_free);
  int outcome = 0;
  double limit = 0.0;
  check(ricci_flow_result(flow.get(), &outcome, &limit));
  if (cfg.format != "text") {
    emit(cfg, flow_text(flow.get()));
  } else {
    emit(cfg, std::string("outcome=") + ricci_flow_outcome_name(outcome) + " limit_ratio=" +
                  num(limit) + " samples=" + std::to_string(ricci_flow_length(flow.get())) + "\n");
  }
  if (outcome == RICCI_FLOW_INCONCLUSIVE) die(kCap, "inconclusive: flow did not settle by t_max");
  return kOk;
}

int cmd_classify(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  const double alpha = initial_ratio(cfg);
  const ricci_prediction p = predict(sp.get(), alpha);
  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "alpha_T,regime,alpha_minus,alpha_plus,einstein_empty,trivial_first_summand,"
           "forward_exists,forward_limit_ratio,ancient_member,ancient_limit,ancient_limit_ratio\n";
    out << num(alpha) << ',' << ricci_regime_name(p.regime) << ',' << num(p.alpha_minus) << ','
        << num(p.alpha_plus) << ',' << p.einstein_empty << ',' << p.trivial_first_summand << ','
        << p.forward_exists << ',' << num(p.forward_limit_ratio) << ',' << p.ancient_member << ','
        << ricci_ancient_limit_name(p.ancient_limit) << ',' << num(p.ancient_limit_ratio) << '\n';
  } else {
    out << "alpha_T=" << num(alpha) << '\n'
        << "regime=" << ricci_regime_name(p.regime) << '\n'
        << "alpha_minus=" << num(p.alpha_minus) << '\n'
        << "alpha_plus=" << num(p.alpha_plus) << '\n'
        << "einstein_empty=" << p.einstein_empty << '\n'
        << "trivial_first_summand=" << p.trivial_first_summand << '\n'
        << "forward_exists=" << p.forward_exists << '\n'
        << "forward_limit_ratio=" << num(p.forward_limit_ratio) << '\n'
        << "ancient_member=" << p.ancient_member << '\n'
        << "ancient_limit=" << ricci_ancient_limit_name(p.ancient_limit) << '\n'
        << "ancient_limit_ratio=" << num(p.ancient_limit_ratio) << '\n';
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_index(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  double x1 = cfg.x1 ? *cfg.x1 : initial_ratio(cfg), x2 = cfg.x2 ? *cfg.x2 : 1.0;
  int kind = 0, value = 0;
  check(ricci_ricci_index(sp.get(), x1, x2, cfg.steps, &kind, &value));
  if (kind == RICCI_INDEX_INFINITE) {
    emit(cfg, "index=infinite\n");
    return kOk;
  }
  emit(cfg, "index=" + std::to_string(value) + (kind == RICCI_INDEX_CAP_REACHED ? " cap_reached\n" : "\n"));
  return kind == RICCI_INDEX_CAP_REACHED ? kCap : kOk;
}

int cmd_solve(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  const double alpha = initial_ratio(cfg);
  ricci_solution sol{};
  check(ricci_solve(sp.get(), alpha, &sol));
  if (!sol.solvable) die(kNonExistence, std::string("not-solvable: ") + ricci_last_error());
  emit(cfg, "alpha_g=" + num(sol.alpha_g) + " c=" + num(sol.c) + " unique=" +
                std::to_string(sol.unique) + " residual=" + num(sol.residual) + "\n");
  return kOk;
}

int cmd_compare(const Config& cfg) {
  require_positive(cfg);
  SpacePtr sp = open_space(cfg);
  const double alpha = initial_ratio(cfg);
  ricci_comparison c{};
  check(ricci_compare_flow_iteration(sp.get(), alpha, cfg.t_max, cfg.dt, &c));
  std::ostringstream out;
  out << "alpha0=" << num(c.alpha0) << '\n'
      << "regime=" << ricci_regime_name(c.regime) << '\n'
      << "iteration=" << ricci_outcome_name(c.iteration)
      << " limit_ratio=" << num(c.iteration_limit_ratio) << '\n'
      << "flow=" << ricci_flow_outcome_name(c.flow) << " limit_ratio=" << num(c.flow_limit_ratio)
      << '\n'
      << "agree=" << c.agree << '\n'
      << "divergence_flagged=" << c.divergence_flagged << '\n'
      << "divergence_expected=" << c.divergence_expected << '\n';
  emit(cfg, out.str());
  return kOk;
}

struct SweepRow {
  std::string line;
  ricci_status status = RICCI_OK;
  std::string error;
};

// One run per grid point; rows are written back in grid order.
SweepRow sweep_point(const ricci_space* sp, double alpha, const Config& cfg) {
  SweepRow row;
  auto bail = [&](ricci_status s) {
    row.status = s;
    row.error = ricci_last_error();
    return row;
  };
  ricci_prediction p{};
  if (ricci_status s = ricci_classify(sp, alpha, &p); s != RICCI_OK) return bail(s);

  ricci_trajectory* fwd = nullptr;
  if (ricci_status s = ricci_run_forward(sp, alpha, cfg.max_steps, cfg.tol, &fwd); s != RICCI_OK)
    return bail(s);
  TrajPtr f(fwd, &ricci_trajectory_free);
  ricci_outcome fo{};
  ricci_trajectory_outcome(f.get(), &fo);

  ricci_trajectory* anc = nullptr;
  if (ricci_status s = ricci_run_ancient(sp, alpha, 1.0, cfg.steps, cfg.tol, &anc); s != RICCI_OK)
    return bail(s);
  TrajPtr a(anc, &ricci_trajectory_free);
  ricci_outcome ao{};
  ricci_trajectory_outcome(a.get(), &ao);

  std::ostringstream s;
  s << num(alpha) << ',' << ricci_regime_name(p.regime) << ',' << p.forward_exists << ','
    << num(p.forward_limit_ratio) << ',' << ricci_outcome_name(fo.tag) << ','
    << num(fo.limit_ratio) << ',' << fo.step << ',' << p.ancient_member << ','
    << ricci_ancient_limit_name(p.ancient_limit) << ',' << num(p.ancient_limit_ratio) << ','
    << ricci_outcome_name(ao.tag) << ',' << num(ao.limit_ratio) << ',' << ao.step << '\n';
  row.line = s.str();
  return row;
}

int cmd_sweep(const Config& cfg) {
  SpacePtr sp = open_space(cfg);
  if (!(cfg.from > 0.0) || !(cfg.to > cfg.from) || cfg.count < 2)
    die(kUsage, "error: usage: sweep needs 0 < --from < --to and --count >= 2");
  std::vector<double> grid(cfg.count);
  const double step = std::log(cfg.to / cfg.from) / (cfg.count - 1);
  for (int n = 0; n < cfg.count; ++n) grid[n] = cfg.from * std::exp(step * n);

  std::vector<SweepRow> rows(grid.size());
  std::atomic<size_t> next{0};
  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < grid.size();)
          rows[i] = sweep_point(sp.get(), grid[i], cfg);
      });
  }

  std::string text =
      "alpha_T,regime,forward_exists,predicted_forward_limit,forward_outcome,forward_limit,"
      "forward_steps,ancient_member,predicted_ancient_limit,predicted_ancient_ratio,"
      "ancient_outcome,ancient_limit,ancient_step\n";
  for (const SweepRow& r : rows) {
    if (r.status != RICCI_OK)
      die(status_exit(r.status), std::string("error: ") + ricci_status_name(r.status) + ": " + r.error);
    text += r.line;
  }
  emit(cfg, text);
  return kOk;
}

void add_space_options(CLI::App* cmd, Config& cfg) {
  auto* space = cmd->add_option("--space", cfg.space, "catalog space name");
  auto* file = cmd->add_option("--file", cfg.file, "space definition file (JSON)");
  space->excludes(file);
  file->excludes(space);
}

void add_start_options(CLI::App* cmd, Config& cfg) {
  auto* ratio = cmd->add_option("--ratio", cfg.ratio, "initial ratio x1/x2");
  auto* x1 = cmd->add_option("--x1", cfg.x1, "first component");
  auto* x2 = cmd->add_option("--x2", cfg.x2, "second component");
  x1->needs(x2);
  x2->needs(x1);
  ratio->excludes(x1);
  ratio->excludes(x2);
}

void add_output_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--out", cfg.out, "output path (default: stdout)");
  cmd->add_option("--format", cfg.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ricci iteration, ancient iteration and Ricci flow on two-summand homogeneous spaces"};
  app.require_subcommand(1);
  Config cfg;

  auto* catalog = app.add_subcommand("catalog", "list built-in spaces with Einstein data");
  catalog->add_option("--out", cfg.out, "output path (default: stdout)");

  auto* validate = app.add_subcommand("validate", "check the structure data of a space");
  add_space_options(validate, cfg);
  validate->add_option("--out", cfg.out, "output path (default: stdout)");

  auto* iterate = app.add_subcommand("iterate", "forward Ricci iteration Ric g_{i+1} = g_i");
  add_space_options(iterate, cfg);
  add_start_options(iterate, cfg);
  iterate->add_option("--tol", cfg.tol, "ratio convergence tolerance")->check(CLI::PositiveNumber);
  iterate->add_option("--max-steps", cfg.max_steps, "step cap")->check(CLI::PositiveNumber);
  add_output_options(iterate, cfg);

  auto* ancient = app.add_subcommand("ancient", "ancient iteration g_{i-1} = Ric g_i");
  add_space_options(ancient, cfg);
  add_start_options(ancient, cfg);
  ancient->add_option("--tol", cfg.tol, "component convergence tolerance")->check(CLI::PositiveNumber);
  ancient->add_option("--steps", cfg.steps, "step cap")->check(CLI::PositiveNumber);
  add_output_options(ancient, cfg);

  auto* flow = app.add_subcommand("flow", "Ricci flow; ratio flow unless --x1/--x2 are given");
  add_space_options(flow, cfg);
  add_start_options(flow, cfg);
  flow->add_option("--t-max", cfg.t_max, "final time")->check(CLI::PositiveNumber);
  flow->add_option("--dt", cfg.dt, "nominal step")->check(CLI::PositiveNumber);
  add_output_options(flow, cfg);

  auto* classify = app.add_subcommand("classify", "predicted regime without iterating");
  add_space_options(classify, cfg);
  add_start_options(classify, cfg);
  add_output_options(classify, cfg);

  auto* index = app.add_subcommand("index", "Ricci index of a metric");
  add_space_options(index, cfg);
  add_start_options(index, cfg);
  index->add_option("--steps", cfg.steps, "cap on the counted chain")->check(CLI::PositiveNumber);
  index->add_option("--out", cfg.out, "output path (default: stdout)");

  auto* solve = app.add_subcommand("solve", "solve Ric g = c T for T = (ratio, 1)");
  add_space_options(solve, cfg);
  add_start_options(solve, cfg);
  solve->add_option("--out", cfg.out, "output path (default: stdout)");

  auto* compare = app.add_subcommand("compare", "flow versus iteration limits");
  add_space_options(compare, cfg);
  add_start_options(compare, cfg);
  compare->add_option("--t-max", cfg.t_max, "final time")->check(CLI::PositiveNumber);
  compare->add_option("--dt", cfg.dt, "nominal step")->check(CLI::PositiveNumber);
  compare->add_option("--out", cfg.out, "output path (default: stdout)");

  auto* sweep = app.add_subcommand("sweep", "forward and ancient runs over a log grid of ratios");
  add_space_options(sweep, cfg);
  sweep->add_option("--from", cfg.from, "smallest ratio")->check(CLI::PositiveNumber);
  sweep->add_option("--to", cfg.to, "largest ratio")->check(CLI::PositiveNumber);
  sweep->add_option("--count", cfg.count, "grid points");
  sweep->add_option("--tol", cfg.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  sweep->add_option("--max-steps", cfg.max_steps, "forward step cap")->check(CLI::PositiveNumber);
  sweep->add_option("--steps", cfg.steps, "ancient step cap")->check(CLI::PositiveNumber);
  sweep->add_option("--threads", cfg.threads, "worker threads (default: hardware)");
  sweep->add_option("--out", cfg.out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(cfg);
    if (*validate) return cmd_validate(cfg);
    if (*iterate) return cmd_iterate(cfg);
    if (*ancient) return cmd_ancient(cfg);
    if (*flow) return cmd_flow(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*index) return cmd_index(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*compare) return cmd_compare(cfg);
    if (*sweep) return cmd_sweep(cfg);
  } catch (const Abort& a) {
    return a.code;
  }
  return kUsage;
}
