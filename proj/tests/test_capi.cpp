#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include "ricci/ricci.h"

namespace {

struct Space {
  ricci_space* p = nullptr;
  explicit Space(const char* name) { REQUIRE(ricci_space_from_catalog(name, &p) == RICCI_OK); }
  ~Space() { ricci_space_free(p); }
};

std::string temp_path(const std::string& stem) {
  return std::string(P_tmpdir) + "/ricci_capi_" + stem;
}

}  // namespace

TEST_CASE("catalog names through the buffer protocol") {
  size_t needed = 0;
  CHECK(ricci_catalog_names(nullptr, 0, &needed) == RICCI_ERR_BUFFER);
  CHECK(needed == std::string("so5-u2\nso6-su3\nsyn-1\n").size() + 1);
  char small[4];
  CHECK(ricci_catalog_names(small, sizeof small, &needed) == RICCI_ERR_BUFFER);
  std::string buf(needed, '\0');
  REQUIRE(ricci_catalog_names(buf.data(), buf.size(), nullptr) == RICCI_OK);
  CHECK(std::string(buf.c_str()) == "so5-u2\nso6-su3\nsyn-1\n");
}

TEST_CASE("error codes and last error") {
  ricci_space* sp = nullptr;
  CHECK(ricci_space_from_catalog("no-such-space", &sp) == RICCI_ERR_DOMAIN);
  CHECK(sp == nullptr);
  CHECK(std::string(ricci_last_error()).find("no-such-space") != std::string::npos);
  CHECK(ricci_space_from_catalog(nullptr, &sp) == RICCI_ERR_ARGUMENT);
  CHECK(ricci_space_from_catalog("so5-u2", nullptr) == RICCI_ERR_ARGUMENT);
  CHECK(ricci_space_parse("{oops", 1, &sp) == RICCI_ERR_PARSE);
  CHECK(ricci_space_parse("{}", 1, &sp) == RICCI_ERR_SCHEMA);
  CHECK(ricci_space_load("/nonexistent/x.json", 1, &sp) == RICCI_ERR_IO);
  const char* bad = R"({"name": "bad", "s": 2, "dims": [2, 4], "killing": [1, 1],
      "casimir": [0.2, 0.2], "gamma": [{"i": 2, "k": 2, "l": 1, "value": "2/3"}],
      "has_intermediate": true})";
  CHECK(ricci_space_parse(bad, 1, &sp) == RICCI_ERR_VALIDATION);
  REQUIRE(ricci_space_parse(bad, 0, &sp) == RICCI_OK);
  int violations = 0;
  CHECK(ricci_space_validate(sp, 1e-12, &violations, nullptr, 0, nullptr) == RICCI_OK);
  CHECK(violations > 0);
  ricci_space_free(sp);

  Space so5("so5-u2");
  const double x[2] = {1.0, -1.0};
  double r[2];
  CHECK(ricci_ricci_components(so5.p, x, 2, r) == RICCI_ERR_DOMAIN);
  CHECK(std::string(ricci_status_name(RICCI_ERR_DOMAIN)) != "");
  CHECK(ricci_ricci_components(so5.p, x, 3, r) == RICCI_ERR_ARGUMENT);
  CHECK(ricci_ricci_components(so5.p, nullptr, 2, r) == RICCI_ERR_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  ricci_space* sp = nullptr;
  CHECK(ricci_space_from_catalog("main-thread-name", &sp) == RICCI_ERR_DOMAIN);
  std::string other;
  std::thread t([&] {
    ricci_space* q = nullptr;
    ricci_space_from_catalog("worker-name", &q);
    other = ricci_last_error();
  });
  t.join();
  CHECK(other.find("worker-name") != std::string::npos);
  CHECK(std::string(ricci_last_error()).find("main-thread-name") != std::string::npos);
}

TEST_CASE("space description, serialization and round trip") {
  Space so6("so6-su3");
  ricci_space_summary sum{};
  REQUIRE(ricci_space_describe(so6.p, &sum) == RICCI_OK);
  CHECK(sum.summands == 2);
  CHECK(sum.dimension == 7);
  CHECK(sum.dims[0] == 1);
  CHECK(sum.dims[1] == 6);
  CHECK(sum.has_intermediate == 1);
  CHECK(sum.trivial_first_summand == 1);

  size_t needed = 0;
  ricci_space_to_json(so6.p, nullptr, 0, &needed);
  std::string json(needed, '\0');
  REQUIRE(ricci_space_to_json(so6.p, json.data(), json.size(), nullptr) == RICCI_OK);
  ricci_space* back = nullptr;
  REQUIRE(ricci_space_parse(json.c_str(), 1, &back) == RICCI_OK);
  ricci_einstein e{};
  REQUIRE(ricci_find_einstein(back, &e) == RICCI_OK);
  CHECK(e.count == 1);
  CHECK(e.ratios[0] == doctest::Approx(1.5).epsilon(1e-12));
  ricci_space_free(back);

  const std::string path = temp_path("space.json");
  REQUIRE(ricci_space_save(so6.p, path.c_str()) == RICCI_OK);
  REQUIRE(ricci_space_load(path.c_str(), 1, &back) == RICCI_OK);
  char name[64];
  REQUIRE(ricci_space_name(back, name, sizeof name, nullptr) == RICCI_OK);
  CHECK(std::string(name).find("SU(3)") != std::string::npos);
  ricci_space_free(back);
  std::remove(path.c_str());
}

TEST_CASE("curvature, Einstein set and solve") {
  Space so5("so5-u2");
  const double x[2] = {2.0, 1.0};
  double r[2], S = 0;
  REQUIRE(ricci_ricci_components(so5.p, x, 2, r) == RICCI_OK);
  CHECK(r[0] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  REQUIRE(ricci_scalar_curvature(so5.p, x, 2, &S) == RICCI_OK);
  CHECK(S == doctest::Approx(2 * (2.0 / 3) / 2 + 4 * (1.0 / 3)).epsilon(1e-15));

  ricci_einstein e{};
  REQUIRE(ricci_find_einstein(so5.p, &e) == RICCI_OK);
  CHECK(e.count == 2);
  CHECK(e.alpha_minus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.alpha_plus == doctest::Approx(2.0).epsilon(1e-12));
  int member = -1;
  REQUIRE(ricci_membership_infinite(so5.p, 1.5, &member) == RICCI_OK);
  CHECK(member == 1);

  ricci_solution sol{};
  REQUIRE(ricci_solve(so5.p, 0.5, &sol) == RICCI_OK);
  CHECK(sol.solvable == 0);
  CHECK(sol.threshold == doctest::Approx(2.0 / 3));
  REQUIRE(ricci_solve(so5.p, 2.0, &sol) == RICCI_OK);
  CHECK(sol.solvable == 1);
  CHECK(sol.alpha_g == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("forward and ancient trajectories") {
  Space so5("so5-u2");
  ricci_trajectory* tr = nullptr;
  REQUIRE(ricci_run_forward(so5.p, 1.5, 10000, 1e-10, &tr) == RICCI_OK);
  ricci_outcome out{};
  REQUIRE(ricci_trajectory_outcome(tr, &out) == RICCI_OK);
  CHECK(out.tag == RICCI_CONVERGED_EINSTEIN);
  CHECK(out.limit_ratio == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(std::abs(out.limit_x1 - 2.0 / 3) < 1e-8);
  CHECK(std::abs(out.limit_x2 - 1.0 / 3) < 1e-8);
  CHECK(std::string(ricci_outcome_name(out.tag)) == "ConvergedEinstein");
  const size_t n = ricci_trajectory_length(tr);
  REQUIRE(n > 1);
  ricci_record rec{};
  REQUIRE(ricci_trajectory_record(tr, 0, &rec) == RICCI_OK);
  CHECK(rec.alpha == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(ricci_trajectory_record(tr, n, &rec) == RICCI_ERR_ARGUMENT);

  size_t needed = 0;
  CHECK(ricci_trajectory_csv(tr, nullptr, 0, &needed) == RICCI_ERR_BUFFER);
  std::string csv(needed, '\0');
  REQUIRE(ricci_trajectory_csv(tr, csv.data(), csv.size(), nullptr) == RICCI_OK);
  CHECK(csv.rfind("step,alpha,x1,x2,r1,r2,c,scalar\n", 0) == 0);
  CHECK(csv.find("# outcome=ConvergedEinstein") != std::string::npos);

  const std::string path = temp_path("traj.csv");
  REQUIRE(ricci_trajectory_write_csv(tr, path.c_str()) == RICCI_OK);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() + '\0' == csv);
  std::remove(path.c_str());
  ricci_trajectory_free(tr);

  REQUIRE(ricci_run_forward(so5.p, 0.9, 10000, 1e-10, &tr) == RICCI_OK);
  REQUIRE(ricci_trajectory_outcome(tr, &out) == RICCI_OK);
  CHECK(out.tag == RICCI_NO_ITERATION_EXISTS);
  CHECK(std::isnan(out.limit_x1));
  ricci_trajectory_free(tr);

  Space so6("so6-su3");
  REQUIRE(ricci_run_ancient(so6.p, 1.0, 1.0, 5000, 1e-10, &tr) == RICCI_OK);
  REQUIRE(ricci_trajectory_outcome(tr, &out) == RICCI_OK);
  CHECK(out.tag == RICCI_COLLAPSED_TO_SUBGROUP);
  CHECK(std::abs(out.limit_x2 - 0.5) <= 1e-6);
  ricci_trajectory_free(tr);

  int kind = -1, value = -1;
  REQUIRE(ricci_ricci_index(so6.p, 3.0, 1.0, 100, &kind, &value) == RICCI_OK);
  CHECK(kind == RICCI_INDEX_FINITE);
  CHECK(value == 2);
  REQUIRE(ricci_ricci_index(so6.p, 1.0, 1.0, 100, &kind, &value) == RICCI_OK);
  CHECK(kind == RICCI_INDEX_INFINITE);
  CHECK(ricci_run_forward(so5.p, -1.0, 10, 1e-10, &tr) == RICCI_ERR_DOMAIN);
  CHECK(tr == nullptr);
}

TEST_CASE("classification and flow") {
  Space so5("so5-u2");
  ricci_prediction pred{};
  REQUIRE(ricci_classify(so5.p, 1.5, &pred) == RICCI_OK);
  CHECK(pred.regime == RICCI_REGIME_INTERMEDIATE_NONTRIVIAL);
  CHECK(pred.forward_exists == 1);
  CHECK(pred.forward_limit_ratio == doctest::Approx(2.0));
  CHECK(std::string(ricci_regime_name(pred.regime)) == "intermediate-nontrivial");

  double v = 0;
  REQUIRE(ricci_ratio_flow_rhs(so5.p, 1.5, &v) == RICCI_OK);
  CHECK(v == doctest::Approx(-(0.5) * (-0.5) / 3).epsilon(1e-12));
  const double x[2] = {1.0, 1.0};
  double rhs[2];
  REQUIRE(ricci_flow_rhs(so5.p, x, 2, rhs) == RICCI_OK);
  CHECK(rhs[0] == doctest::Approx(-5.0 / 6));

  ricci_flow* fl = nullptr;
  REQUIRE(ricci_integrate_ratio_flow(so5.p, 3.0, 100.0, 0.01, &fl) == RICCI_OK);
  int outcome = -1;
  double limit = 0;
  REQUIRE(ricci_flow_result(fl, &outcome, &limit) == RICCI_OK);
  CHECK(outcome == RICCI_FLOW_RATIO_CONVERGED);
  CHECK(limit == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(std::string(ricci_flow_outcome_name(outcome)) == "RatioConverged");
  ricci_flow_sample s{};
  REQUIRE(ricci_flow_get_sample(fl, 0, &s) == RICCI_OK);
  CHECK(s.t == 0.0);
  CHECK(s.alpha == 3.0);
  CHECK(ricci_flow_get_sample(fl, ricci_flow_length(fl), &s) == RICCI_ERR_ARGUMENT);
  size_t needed = 0;
  ricci_flow_csv(fl, nullptr, 0, &needed);
  CHECK(needed > 100);
  ricci_flow_free(fl);

  REQUIRE(ricci_integrate_flow(so5.p, 1.0, 1.0, 10.0, 0.01, &fl) == RICCI_OK);
  REQUIRE(ricci_flow_result(fl, &outcome, &limit) == RICCI_OK);
  CHECK(outcome == RICCI_FLOW_EXTINCTION);
  ricci_flow_free(fl);

  ricci_comparison cmp{};
  REQUIRE(ricci_compare_flow_iteration(so5.p, 0.5, 100.0, 0.01, &cmp) == RICCI_OK);
  CHECK(cmp.divergence_flagged == 1);
  CHECK(cmp.flow == RICCI_FLOW_RATIO_COLLAPSED);
  CHECK(cmp.iteration == RICCI_NO_ITERATION_EXISTS);
}

TEST_CASE("free functions accept null") {
  ricci_space_free(nullptr);
  ricci_trajectory_free(nullptr);
  ricci_flow_free(nullptr);
  CHECK(ricci_trajectory_length(nullptr) == 0);
  CHECK(ricci_flow_length(nullptr) == 0);
}
