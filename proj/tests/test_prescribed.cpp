#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ricci/errors.hpp"
#include "ricci/prescribed.hpp"

using namespace ricci;

namespace {

const PrescribedSolution& solution(const SolveResult& r) {
  REQUIRE(solvable(r));
  return std::get<PrescribedSolution>(r);
}

}  // namespace

TEST_CASE("eta constants of the non-maximal catalog spaces") {
  const EtaConstants so5 = eta_constants(catalog_space("so5-u2"));
  CHECK(so5.eta1 == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(so5.eta2 == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(so5.threshold() == doctest::Approx(2.0 / 3).epsilon(1e-15));
  const EtaConstants so6 = eta_constants(catalog_space("so6-su3"));
  CHECK(so6.eta1 == 0.0);
  CHECK(so6.eta2 == doctest::Approx(36.0).epsilon(1e-15));
}

TEST_CASE("frozen values of the closed-form solution map") {
  const HomogeneousSpace so5 = catalog_space("so5-u2");
  const HomogeneousSpace so6 = catalog_space("so6-su3");
  const EtaConstants e5 = eta_constants(so5), e6 = eta_constants(so6);
  CHECK(solution_map(so5, e5, 1.5) == doctest::Approx(1.608495283014150952830165094406).epsilon(1e-15));
  CHECK(solution_map(so5, e5, 3.0) == doctest::Approx(2.531128874149274826183306615152).epsilon(1e-15));
  CHECK(solution_map(so5, e5, 0.8) == doctest::Approx(0.5797958971132712392789136298824).epsilon(1e-15));
  CHECK(solution_map(so5, e5, 0.9) == doctest::Approx(0.8158988901172162730888642873062).epsilon(1e-15));
  CHECK(solution_map(so5, e5, solution_map(so5, e5, 0.9)) ==
        doctest::Approx(0.6224951630727188222118722462172).epsilon(1e-14));
  CHECK(solution_map(so6, e6, 5.0) == doctest::Approx(2.436902811724763911421000631530).epsilon(1e-15));
  // Einstein ratios are fixed by the map.
  CHECK(solution_map(so5, e5, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(solution_map(so5, e5, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(solution_map(so6, e6, 1.5) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("maximal solve: frozen SYN-1 value and the Einstein fixed points") {
  const HomogeneousSpace syn = catalog_space("syn-1");
  const PrescribedSolution s = solve_maximal(syn, 0.9);
  CHECK(s.alpha_g == doctest::Approx(0.8887665555886387930847753374802).epsilon(1e-13));
  CHECK(s.consistency_residual < 1e-12);
  CHECK(s.unique);
  CHECK(solve_maximal(syn, 1.0).alpha_g == doctest::Approx(1.0).epsilon(1e-13));
  const double alpha_minus = (7.0 - std::sqrt(13.0)) / 6.0;
  CHECK(solve_maximal(syn, alpha_minus).alpha_g == doctest::Approx(alpha_minus).epsilon(1e-12));
}

TEST_CASE("non-maximal solve: threshold is strict") {
  const HomogeneousSpace so5 = catalog_space("so5-u2");
  const SolveResult at = solve_nonmaximal(so5, 2.0 / 3.0);
  REQUIRE_FALSE(solvable(at));
  CHECK(std::get<NotSolvable>(at).threshold == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(solvable(solve_nonmaximal(so5, 0.5)));
  const PrescribedSolution& s = solution(solve_nonmaximal(so5, 0.6667));
  CHECK(s.alpha_g > 0.0);
  CHECK(s.alpha_g < 1e-3);
  CHECK_THROWS_AS(solve_nonmaximal(catalog_space("syn-1"), 1.0), DomainError);
  CHECK_THROWS_AS(solve(so5, DiagonalMetric{-1.0, 1.0}), DomainError);
}

TEST_CASE("constant Ricci tensor case: solvable only along the common Ricci ray") {
  // gamma_22^1 = 0 with gamma_11^2 = 0: Ric does not depend on the metric.
  HomogeneousSpace sp;
  sp.name = "product-like";
  sp.s = 2;
  sp.dims = {3, 5};
  sp.gamma = StructureConstants(2);
  sp.gamma.set_symmetric(0, 0, 0, 0.6);
  sp.gamma.set_symmetric(1, 1, 1, 1.0);
  sp.casimir = {0.3, 0.4};
  sp.killing = {2 * 0.3 + 0.6 / 3, 2 * 0.4 + 1.0 / 5};
  sp.has_intermediate = true;
  const RicciComponents r = ricci_s2(sp, 1.0);
  const double ratio = r[0] / r[1];
  CHECK(ricci_s2(sp, 7.0)[0] == doctest::Approx(r[0]));
  const SolveResult ok = solve_nonmaximal(sp, ratio);
  REQUIRE(solvable(ok));
  CHECK_FALSE(std::get<PrescribedSolution>(ok).unique);
  CHECK_FALSE(solvable(solve_nonmaximal(sp, ratio * 1.1)));
  CHECK_THROWS_AS(eta_constants(sp), DomainError);
}

TEST_CASE("property: maximal solutions are the unique root of P(., alpha_T)") {
  oracle::SpaceGenerator gen(0x501e);
  for (int n = 0; n < 150; ++n) {
    const HomogeneousSpace sp = gen.maximal();
    const double alpha_T = gen.log_uniform(1e-2, 1e2);
    const PrescribedSolution s = solve_maximal(sp, alpha_T);
    const RicciPolynomial P(sp);
    CAPTURE(n);
    CAPTURE(alpha_T);
    CHECK(std::abs(P(s.alpha_g, alpha_T)) <= 1e-10 * P.scale(s.alpha_g, alpha_T));
    CHECK(s.c > 0.0);
    CHECK(s.consistency_residual <= 1e-9);
    const auto roots = oracle::prescribed_scan(sp, alpha_T);
    REQUIRE(roots.size() == 1);
    CHECK(s.alpha_g == doctest::Approx(roots[0]).epsilon(1e-9));
  }
}

TEST_CASE("property: non-maximal solutions round-trip and match the scan oracle") {
  oracle::SpaceGenerator gen(0x2e2e);
  int solved = 0;
  for (int n = 0; n < 200; ++n) {
    const HomogeneousSpace sp = gen.intermediate();
    const double alpha_T = gen.log_uniform(1e-2, 1e2);
    const SolveResult r = solve_nonmaximal(sp, alpha_T);
    const auto roots = oracle::prescribed_scan(sp, alpha_T, 1e-6, 1e6, 60000);
    CAPTURE(n);
    CAPTURE(alpha_T);
    if (!solvable(r)) {
      CHECK(alpha_T <= std::get<NotSolvable>(r).threshold);
      CHECK(roots.empty());
      continue;
    }
    ++solved;
    const PrescribedSolution& s = std::get<PrescribedSolution>(r);
    const RicciPolynomial P(sp);
    CHECK(std::abs(P(s.alpha_g, alpha_T)) <= 1e-10 * P.scale(s.alpha_g, alpha_T));
    CHECK(s.c > 0.0);
    CHECK(s.consistency_residual <= 1e-9);
    REQUIRE(roots.size() == 1);
    CHECK(s.alpha_g == doctest::Approx(roots[0]).epsilon(1e-8));
  }
  CHECK(solved >= 100);
}

TEST_CASE("property: the solution map is increasing above the threshold") {
  oracle::SpaceGenerator gen(0xf00d);
  for (int n = 0; n < 150; ++n) {
    const HomogeneousSpace sp = gen.intermediate();
    const EtaConstants eta = eta_constants(sp);
    const double x = std::max(eta.threshold(), 1e-3) * gen.log_uniform(1.001, 100.0);
    const double h = 1e-6 * x;
    CAPTURE(n);
    CHECK(solution_map(sp, eta, x + h) > solution_map(sp, eta, x - h));
    CHECK(solution_map(sp, eta, x) > 0.0);
  }
}

TEST_CASE("semidefinite targets for maximal spaces") {
  const HomogeneousSpace syn = catalog_space("syn-1");
  const PrescribedSolution s = solve_maximal_semidefinite(syn, 1.0, 0.0);
  const RicciComponents r = ricci_s2(syn, s.alpha_g);
  CHECK(std::abs(r[1]) <= 1e-10 * std::abs(r[0]));
  CHECK(r[0] > 0.0);
  CHECK_THROWS_AS(solve_maximal_semidefinite(syn, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(solve_maximal_semidefinite(syn, -1.0, 1.0), DomainError);
}
