#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "oracles.hpp"
#include "ricci/errors.hpp"
#include "ricci/space.hpp"

using namespace ricci;

namespace {

std::string temp_path(const std::string& stem) {
  return std::string(P_tmpdir) + "/ricci_test_" + stem + ".json";
}

const char* kSo5U2Document = R"({
  "name": "SO(5)/U(2) from file",
  "s": 2,
  "dims": [2, 4],
  "killing": [1, 1],
  "casimir": ["1/3", "1/3"],
  "gamma": [{"i": 2, "k": 2, "l": 1, "value": "2/3"}],
  "has_intermediate": true
})";

}  // namespace

TEST_CASE("catalog spaces carry the exact constants") {
  struct Entry {
    const char* name;
    oracle::RationalSpace exact;
  };
  const Entry entries[] = {{"so5-u2", oracle::noncollapsing(3)},
                           {"so6-su3", oracle::collapsing(3)},
                           {"syn-1", oracle::synthetic()},
                           {"so2m-1-um-1:m=5", oracle::noncollapsing(5)},
                           {"so2m-sum:m=4", oracle::collapsing(4)}};
  for (const Entry& e : entries) {
    CAPTURE(e.name);
    const HomogeneousSpace sp = catalog_space(e.name);
    const HomogeneousSpace ref = e.exact.to_space(sp.name);
    CHECK(sp.dims == ref.dims);
    for (int i = 0; i < 2; ++i) {
      CHECK(sp.killing[i] == doctest::Approx(ref.killing[i]).epsilon(1e-15));
      CHECK(sp.casimir[i] == doctest::Approx(ref.casimir[i]).epsilon(1e-15));
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(sp.gamma(i, k, l) == doctest::Approx(ref.gamma(i, k, l)).epsilon(1e-15));
    }
    CHECK(sp.is_maximal == ref.is_maximal);
    CHECK(sp.has_intermediate == ref.has_intermediate);
    CHECK(validate_space(sp).ok());
  }
}

TEST_CASE("catalog names and lookup") {
  const auto names = catalog_names();
  CHECK(names == std::vector<std::string>{"so5-u2", "so6-su3", "syn-1"});
  CHECK(catalog_space("so2m-1-um-1:m=3") == catalog_space("so5-u2"));
  CHECK(catalog_space("so2m-sum:m=3") == catalog_space("so6-su3"));
  CHECK_THROWS_AS(catalog_space("so7-g2"), DomainError);
  CHECK_THROWS_AS(catalog_space("so2m-sum:m=2"), DomainError);
  CHECK_THROWS_AS(catalog_space("so2m-sum:m=x"), DomainError);
}

TEST_CASE("SO(6)/SU(3) has trivial isotropy action on the first summand") {
  CHECK(first_summand_trivial(catalog_space("so6-su3")));
  CHECK_FALSE(first_summand_trivial(catalog_space("so5-u2")));
  CHECK_FALSE(first_summand_trivial(catalog_space("syn-1")));
}

TEST_CASE("validation reports each broken invariant") {
  SUBCASE("asymmetric gamma is reported once per slot pair") {
    HomogeneousSpace sp = catalog_space("so5-u2");
    sp.gamma.set(1, 1, 0, 0.7);
    const ValidationReport rep = validate_space(sp);
    CHECK(rep.has(ViolationKind::Asymmetry));
    CHECK(sp.gamma.asymmetry() == doctest::Approx(0.7 - 2.0 / 3.0));
  }
  SUBCASE("Casimir identity residual") {
    HomogeneousSpace sp = catalog_space("so6-su3");
    sp.killing[1] = 1.01;
    const ValidationReport rep = validate_space(sp);
    REQUIRE(rep.has(ViolationKind::Casimir));
    for (const Violation& v : rep.violations)
      if (v.kind == ViolationKind::Casimir) CHECK(v.residual == doctest::Approx(0.01));
  }
  SUBCASE("maximal flag needs gamma_ii^k > 0") {
    HomogeneousSpace sp = catalog_space("so5-u2");
    sp.is_maximal = true;
    sp.has_intermediate = false;
    CHECK(validate_space(sp).has(ViolationKind::Maximality));
  }
  SUBCASE("intermediate flag needs gamma_11^2 = 0") {
    HomogeneousSpace sp = catalog_space("syn-1");
    sp.is_maximal = false;
    sp.has_intermediate = true;
    CHECK(validate_space(sp).has(ViolationKind::Intermediate));
  }
  SUBCASE("zeta_i = 0 only on one-dimensional summands") {
    HomogeneousSpace sp = catalog_space("so5-u2");
    sp.casimir[0] = 0.0;
    const ValidationReport rep = validate_space(sp);
    CHECK(rep.has(ViolationKind::TrivialAction));
  }
  SUBCASE("negative and non-finite constants") {
    HomogeneousSpace sp = catalog_space("so5-u2");
    sp.gamma.set_symmetric(0, 0, 0, -0.5);
    CHECK(validate_space(sp).has(ViolationKind::NegativeConstant));
    sp = catalog_space("so5-u2");
    sp.casimir[1] = std::nan("");
    CHECK(validate_space(sp).has(ViolationKind::NonFinite));
  }
  SUBCASE("shape") {
    HomogeneousSpace sp = catalog_space("so5-u2");
    sp.dims.pop_back();
    CHECK(validate_space(sp).has(ViolationKind::Shape));
    sp = catalog_space("so5-u2");
    sp.dims[0] = 0;
    CHECK(validate_space(sp).has(ViolationKind::NonPositiveDimension));
  }
}

TEST_CASE("symmetrize averages permutation orbits") {
  StructureConstants g(2);
  g.set(0, 1, 1, 0.3);
  g.set(1, 0, 1, 0.6);
  g.set(1, 1, 0, 0.9);
  g.symmetrize();
  CHECK(g.asymmetry() == 0.0);
  CHECK(g(0, 1, 1) == doctest::Approx(0.6));
  StructureConstants h(2);
  h.set_symmetric(0, 0, 1, 1.0 / 3.0);
  const StructureConstants before = h;
  h.symmetrize();
  CHECK(h == before);
}

TEST_CASE("property: randomized Casimir-consistent data validates; perturbations are caught") {
  oracle::SpaceGenerator gen(0x5eed01);
  for (int n = 0; n < 200; ++n) {
    HomogeneousSpace sp = gen.any();
    CAPTURE(n);
    const ValidationReport rep = validate_space(sp);
    CHECK_MESSAGE(rep.ok(), rep.to_string());

    HomogeneousSpace bent = sp;
    bent.killing[gen.integer(0, 1)] += gen.uniform(1e-6, 1e-2);
    CHECK(validate_space(bent).has(ViolationKind::Casimir));

    HomogeneousSpace skew = sp;
    skew.gamma.set(0, 1, 1, skew.gamma(0, 1, 1) + gen.uniform(1e-6, 1e-2));
    CHECK(validate_space(skew).has(ViolationKind::Asymmetry));
  }
}

TEST_CASE("parse_number accepts decimals and rationals") {
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number("2/3") == doctest::Approx(2.0 / 3.0).epsilon(1e-16));
  CHECK(parse_number("-1/4") == -0.25);
  CHECK_THROWS_AS(parse_number("1/0"), ParseError);
  CHECK_THROWS_AS(parse_number("abc"), ParseError);
  CHECK_THROWS_AS(parse_number("1/2x"), ParseError);
}

TEST_CASE("space documents parse, canonicalize and round-trip") {
  const HomogeneousSpace sp = parse_space(kSo5U2Document);
  const HomogeneousSpace ref = catalog_space("so5-u2");
  CHECK(sp.dims == ref.dims);
  CHECK(sp.gamma(0, 1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-16));
  CHECK(sp.gamma(1, 0, 1) == sp.gamma(1, 1, 0));
  CHECK(sp.has_intermediate);
  CHECK_FALSE(sp.is_maximal);

  const HomogeneousSpace again = parse_space(serialize_space(ref));
  CHECK(again == ref);

  const std::string path = temp_path("roundtrip");
  save_space(catalog_space("syn-1"), path);
  CHECK(load_space(path) == catalog_space("syn-1"));
  std::remove(path.c_str());
}

TEST_CASE("malformed documents raise the matching error") {
  CHECK_THROWS_AS(parse_space("{not json"), ParseError);
  CHECK_THROWS_AS(parse_space("[]"), SchemaError);
  CHECK_THROWS_AS(parse_space(R"({"s": 2})"), SchemaError);
  try {
    parse_space(R"({"name": "x", "s": 2, "dims": [1], "killing": [1, 1], "casimir": [0, 0],
                   "gamma": []})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.field() == "dims");
  }
  CHECK_THROWS_AS(parse_space(R"({"name": "x", "s": 2, "dims": [2, 4], "killing": [1, 1],
      "casimir": [0.5, 0.5], "gamma": [{"i": 3, "k": 1, "l": 1, "value": 1}]})"),
                  SchemaError);
  // Two entries for the same unordered triple with different values.
  CHECK_THROWS_AS(parse_space(R"({"name": "x", "s": 2, "dims": [2, 4], "killing": [1, 1],
      "casimir": [0.5, 0.5], "gamma": [{"i": 1, "k": 2, "l": 2, "value": 1},
                                       {"i": 2, "k": 1, "l": 2, "value": 2}]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_space("/nonexistent/space.json"), IoError);
}

TEST_CASE("validation policy: reject throws, warn returns the report") {
  const std::string bad = R"({"name": "bad", "s": 2, "dims": [2, 4], "killing": [1, 1],
      "casimir": [0.2, 0.2], "gamma": [{"i": 2, "k": 2, "l": 1, "value": "2/3"}],
      "has_intermediate": true})";
  CHECK_THROWS_AS(parse_space(bad), ValidationError);
  LoadOptions warn;
  warn.policy = ValidationPolicy::Warn;
  ValidationReport rep;
  const HomogeneousSpace sp = parse_space(bad, warn, &rep);
  CHECK(sp.name == "bad");
  CHECK(rep.has(ViolationKind::Casimir));
}
