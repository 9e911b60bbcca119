#include <doctest.h>

#include "sd2/verify.hpp"

using namespace sd2;

TEST_CASE("run_suite validates its inputs") {
  CHECK_THROWS_AS(run_suite(0, {{0.3, 0.7}}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(4, {{-0.6, 0.2}}), std::invalid_argument);
}

TEST_CASE("suite passes on small grids") {
  const Report r = run_suite(4, {{0.0, 0.0}});
  CHECK(r.overall);
  // u(2) reduction: the circular J2 is reported diagonal at mu = 0
  bool saw_u2 = false;
  for (const auto& rec : r.records) {
    if (rec.id == "repmat/u2-reduction") {
      saw_u2 = true;
      CHECK(rec.pass);
    }
  }
  CHECK(saw_u2);

  const Report r2 = run_suite(8, {{0.3, 0.7}});
  for (const auto& rec : r2.records) {
    INFO(rec.id, " [", rec.params, "] residual ", rec.max_residual, " ",
         rec.notes);
    CHECK(rec.pass);
  }
  CHECK(r2.overall);
}

TEST_CASE("suite is deterministic") {
  const Report a = run_suite(3, {{0.3, 0.7}});
  const Report b = run_suite(3, {{0.3, 0.7}});
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("report serialization carries the schema fields") {
  const Report r = run_suite(2, {{0.3, 0.7}});
  const nlohmann::json doc = r.to_json();
  CHECK(doc.at("overall") == true);
  CHECK(doc.at("seed").get<unsigned>() == r.seed);
  CHECK(doc.at("n_max") == 2);
  CHECK(doc.at("grid").size() == 1);
  CHECK(doc.at("tolerances").contains("residual_tol"));
  REQUIRE(doc.at("records").size() > 0);
  const auto& rec = doc.at("records").at(0);
  for (const char* key : {"id", "params", "max_residual", "pass", "notes"}) {
    CHECK(rec.contains(key));
  }
}

TEST_CASE("negative control detects single-entry perturbations") {
  const Report r = run_suite(2, {{0.3, 0.7}});
  bool saw = false;
  for (const auto& rec : r.records) {
    if (rec.id == "verify/negative-control") {
      saw = true;
      CHECK(rec.pass);
    }
  }
  CHECK(saw);
}

TEST_CASE("check_spectrum_match flags deliberate perturbations") {
  const OscParams p(4, 0.3, 0.7);
  Matrix j2 = build_circular(p, BasisOrdering::CircularB2).J2;
  const auto good = check_spectrum_match(
      j2, spectrum_closed_form(p, OperatorKind::J2), Tolerances{}, "x", "y");
  CHECK(good.pass);
  j2(1, 1) += 1e-3;
  const auto bad = check_spectrum_match(
      j2, spectrum_closed_form(p, OperatorKind::J2), Tolerances{}, "x", "y");
  CHECK(!bad.pass);
}
