#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "arith/formats.hpp"
#include "arith/svgplot.hpp"

using namespace arith;
using nlohmann::json;

TEST_CASE("form documents round-trip") {
  QMat a(2, 2);
  a(0, 0) = 5;
  a(0, 1) = a(1, 0) = make_rat(7, 2);
  a(1, 1) = 4;
  QuadraticForm phi{a};
  json j = form_to_json(phi);
  CHECK(j["n"] == 2);
  CHECK(j["a"][0][1] == "7/2");
  CHECK(form_from_json(j) == phi);
}

TEST_CASE("form documents accept plain integers") {
  json j = json::parse(R"({"n":2,"a":[[1,"1/2"],["1/2",3]]})");
  QuadraticForm phi = form_from_json(j);
  CHECK(phi.a(0, 0) == 1);
  CHECK(phi.a(0, 1) == make_rat(1, 2));
}

TEST_CASE("malformed form documents are input errors") {
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"n":2,"a":[["1"],["2","3"]]})")),
                  input_error);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"n":3,"a":[["1","0"],["0","1"]]})")),
                  input_error);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"n":2})")), input_error);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"n":2,"a":[["1","x"],["x","1"]]})")),
                  input_error);
}

TEST_CASE("certificate documents carry gamma, reduced, t, u") {
  QMat a(2, 2);
  a(0, 0) = 5;
  a(0, 1) = a(1, 0) = 4;
  a(1, 1) = 4;
  ReductionCertificate cert = siegel_reduce(QuadraticForm{a});
  json j = certificate_to_json(cert);
  CHECK(j.contains("gamma"));
  CHECK(j.contains("reduced"));
  CHECK(j["t"].size() == 2);
  CHECK(j["u"].size() == 2);
  // the embedded reduced form parses back
  CHECK(form_from_json(j["reduced"]) == cert.reduced);
  // and the t entries match its Jacobi data
  JacobiDecomposition jd = jacobi_decompose(cert.reduced);
  CHECK(rat_from_string(j["t"][0].get<std::string>()) == jd.t[0]);
}

TEST_CASE("integer matrices round-trip") {
  IMat m(2, 3, {1, -2, 3, 4, 0, -6});
  CHECK(imat_from_json(imat_to_json(m)) == m);
}

TEST_CASE("presentations round-trip") {
  Presentation p = sl2_presentation_wa();
  json j = presentation_to_json(p);
  CHECK(j["generators"].size() == 2);
  Presentation q = presentation_from_json(j);
  CHECK(q.generators == p.generators);
  REQUIRE(q.relators.size() == p.relators.size());
  for (size_t i = 0; i < p.relators.size(); ++i)
    CHECK(q.relators[i].syllables() == p.relators[i].syllables());
  json bad = json::parse(R"({"generators":["a"],"relators":[[["b",1]]]})");
  CHECK_THROWS_AS(presentation_from_json(bad), input_error);
}

TEST_CASE("report serialization") {
  Report r;
  r.command = "demo";
  r.checks.push_back({"first", true, "w1"});
  r.checks.push_back({"second", false, "w2"});
  json j = report_to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "first");
  CHECK(j["version"] == kToolVersion);
}

TEST_CASE("SVG plot: determinism and depth content") {
  std::string d0 = plot_fundamental_domain(0);
  std::string d0_again = plot_fundamental_domain(0);
  CHECK(d0 == d0_again);  // byte-for-byte stable

  // depth 0: the strip and the base arc only (one 'arc', no 'orbit')
  CHECK(d0.find("class=\"arc\"") != std::string::npos);
  CHECK(d0.find("class=\"orbit\"") == std::string::npos);

  std::string d1 = plot_fundamental_domain(1);
  CHECK(d1.find("class=\"orbit\"") != std::string::npos);
  CHECK(d1.size() > d0.size());

  std::string d2 = plot_fundamental_domain(2);
  CHECK(d2.size() > d1.size());
  CHECK(d2.substr(0, 4) == "<svg");
  CHECK(d2.rfind("</svg>\n") == d2.size() - 7);
}
