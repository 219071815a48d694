#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "rgsurf/rgsurf.h"

using Json = nlohmann::json;

namespace {

Json results(rgs_report *r) { return Json::parse(rgs_report_results_json(r)); }

} // namespace

TEST_CASE("typed entry points") {
  rgs_report *r = nullptr;
  REQUIRE(rgs_run_exc(7, -1, &r) == RGS_OK);
  CHECK(results(r)["count"] == 56);
  CHECK(Json::parse(rgs_report_json(r))["version"] == rgs_version());
  rgs_report_free(r);

  REQUIRE(rgs_run_cone(8, -100, &r) == RGS_OK);
  CHECK(results(r)["fiber_pairs"] == Json::parse("[4]"));
  rgs_report_free(r);

  REQUIRE(rgs_run_hexagon("Gn", 4, 1, 0, 1, &r) == RGS_OK);
  CHECK(results(r)["order"] == 48);
  CHECK(results(r)["relations_ok"] == true);
  rgs_report_free(r);

  REQUIRE(rgs_run_weyl(4, nullptr, 2, &r) == RGS_OK);
  CHECK(results(r)["order"] == 120);
  rgs_report_free(r);

  REQUIRE(rgs_run_reduce("[2,0,-1,-1,-1,-1,-1]", &r) == RGS_OK);
  CHECK(results(r)["mode"] == "exceptional");
  rgs_report_free(r);
}

TEST_CASE("groups") {
  rgs_group *g = nullptr;
  const char *swap = "[[[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,1,0,0],[0,0,0,0,1]]]";
  REQUIRE(rgs_group_from_json(swap, 0, &g) == RGS_OK);
  CHECK(rgs_group_n(g) == 4);
  CHECK(rgs_group_generator_count(g) == 1);
  rgs_report *r = nullptr;
  REQUIRE(rgs_run_invariants(g, 1, &r) == RGS_OK);
  CHECK(results(r)["rank"] == 4);
  rgs_report_free(r);
  REQUIRE(rgs_run_conic(g, 1, 1, &r) == RGS_OK);
  rgs_report_free(r);
  rgs_group_free(g);

  // E1 <-> E2 moves the fiber class H - E1
  const char *moves_f = "[[[1,0,0,0,0],[0,0,1,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]]";
  REQUIRE(rgs_group_from_json(moves_f, 4, &g) == RGS_OK);
  r = nullptr;
  CHECK(rgs_run_conic(g, 1, 1, &r) == RGS_DOMAIN_ERROR);
  CHECK(r == nullptr);
  CHECK(std::string(rgs_last_error()).find("fiber") != std::string::npos);
  rgs_group_free(g);

  CHECK(rgs_group_from_json(swap, 5, &g) == RGS_DOMAIN_ERROR);
  CHECK(std::string(rgs_last_error()).find("conflicts") != std::string::npos);
  CHECK(rgs_group_from_json("[[[2,0],[0,1]]]", 0, &g) == RGS_DOMAIN_ERROR);
  CHECK(rgs_group_from_json("not json", 0, &g) == RGS_INVALID_ARGUMENT);
}

TEST_CASE("errors") {
  rgs_report *r = nullptr;
  CHECK(rgs_run_exc(9, -1, &r) == RGS_DOMAIN_ERROR);
  CHECK(std::string(rgs_last_error()).size() > 0);
  CHECK(rgs_run("exc", "{", 1, 0, &r) == RGS_INVALID_ARGUMENT);
  CHECK(rgs_run("bogus", "{}", 1, 0, &r) == RGS_DOMAIN_ERROR);
  CHECK(rgs_run("exc", "{\"n\": 3}", 1, 0, nullptr) == RGS_INVALID_ARGUMENT);
  CHECK(rgs_run("weyl", "{\"n\": 6, \"method\": \"closure\", \"limit\": 1000}", 1, 0, &r) == RGS_LIMIT_EXCEEDED);
  CHECK(std::string(rgs_status_name(RGS_THEOREM_VIOLATION)) == "theorem_violation");
  REQUIRE(rgs_run("exc", "{\"n\": 3}", 1, RGS_FLAG_TIMING, &r) == RGS_OK);
  CHECK(Json::parse(rgs_report_json(r)).contains("timing_seconds"));
  rgs_report_free(r);
}
