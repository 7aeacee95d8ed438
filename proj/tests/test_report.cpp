#include <doctest.h>

#include <json.hpp>

#include "rankagg/adversarial.hpp"
#include "rankagg/report.hpp"
#include "test_util.hpp"

using namespace rankagg;

TEST_CASE("run_compare on the mc123 family") {
  const auto report = run_compare(mc123_instance(10).profile, {"mc1", "exact"}, 0.0, true);
  REQUIRE(report.opt_cost.has_value());
  CHECK(*report.opt_cost == 2);
  REQUIRE(report.runs.size() == 2);
  CHECK(report.runs[0].name == "mc1");
  CHECK(report.runs[0].cost >= 9);
  CHECK(*report.runs[0].ratio >= Rational(9, 2));
  CHECK(report.runs[1].cost == 2);
  CHECK(*report.runs[1].ratio == Rational(1));
}

TEST_CASE("run_compare on the triangle family") {
  const auto report =
      run_compare(triangle_instance(100).profile, {"copeland", "exact"}, 0.0, true);
  CHECK(*report.opt_cost == 202);
  // Copeland's index tie-break outputs (0,1,2) = pi_1 here.
  CHECK(report.runs[0].ranking == Permutation::from_order({0, 1, 2}));
  CHECK(*report.runs[0].ratio == Rational(401, 202));
  CHECK(*report.runs[0].ratio <= Rational(2));
}

TEST_CASE("run_compare on a consensus profile") {
  const Profile single(4, {{Permutation::from_order({2, 0, 3, 1}), 3}});
  const auto report = run_compare(
      single, {"mc1", "mc2", "mc3", "mc4", "mc4delta", "copeland", "borda", "exact"}, 0.3, true);
  CHECK(*report.opt_cost == 0);
  for (const auto& run : report.runs) {
    CHECK(run.cost == 0);
    CHECK(*run.ratio == Rational(1));
  }
}

TEST_CASE("run_compare rejects unknown algorithms") {
  CHECK_THROWS_AS(run_compare(mc123_instance(2).profile, {"quicksort"}, 0.0, false),
                  std::invalid_argument);
}

TEST_CASE("sweep over the mc123 family shows the growing ratio") {
  const auto reports = sweep_family("mc123", 5, 20, 5, {"mc1"}, 0.0);
  REQUIRE(reports.size() == 4);
  CHECK(*reports[0].runs[0].ratio >= Rational(2));       // k=5
  CHECK(*reports[1].runs[0].ratio >= Rational(9, 2));    // k=10
  CHECK(*reports[3].runs[0].ratio >= Rational(19, 2));   // k=20
}

TEST_CASE("sweep over the triangle family at k=1") {
  const auto reports = sweep_family("triangle", 1, 1, 1, {"copeland"}, 0.0);
  REQUIRE(reports.size() == 1);
  CHECK(*reports[0].opt_cost == 4);
  // all six permutation costs are finite and at least the optimum
  for (const auto& sigma : testutil::all_permutations(3))
    CHECK(profile_cost(sigma, triangle_instance(1).profile) >= 4);
}

TEST_CASE("sweep rejects bad ranges and unknown families") {
  CHECK_THROWS_AS(sweep_family("mc123", 5, 2, 1, {"mc1"}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sweep_family("mc123", 2, 5, 0, {"mc1"}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sweep_family("nope", 2, 5, 1, {"mc1"}, 0.0), std::invalid_argument);
}

TEST_CASE("csv emission") {
  CHECK(emit_report({}, ReportFormat::kCsv) ==
        "family,parameter,algorithm,delta,cost,opt_cost,ratio_num,ratio_den,"
        "ratio_decimal,is_lower_bound\n");
  const auto reports = sweep_family("triangle", 2, 2, 1, {"copeland", "borda"}, 0.0);
  const auto csv = emit_report(reports, ReportFormat::kCsv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + one row per algorithm
  CHECK(csv.find("triangle,2,copeland,") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = emit_report(sweep_family("mc123", 2, 6, 2, {"mc1", "mc3"}, 0.0),
                             ReportFormat::kCsv);
  const auto b = emit_report(sweep_family("mc123", 2, 6, 2, {"mc1", "mc3"}, 0.0),
                             ReportFormat::kCsv);
  CHECK(a == b);
  const auto ja = emit_report(sweep_family("triangle", 3, 3, 1, {"mc4"}, 0.0),
                              ReportFormat::kJson);
  const auto jb = emit_report(sweep_family("triangle", 3, 3, 1, {"mc4"}, 0.0),
                              ReportFormat::kJson);
  CHECK(ja == jb);
}

TEST_CASE("json output follows the documented schema") {
  const auto reports = sweep_family("triangle", 4, 4, 1, {"copeland"}, 0.0);
  const auto parsed = nlohmann::json::parse(emit_report(reports, ReportFormat::kJson));
  REQUIRE(parsed.contains("reports"));
  const auto& jr = parsed["reports"][0];
  CHECK(jr["family"] == "triangle");
  CHECK(jr["parameter"] == 4);
  CHECK(jr["opt_cost"] == 10);  // 2k+2 at k=4
  const auto& ja = jr["algorithms"][0];
  CHECK(ja["name"] == "copeland");
  CHECK(ja["cost"].is_number_integer());
  CHECK(ja["ratio"]["den"] == 10);
  CHECK(ja["is_lower_bound"] == false);
}

TEST_CASE("mc4 sweep past the exact budget flags lower bounds") {
  const auto reports = sweep_family("mc4", 24, 24, 1, {"copeland"}, 0.0);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].opt_is_upper_bound);
  CHECK(*reports[0].opt_cost == 24 * 23 + 6 * 18);
  CHECK(reports[0].runs[0].ratio_is_lower_bound);
}
