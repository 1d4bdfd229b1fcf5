#include <doctest.h>

#include "graphburn/enumerate.hpp"
#include "graphburn/generators.hpp"
#include "graphburn/verify.hpp"

using namespace gburn;

TEST_CASE("conjecture at small sizes") {
  auto one = verify_conjecture(1);
  CHECK(one.trees_checked == 1);
  CHECK(one.violations.empty());
  CHECK(one.counters.at("b_le_ceil_sqrt_n") == 1);

  auto r = verify_conjecture(8);
  CHECK(r.violations.empty());
  long long expected = 0;
  for (int n = 1; n <= 8; ++n) expected += static_cast<long long>(enumerate_trees(n).size());
  CHECK(r.trees_checked == expected);
  CHECK(r.counters.at("b_le_ceil_sqrt_n") == expected);
  CHECK(r.counters.at("set_form_burnable") == expected);
  CHECK(r.trees_per_n.at(8) == 23);

  auto cat = verify_conjecture(9, 1);
  CHECK(cat.violations.empty());
  CHECK(cat.trees_per_n.at(9) == 32 + 4);
}

TEST_CASE("reports do not depend on thread count") {
  VerifyOptions opt;
  opt.n_max = 8;
  opt.shards = 1;
  auto serial = report_to_json(run_verification(opt), false).dump();
  opt.shards = 3;
  auto parallel = report_to_json(run_verification(opt), false).dump();
  CHECK(serial == parallel);
  CHECK(serial == report_to_json(run_verification(opt), false).dump());
}

TEST_CASE("resume skips earlier units") {
  VerifyOptions opt;
  opt.mode = VerifyMode::Corollary;
  opt.n_max = 7;
  auto full = run_verification(opt);
  opt.resume_from = "7:0.1.2.3";
  auto tail = run_verification(opt);
  CHECK(tail.first_unit == "7:0.1.2.3");
  CHECK(tail.trees_checked < full.trees_checked);
  CHECK(tail.trees_checked > 0);
  CHECK(report_to_json(tail, false).at("resumed_from") == "7:0.1.2.3");
  opt.resume_from = "99:0";
  CHECK_THROWS_AS(run_verification(opt), std::invalid_argument);
}

TEST_CASE("burning sets") {
  auto r = verify_burning_sets(6);
  CHECK(r.violations.empty());
  CHECK(r.sets_checked > 0);
  CHECK(r.counters.at("burnable") + r.counters.at("degenerate_more_sparks_than_vertices") == r.sets_checked);
}

TEST_CASE("corollary bounds") {
  auto r = verify_corollary_bounds(8);
  CHECK(r.violations.empty());
  CHECK(r.counters.at("ceil_sqrt_n_plus_20k2") == r.trees_checked);
  CHECK(r.counters.at("ceil_sqrt_n_plus_1") == r.trees_checked);
  CHECK(r.minima.at("ceil_sqrt_n_plus_20k2_minus_b") >= 0);
}

TEST_CASE("report schema") {
  auto j = report_to_json(verify_conjecture(3));
  for (const char* key : {"counters", "first_unit", "growth_at_most", "last_unit", "minima", "mode", "n_max", "n_min",
                          "resumed_from", "schema_version", "sets_checked", "trees_checked", "trees_per_n", "units",
                          "violations", "wall_seconds"})
    CHECK(j.contains(key));
  CHECK(j.at("mode") == "conjecture");
  CHECK_FALSE(report_to_json(verify_conjecture(3), false).contains("wall_seconds"));
  CHECK(unit_key({0, 1, 2, 1, 1}) == "5:0.1.2.1");
  CHECK(unit_key({0, 1}) == "2:0.1");
  CHECK(parse_verify_mode("burning-sets") == VerifyMode::BurningSets);
  CHECK_THROWS_AS(parse_verify_mode("nope"), std::invalid_argument);
}
