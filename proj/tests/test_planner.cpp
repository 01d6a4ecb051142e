#include <doctest.h>

#include <cmath>

#include "lensattack/attack_model.hpp"

using namespace lensattack;

namespace {

PlanRequest request(double target, double d_o, std::vector<double> candidates, double lo = 0.01,
                    double hi = 0.15) {
  PlanRequest r;
  r.target_depth = target;
  r.object_distance = d_o;
  r.candidate_focal_lengths = std::move(candidates);
  r.gap_min = lo;
  r.gap_max = hi;
  return r;
}

}  // namespace

TEST_CASE("plan toward a tabulated depth") {
  const auto r = plan_attack(request(8.78, 6.0, {-0.2}));
  CHECK(r.focal_length == -0.2);
  CHECK(std::abs(r.gap - 0.120) < 1e-3);
  CHECK(r.residual <= kPlanDepthTolerance);
  CHECK(r.achieved_depth == doctest::Approx(8.78).epsilon(1e-3));
}

TEST_CASE("several candidates: the weakest lens wins the tie") {
  const auto r = plan_attack(request(14.24, 12.0, {-0.2, -0.3, -0.5}));
  CHECK(r.focal_length == -0.5);
  CHECK(std::abs(r.gap - 0.120) < 1e-3);
}

TEST_CASE("benign depth: concave attack is neutral exactly at d_b = f_c") {
  const auto r = plan_attack(request(6.0, 6.0, {-0.2, -0.3, -0.5}));
  CHECK(r.gap == doctest::Approx(0.026).epsilon(1e-4));
  CHECK(r.residual <= kPlanDepthTolerance);

  // Above f_c every concave lens inflates depth, so d_o1 is out of reach.
  try {
    plan_attack(request(6.0, 6.0, {-0.2, -0.3, -0.5}, 0.03, 0.15));
    FAIL("expected Unreachable");
  } catch (const PlanUnreachable& e) {
    CHECK(e.kind() == ErrorKind::Unreachable);
    REQUIRE(e.ranges().size() == 3);
    for (const auto& range : e.ranges()) {
      CHECK(range.reachable);
      CHECK(range.min_depth > 6.0);
      CHECK(range.min_depth == doctest::Approx(expected_depth(make_stack(range.focal_length, 0.03, 6.0))));
    }
  }
}

TEST_CASE("infeasible scenarios are never planned") {
  // Convex with gaps past |d_i1| is Convex2 everywhere in this range.
  try {
    plan_attack(request(3.0, 6.0, {0.2}, 0.3, 0.6));
    FAIL("expected Unreachable");
  } catch (const PlanUnreachable& e) {
    REQUIRE(e.ranges().size() == 1);
    CHECK_FALSE(e.ranges()[0].reachable);
  }
}

TEST_CASE("convex-3 planning brings a target closer") {
  const auto r = plan_attack(request(4.33, 6.0, {0.5}));
  CHECK(std::abs(r.gap - 0.12) < 1e-3);
}

TEST_CASE("planner argument validation") {
  CHECK_THROWS_AS(plan_attack(request(5.0, 6.0, {})), Error);
  CHECK_THROWS_AS(plan_attack(request(0.0, 6.0, {-0.2})), Error);
  CHECK_THROWS_AS(plan_attack(request(5.0, 6.0, {-0.2}, 0.1, 0.05)), Error);
  CHECK_THROWS_AS(plan_attack(request(5.0, 6.0, {0.0})), Error);
}
