#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lensattack/attack_model.hpp"

namespace lensattack {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Expected depth minus target, or NaN where the stack is singular or the
// scenario is not usable in practice.
double depth_error(const PlanRequest& request, double focal_length, double gap) {
  try {
    const OpticalStack stack =
        make_stack(focal_length, gap, request.object_distance, request.camera_focal_length);
    if (!classify_scenario(stack).feasible_in_ad) return kNaN;
    return expected_depth(stack) - request.target_depth;
  } catch (const Error&) {
    return kNaN;
  }
}

struct Solution {
  double gap;
  double residual;
};

Solution bisect(const PlanRequest& request, double focal_length, double lo, double hi,
                double error_lo) {
  while (hi - lo >= kPlanGapTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double error_mid = depth_error(request, focal_length, mid);
    if (std::isnan(error_mid)) break;
    if (error_mid == 0.0) return {mid, 0.0};
    if ((error_mid < 0.0) == (error_lo < 0.0)) {
      lo = mid;
      error_lo = error_mid;
    } else {
      hi = mid;
    }
  }
  const double gap = 0.5 * (lo + hi);
  const double error = depth_error(request, focal_length, gap);
  return {gap, std::isnan(error) ? std::abs(error_lo) : std::abs(error)};
}

// Strict weak order: residual class first (anything within tolerance ties),
// then weaker lens, then smaller gap.
bool better(const PlanResult& a, const PlanResult& b) {
  const bool a_hit = a.residual <= kPlanDepthTolerance;
  const bool b_hit = b.residual <= kPlanDepthTolerance;
  if (a_hit != b_hit) return a_hit;
  if (!a_hit && a.residual != b.residual) return a.residual < b.residual;
  if (std::abs(a.focal_length) != std::abs(b.focal_length)) {
    return std::abs(a.focal_length) > std::abs(b.focal_length);
  }
  return a.gap < b.gap;
}

}  // namespace

PlanResult plan_attack(const PlanRequest& request) {
  if (request.candidate_focal_lengths.empty()) {
    throw Error(ErrorKind::InvalidInput, "no candidate focal lengths");
  }
  if (!(request.target_depth > 0.0) || !std::isfinite(request.target_depth)) {
    throw Error(ErrorKind::InvalidInput, "target depth must be positive");
  }
  if (!(request.gap_min > 0.0) || !(request.gap_min < request.gap_max) ||
      !std::isfinite(request.gap_max)) {
    throw Error(ErrorKind::InvalidInput, "gap range must satisfy 0 < d_b_min < d_b_max");
  }
  if (!(request.object_distance > 0.0) || !(request.camera_focal_length > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "object distance and camera focal length must be positive");
  }

  std::optional<PlanResult> best;
  std::vector<CandidateRange> ranges;
  const double step = (request.gap_max - request.gap_min) / static_cast<double>(kPlanSamples - 1);

  for (const double f : request.candidate_focal_lengths) {
    ThinLens lens(f);  // validates the candidate
    CandidateRange range{lens.focal_length(), false, std::numeric_limits<double>::infinity(),
                         -std::numeric_limits<double>::infinity()};

    std::vector<double> gaps(kPlanSamples);
    std::vector<double> errors(kPlanSamples);
    for (std::size_t i = 0; i < kPlanSamples; ++i) {
      gaps[i] = i + 1 == kPlanSamples ? request.gap_max : request.gap_min + step * i;
      errors[i] = depth_error(request, f, gaps[i]);
      if (!std::isnan(errors[i])) {
        range.reachable = true;
        range.min_depth = std::min(range.min_depth, errors[i] + request.target_depth);
        range.max_depth = std::max(range.max_depth, errors[i] + request.target_depth);
      }
    }
    ranges.push_back(range);

    for (std::size_t i = 0; i < kPlanSamples; ++i) {
      std::optional<Solution> solution;
      if (errors[i] == 0.0) {
        solution = Solution{gaps[i], 0.0};
      } else if (i + 1 < kPlanSamples && !std::isnan(errors[i]) && !std::isnan(errors[i + 1]) &&
                 errors[i + 1] != 0.0 && (errors[i] < 0.0) != (errors[i + 1] < 0.0)) {
        solution = bisect(request, f, gaps[i], gaps[i + 1], errors[i]);
      }
      if (!solution) continue;
      const PlanResult candidate{f, solution->gap, request.target_depth + depth_error(request, f, solution->gap),
                                 solution->residual};
      if (!best || better(candidate, *best)) best = candidate;
    }
  }

  if (!best || best->residual > kPlanDepthTolerance) {
    std::ostringstream msg;
    msg << "target depth " << request.target_depth << " m is not bracketed by any candidate;";
    for (const auto& r : ranges) {
      msg << " f=" << r.focal_length << " m: ";
      if (r.reachable) {
        msg << "[" << r.min_depth << ", " << r.max_depth << "] m";
      } else {
        msg << "no feasible gap";
      }
      msg << ";";
    }
    throw PlanUnreachable(msg.str(), std::move(ranges));
  }
  return *best;
}

}  // namespace lensattack
