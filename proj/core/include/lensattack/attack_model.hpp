#pragma once

// Closed-form model of a lens placed in front of a camera to spoof the depth
// perceived by a monocular depth estimator.
//
// Geometry: object --d_o1-- attack lens --gap-- camera lens (f_c) -> sensor.
// The attack lens forms an intermediate image which the camera lens then
// re-images. The ratio of the attacked to the unattacked magnification
// rescales the apparent object size, and depth estimators read a smaller
// object as a farther one.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lensattack/error.hpp"
#include "lensattack/optics.hpp"

namespace lensattack {

inline constexpr double kDefaultCameraFocalLength = 0.026;
inline constexpr double kSingularEpsilon = 1e-9;
inline constexpr double kAccurateAerThreshold = 0.15;

struct OpticalStack {
  std::optional<ThinLens> attack_lens;  // empty: no attack lens fitted
  double gap = 0.0;
  double camera_focal_length = kDefaultCameraFocalLength;
  double object_distance = 0.0;

  // Throws InvalidInput unless gap, f_c and d_o1 are positive and finite.
  void validate() const;
};

OpticalStack make_stack(std::optional<double> focal_length, double gap, double object_distance,
                        double camera_focal_length = kDefaultCameraFocalLength);

enum class Scenario { Concave, Convex1, Convex2, Convex3, NoLens };

std::string_view scenario_name(Scenario scenario) noexcept;

struct ScenarioKind {
  Scenario scenario;
  bool feasible_in_ad;
  std::string_view reason;  // why an infeasible scenario is ruled out
};

struct FormationResult {
  double d_i1;
  double m_1;
  double d_o2;
  double d_i2;
  double m_2;
  double m_total;
  double m_ori;
};

struct Magnifications {
  double m_total;
  double m_ori;
};

struct AttackOutcome {
  ScenarioKind scenario;
  FormationResult formation;
  double expected_depth;
  double oracle_magnification;
  double divergence;
};

// Exactly one scenario per valid stack. A gap equal to |d_i1| (within
// kSingularEpsilon) counts as Convex2.
ScenarioKind classify_scenario(const OpticalStack& stack);

// Every intermediate quantity of the closed-form model. m_total is
// evaluated from its closed form, not as the product m_1*m_2.
FormationResult closed_form_formation(const OpticalStack& stack);

Magnifications closed_form_magnifications(const OpticalStack& stack);

// d_o1 * |m_ori / m_total|. Exactly d_o1 without an attack lens.
double expected_depth(const OpticalStack& stack);

// | |m_total| - |m_oracle| | / |m_oracle| against the ray tracer.
double model_divergence(const OpticalStack& stack);

AttackOutcome evaluate(const OpticalStack& stack);

// ---------------------------------------------------------------------------
// Evaluation metrics

struct DepthMetrics {
  double adr;
  double aer;
  bool accurate;
};

// |attacked - benign| / benign. Works on depths or disparities alike.
double attack_distortion_rate(double attacked, double benign);
// |attacked - target| / target.
double attack_error_rate(double attacked, double target);
bool is_accurate(double aer) noexcept;

DepthMetrics depth_metrics(double attacked, double benign, double target);

struct DisparityParams {
  double baseline;          // meters
  double focal_length_px;   // pixels
};

enum class ConversionDirection { ToDisparity, ToDepth };

// disparity = baseline * focal / depth; the map is its own inverse.
double disparity_depth_convert(const DisparityParams& params, double value,
                               ConversionDirection direction);

// ---------------------------------------------------------------------------
// Inverse planning

struct PlanRequest {
  double target_depth = 0.0;
  double object_distance = 0.0;
  double camera_focal_length = kDefaultCameraFocalLength;
  std::vector<double> candidate_focal_lengths;
  double gap_min = 0.0;
  double gap_max = 0.0;
};

struct PlanResult {
  double focal_length;
  double gap;
  double achieved_depth;
  double residual;
};

// Depth reachable by one candidate over the sampled gap range, feasible
// scenarios only. `reachable` is false when no sampled gap is feasible.
struct CandidateRange {
  double focal_length;
  bool reachable;
  double min_depth;
  double max_depth;
};

class PlanUnreachable : public Error {
 public:
  PlanUnreachable(const std::string& message, std::vector<CandidateRange> ranges)
      : Error(ErrorKind::Unreachable, message), ranges_(std::move(ranges)) {}

  const std::vector<CandidateRange>& ranges() const noexcept { return ranges_; }

 private:
  std::vector<CandidateRange> ranges_;
};

inline constexpr std::size_t kPlanSamples = 64;
inline constexpr double kPlanGapTolerance = 1e-6;
inline constexpr double kPlanDepthTolerance = 1e-3;

// Finds (f, d_b) whose expected depth hits the target. Candidates within
// kPlanDepthTolerance of the target tie; ties go to the weakest lens
// (largest |f|, least defocus), then to the smaller gap.
PlanResult plan_attack(const PlanRequest& request);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepGrid {
  std::vector<std::optional<double>> focal_lengths;  // nullopt: no lens
  std::vector<double> gaps;
  std::vector<double> object_distances;
  double camera_focal_length = kDefaultCameraFocalLength;
};

struct SweepRow {
  std::optional<double> focal_length;
  double gap;
  double object_distance;
  std::optional<AttackOutcome> outcome;  // empty on error
  std::string error;
};

// One row per (f, d_b, d_o1) in lexicographic input order, f outermost.
// Rows are evaluated on up to `threads` workers; the output order does not
// depend on it. Failing points become error rows.
std::vector<SweepRow> sweep(const SweepGrid& grid, unsigned threads = 1);

}  // namespace lensattack
