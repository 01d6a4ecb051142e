#include <cmath>

#include "lensattack/attack_model.hpp"

namespace lensattack {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorKind::InvalidInput, std::string(name) + " must be positive");
  }
}

}  // namespace

double attack_distortion_rate(double attacked, double benign) {
  require_positive(attacked, "attacked value");
  require_positive(benign, "benign value");
  return std::abs(attacked - benign) / benign;
}

double attack_error_rate(double attacked, double target) {
  require_positive(attacked, "attacked value");
  require_positive(target, "target value");
  return std::abs(attacked - target) / target;
}

bool is_accurate(double aer) noexcept { return aer < kAccurateAerThreshold; }

DepthMetrics depth_metrics(double attacked, double benign, double target) {
  const double adr = attack_distortion_rate(attacked, benign);
  const double aer = attack_error_rate(attacked, target);
  return {adr, aer, is_accurate(aer)};
}

double disparity_depth_convert(const DisparityParams& params, double value,
                               ConversionDirection /*direction*/) {
  require_positive(params.baseline, "baseline");
  require_positive(params.focal_length_px, "focal length");
  require_positive(value, "value");
  // depth = b*f/disparity and disparity = b*f/depth are the same map.
  return params.baseline * params.focal_length_px / value;
}

}  // namespace lensattack
