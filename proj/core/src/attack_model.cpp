#include "lensattack/attack_model.hpp"

#include <cmath>

#include "lensattack/ray_oracle.hpp"

namespace lensattack {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void check_denominator(double value, const char* what) {
  if (std::abs(value) < kSingularEpsilon) {
    throw Error(ErrorKind::SingularDenominator, std::string(what) + " is zero");
  }
}

double original_magnification(const OpticalStack& stack) {
  const double fc = stack.camera_focal_length;
  const double denom = stack.object_distance + stack.gap - fc;
  check_denominator(denom, "d_o1 + d_b - f_c");
  return -fc / denom;
}

}  // namespace

void OpticalStack::validate() const {
  if (!positive_finite(gap)) throw Error(ErrorKind::InvalidInput, "gap d_b must be positive");
  if (!positive_finite(camera_focal_length)) {
    throw Error(ErrorKind::InvalidInput, "camera focal length must be positive");
  }
  if (!positive_finite(object_distance)) {
    throw Error(ErrorKind::InvalidInput, "object distance d_o1 must be positive");
  }
}

OpticalStack make_stack(std::optional<double> focal_length, double gap, double object_distance,
                        double camera_focal_length) {
  OpticalStack stack;
  if (focal_length) stack.attack_lens.emplace(*focal_length);
  stack.gap = gap;
  stack.object_distance = object_distance;
  stack.camera_focal_length = camera_focal_length;
  stack.validate();
  return stack;
}

std::string_view scenario_name(Scenario scenario) noexcept {
  switch (scenario) {
    case Scenario::Concave: return "concave";
    case Scenario::Convex1: return "convex1";
    case Scenario::Convex2: return "convex2";
    case Scenario::Convex3: return "convex3";
    case Scenario::NoLens: return "none";
  }
  return "unknown";
}

ScenarioKind classify_scenario(const OpticalStack& stack) {
  stack.validate();
  if (!stack.attack_lens) return {Scenario::NoLens, false, "no attack lens"};
  const ThinLens& lens = *stack.attack_lens;
  if (lens.kind() == LensKind::Concave) return {Scenario::Concave, true, ""};

  const double f = lens.focal_length();
  if (std::abs(stack.object_distance - f) < kSingularEpsilon) {
    throw Error(ErrorKind::SingularDenominator, "object sits at the attack lens focal point");
  }
  if (stack.object_distance < f) return {Scenario::Convex1, false, "object too close"};

  const double di = std::abs(image_distance(lens, stack.object_distance));
  if (stack.gap >= di - kSingularEpsilon) {
    return {Scenario::Convex2, false, "inverted image and impractically large gap"};
  }
  return {Scenario::Convex3, true, ""};
}

FormationResult closed_form_formation(const OpticalStack& stack) {
  const ScenarioKind kind = classify_scenario(stack);
  const double fc = stack.camera_focal_length;
  const double m_ori = original_magnification(stack);

  if (kind.scenario == Scenario::NoLens) {
    const double d_o2 = stack.object_distance + stack.gap;
    const double d_i2 = -d_o2 * fc / (d_o2 - fc);
    return {0.0, 1.0, d_o2, d_i2, m_ori, m_ori, m_ori};
  }

  const ThinLens& lens = *stack.attack_lens;
  const double f = lens.focal_length();
  const double d_o1 = stack.object_distance;
  const double d_i1 = image_distance(lens, d_o1);
  const double m_1 = lens_magnification(lens, d_o1);
  const double abs_di1 = std::abs(d_o1 * f / (d_o1 - f));

  double d_o2 = 0.0;
  switch (kind.scenario) {
    case Scenario::Concave:
    case Scenario::Convex1: d_o2 = abs_di1 + stack.gap; break;
    case Scenario::Convex2: d_o2 = stack.gap - abs_di1; break;
    case Scenario::Convex3: d_o2 = abs_di1 - stack.gap; break;
    case Scenario::NoLens: break;
  }
  check_denominator(d_o2 - fc, "camera-stage d_o2 - f_c");

  const double d_i2 = -d_o2 * fc / (d_o2 - fc);
  const double m_2 = -fc / (d_o2 - fc);
  const double m_total = f * fc / ((d_o1 - f) * (d_o2 - fc));
  return {d_i1, m_1, d_o2, d_i2, m_2, m_total, m_ori};
}

Magnifications closed_form_magnifications(const OpticalStack& stack) {
  const FormationResult formation = closed_form_formation(stack);
  return {formation.m_total, formation.m_ori};
}

double expected_depth(const OpticalStack& stack) {
  if (!stack.attack_lens) {
    stack.validate();
    return stack.object_distance;
  }
  const Magnifications m = closed_form_magnifications(stack);
  return stack.object_distance * std::abs(m.m_ori / m.m_total);
}

double model_divergence(const OpticalStack& stack) {
  const double model = std::abs(closed_form_magnifications(stack).m_total);
  const double traced = std::abs(oracle::stack_magnification(stack));
  return std::abs(model - traced) / traced;
}

AttackOutcome evaluate(const OpticalStack& stack) {
  const ScenarioKind kind = classify_scenario(stack);
  const FormationResult formation = closed_form_formation(stack);
  const double depth = kind.scenario == Scenario::NoLens
                           ? stack.object_distance
                           : stack.object_distance * std::abs(formation.m_ori / formation.m_total);
  const double traced = oracle::stack_magnification(stack);
  const double divergence = std::abs(std::abs(formation.m_total) - std::abs(traced)) / std::abs(traced);
  return {kind, formation, depth, traced, divergence};
}

}  // namespace lensattack
