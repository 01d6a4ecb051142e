#include "lensattack/optics.hpp"

#include <cmath>
#include <string>

#include "lensattack/error.hpp"

namespace lensattack {

namespace {

void check_object_distance(const ThinLens& lens, double object_distance) {
  if (!std::isfinite(object_distance) || object_distance <= 0.0) {
    throw Error(ErrorKind::InvalidInput,
                "object distance must be positive, got " + std::to_string(object_distance));
  }
  if (std::abs(object_distance - lens.focal_length()) < kFocusEpsilon) {
    throw Error(ErrorKind::DegenerateFocus, "object at the focal point images to infinity");
  }
}

}  // namespace

ThinLens::ThinLens(double focal_length) : focal_length_(focal_length) {
  if (!std::isfinite(focal_length) || focal_length == 0.0) {
    throw Error(ErrorKind::InvalidInput, "focal length must be finite and non-zero");
  }
}

double image_distance(const ThinLens& lens, double object_distance) {
  check_object_distance(lens, object_distance);
  const double f = lens.focal_length();
  return -object_distance * f / (object_distance - f);
}

double lens_magnification(const ThinLens& lens, double object_distance) {
  check_object_distance(lens, object_distance);
  const double f = lens.focal_length();
  return -f / (object_distance - f);
}

SingleFormation form_image(const ThinLens& lens, double object_distance) {
  const double di = image_distance(lens, object_distance);
  const double m = lens_magnification(lens, object_distance);
  return {di, m, di > 0.0 ? Virtuality::Virtual : Virtuality::Real,
          m > 0.0 ? Orientation::Upright : Orientation::Inverted};
}

ImageClass classify_image(const SingleFormation& formation) {
  const double size = std::abs(formation.magnification);
  SizeClass size_class = SizeClass::Equal;
  if (size < 1.0 - kUnitMagnificationTolerance) {
    size_class = SizeClass::Smaller;
  } else if (size > 1.0 + kUnitMagnificationTolerance) {
    size_class = SizeClass::Larger;
  }
  return {formation.virtuality, formation.orientation, size_class};
}

PinholeProjection PinholeProjection::from_geometry(double object_size, double pinhole_to_sensor,
                                                   double object_distance) {
  if (!(object_size > 0.0) || !(pinhole_to_sensor > 0.0) || !(object_distance > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "pinhole geometry requires positive lengths");
  }
  return PinholeProjection(object_size, pinhole_to_sensor, object_distance,
                           object_size * pinhole_to_sensor / object_distance);
}

double pinhole_size_ratio(double distance_a, double distance_b) {
  if (!(distance_a > 0.0) || !(distance_b > 0.0) || !std::isfinite(distance_a) ||
      !std::isfinite(distance_b)) {
    throw Error(ErrorKind::InvalidInput, "pinhole distances must be positive");
  }
  return distance_b / distance_a;
}

}  // namespace lensattack
