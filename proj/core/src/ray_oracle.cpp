#include "lensattack/ray_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "lensattack/attack_model.hpp"
#include "lensattack/error.hpp"

namespace lensattack::oracle {

namespace {

// Relative to the matrix scale; D this small means the output rays from an
// object point are parallel.
constexpr double kParallelTolerance = 1e-14;

struct ElementMatrix {
  TransferMatrix operator()(const FreeSpace& space) const {
    if (!(space.length >= 0.0) || !std::isfinite(space.length)) {
      throw Error(ErrorKind::InvalidInput, "free-space length must be finite and >= 0");
    }
    return {1.0, space.length, 0.0, 1.0};
  }
  TransferMatrix operator()(const LensElement& lens) const {
    if (lens.focal_length == 0.0 || !std::isfinite(lens.focal_length)) {
      throw Error(ErrorKind::InvalidInput, "lens focal length must be finite and non-zero");
    }
    return {1.0, 0.0, -1.0 / lens.focal_length, 1.0};
  }
};

}  // namespace

TransferMatrix TransferMatrix::of(const OpticalElement& element) {
  return std::visit(ElementMatrix{}, element);
}

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) noexcept {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

TransferMatrix compose(std::span<const OpticalElement> elements) {
  TransferMatrix total = TransferMatrix::identity();
  for (const auto& element : elements) {
    total = TransferMatrix::of(element) * total;
  }
  return total;
}

ImageLocation image_of(std::span<const OpticalElement> elements, double object_distance) {
  if (!(object_distance > 0.0) || !std::isfinite(object_distance)) {
    throw Error(ErrorKind::InvalidInput, "object distance must be positive");
  }
  std::vector<OpticalElement> full;
  full.reserve(elements.size() + 1);
  full.emplace_back(FreeSpace{object_distance});
  full.insert(full.end(), elements.begin(), elements.end());
  const TransferMatrix m = compose(full);

  // After a further free-space run v the b-element is b + v*d; the image
  // plane is where it vanishes. With det = 1 the magnification a + v*c
  // reduces to 1/d.
  const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), 1.0});
  if (std::abs(m.d) <= kParallelTolerance * scale) {
    throw Error(ErrorKind::Collimated, "rays from the object leave the system parallel");
  }
  const double v = -m.b / m.d;
  const double mag = m.a + v * m.c;
  if (!std::isfinite(v) || !std::isfinite(mag)) {
    throw Error(ErrorKind::NoImage, "image plane solve is not finite");
  }
  return {v, mag};
}

double focus_of_collimated(std::span<const OpticalElement> elements) {
  const TransferMatrix m = compose(elements);
  const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.d), 1.0});
  if (std::abs(m.c) <= kParallelTolerance * scale) {
    throw Error(ErrorKind::Collimated, "afocal system: collimated input stays collimated");
  }
  // Ray (y, 0) exits as (a*y, c*y) and crosses the axis at -a/c.
  return -m.a / m.c;
}

double height_at(const RayState& ray, double distance) noexcept {
  return ray.height + distance * ray.angle;
}

std::vector<OpticalElement> stack_elements(const OpticalStack& stack) {
  std::vector<OpticalElement> elements;
  if (stack.attack_lens) {
    elements.emplace_back(LensElement{stack.attack_lens->focal_length()});
  }
  elements.emplace_back(FreeSpace{stack.gap});
  elements.emplace_back(LensElement{stack.camera_focal_length});
  return elements;
}

double stack_magnification(const OpticalStack& stack) {
  const auto elements = stack_elements(stack);
  return image_of(elements, stack.object_distance).magnification;
}

double stack_image_distance(const OpticalStack& stack) {
  const auto elements = stack_elements(stack);
  return image_of(elements, stack.object_distance).image_distance;
}

}  // namespace lensattack::oracle
