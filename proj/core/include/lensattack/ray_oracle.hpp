#pragma once

// Paraxial ray-transfer (ABCD) tracer for stacks of thin lenses.
//
// This module deliberately uses the textbook convention and shares no code
// with the closed-form attack model: image distances are measured after the
// last element and are positive for real images, magnification is negative
// for inverted images. Use to_attack_image_distance() to compare against
// optics.hpp values.

#include <span>
#include <variant>
#include <vector>

namespace lensattack {

struct OpticalStack;

namespace oracle {

struct RayState {
  double height;
  double angle;
};

struct FreeSpace {
  double length;
};

struct LensElement {
  double focal_length;
};

using OpticalElement = std::variant<FreeSpace, LensElement>;

struct TransferMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static TransferMatrix identity() noexcept { return {}; }
  static TransferMatrix of(const OpticalElement& element);

  double determinant() const noexcept { return a * d - b * c; }
  RayState apply(const RayState& ray) const noexcept {
    return {a * ray.height + b * ray.angle, c * ray.height + d * ray.angle};
  }
};

// this * rhs: rhs acts first.
TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) noexcept;

// Product of the element matrices in propagation order (first element acts
// first). Empty input yields the identity.
TransferMatrix compose(std::span<const OpticalElement> elements);

struct ImageLocation {
  double image_distance;  // after the last element; negative = virtual
  double magnification;   // negative = inverted
};

// Images an on-axis object placed object_distance before the first element.
// Throws Collimated when rays leave the system parallel (image at infinity)
// and NoImage when the solve produces no finite plane.
ImageLocation image_of(std::span<const OpticalElement> elements, double object_distance);

// Focus of a collimated input beam (object at infinity), measured after the
// last element. Throws Collimated for afocal systems.
double focus_of_collimated(std::span<const OpticalElement> elements);

// Height where ray crosses a plane `distance` after the system output.
double height_at(const RayState& ray, double distance) noexcept;

// Attack-lens stack as elements: object space is NOT included.
std::vector<OpticalElement> stack_elements(const OpticalStack& stack);

// Signed object-to-sensor magnification of the full two-lens stack.
double stack_magnification(const OpticalStack& stack);

// Camera-side image distance for the stack (after the camera lens).
double stack_image_distance(const OpticalStack& stack);

// Textbook (real positive) to attack-model (virtual positive) image distance.
inline double to_attack_image_distance(double textbook_distance) noexcept {
  return -textbook_distance;
}

}  // namespace oracle
}  // namespace lensattack
