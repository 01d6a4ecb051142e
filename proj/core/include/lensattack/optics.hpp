#pragma once

// Single thin-lens relations. All lengths are meters.
//
// Sign convention for image distances follows the attack literature rather
// than the textbook one: a virtual image (same side as the object) has a
// POSITIVE image distance, a real image a NEGATIVE one. Focal lengths are
// negative for concave (diverging) lenses and positive for convex ones.

namespace lensattack {

// Half-width of the guard band around d_o = f where the image goes to infinity.
inline constexpr double kFocusEpsilon = 1e-9;

enum class LensKind { Concave, Convex };

class ThinLens {
 public:
  // Throws InvalidInput for a zero or non-finite focal length.
  explicit ThinLens(double focal_length);

  double focal_length() const noexcept { return focal_length_; }
  LensKind kind() const noexcept { return focal_length_ < 0.0 ? LensKind::Concave : LensKind::Convex; }

 private:
  double focal_length_;
};

enum class Virtuality { Virtual, Real };
enum class Orientation { Upright, Inverted };
enum class SizeClass { Smaller, Larger, Equal };

struct SingleFormation {
  double image_distance;
  double magnification;
  Virtuality virtuality;
  Orientation orientation;
};

struct ImageClass {
  Virtuality virtuality;
  Orientation orientation;
  SizeClass size;

  friend bool operator==(const ImageClass&, const ImageClass&) = default;
};

// d_i = -d_o f / (d_o - f). Positive means virtual.
double image_distance(const ThinLens& lens, double object_distance);

// m = -f / (d_o - f). Evaluated as written; its sign is the physical
// orientation sign (positive upright) for a single lens.
double lens_magnification(const ThinLens& lens, double object_distance);

SingleFormation form_image(const ThinLens& lens, double object_distance);

// |m| within this relative band of 1 classifies as Equal.
inline constexpr double kUnitMagnificationTolerance = 1e-9;

ImageClass classify_image(const SingleFormation& formation);

// Pinhole camera: an object of size h at distance d forms an image of size
// a on a sensor b behind the pinhole, with a*d = h*b.
class PinholeProjection {
 public:
  static PinholeProjection from_geometry(double object_size, double pinhole_to_sensor,
                                         double object_distance);

  double object_size() const noexcept { return object_size_; }
  double pinhole_to_sensor() const noexcept { return pinhole_to_sensor_; }
  double object_distance() const noexcept { return object_distance_; }
  double image_size() const noexcept { return image_size_; }

 private:
  PinholeProjection(double h, double b, double d, double a)
      : object_size_(h), pinhole_to_sensor_(b), object_distance_(d), image_size_(a) {}

  double object_size_;
  double pinhole_to_sensor_;
  double object_distance_;
  double image_size_;
};

// Image-size ratio a_1/a_2 of one object seen at distance_a and at
// distance_b. Image size is inversely proportional to depth.
double pinhole_size_ratio(double distance_a, double distance_b);

}  // namespace lensattack
