#include <doctest.h>

#include <cmath>
#include <random>

#include "lensattack/error.hpp"
#include "lensattack/optics.hpp"

using namespace lensattack;

namespace {

// Textbook Gaussian form 1/v - 1/u = 1/f with u = -d_o (object on the left).
// v > 0 is a real image. Kept separate from the library's attack-convention formulas.
double textbook_image_distance(double f, double object_distance) {
  return 1.0 / (1.0 / f - 1.0 / object_distance);
}

double textbook_magnification(double f, double object_distance) {
  return -textbook_image_distance(f, object_distance) / object_distance;
}

}  // namespace

TEST_CASE("ThinLens validates focal length and derives kind") {
  CHECK(ThinLens(-0.2).kind() == LensKind::Concave);
  CHECK(ThinLens(0.5).kind() == LensKind::Convex);
  CHECK_THROWS_AS(ThinLens(0.0), Error);
  CHECK_THROWS_AS(ThinLens(std::nan("")), Error);
}

TEST_CASE("image_distance follows the virtual-positive convention") {
  // Oracle: textbook distance, sign flipped (textbook real-positive).
  const double concave = -textbook_image_distance(-0.2, 6.0);
  const double convex = -textbook_image_distance(0.5, 6.0);
  CHECK(concave == doctest::Approx(0.193548).epsilon(1e-6));
  CHECK(convex == doctest::Approx(-0.545455).epsilon(1e-6));

  CHECK(image_distance(ThinLens(-0.2), 6.0) == doctest::Approx(concave).epsilon(1e-12));
  CHECK(image_distance(ThinLens(0.5), 6.0) == doctest::Approx(convex).epsilon(1e-12));

  const auto at_2f = form_image(ThinLens(0.5), 1.0);
  CHECK(at_2f.image_distance == doctest::Approx(-1.0));
  CHECK(std::abs(at_2f.magnification) == doctest::Approx(1.0));
}

TEST_CASE("lens_magnification evaluates -f/(d_o - f)") {
  CHECK(lens_magnification(ThinLens(-0.2), 6.0) == doctest::Approx(0.2 / 6.2).epsilon(1e-12));
  CHECK(lens_magnification(ThinLens(-0.2), 6.0) == doctest::Approx(0.032258).epsilon(1e-5));
  CHECK(lens_magnification(ThinLens(0.5), 6.0) == doctest::Approx(-0.090909).epsilon(1e-5));
  for (double f : {1e6, -1e6}) {
    for (double d : {0.1, 1.0, 6.0, 100.0}) {
      // m = 1/(1 - d/f), so the deviation from 1 is about d/|f|.
      CHECK(std::abs(lens_magnification(ThinLens(f), d) - 1.0) < 1.01 * d / std::abs(f));
    }
  }
}

TEST_CASE("singular and invalid object distances are typed errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
  };
  CHECK(kind_of([] { image_distance(ThinLens(0.5), 0.5); }) == ErrorKind::DegenerateFocus);
  CHECK(kind_of([] { lens_magnification(ThinLens(0.5), 0.5 + 1e-10); }) == ErrorKind::DegenerateFocus);
  CHECK(kind_of([] { image_distance(ThinLens(0.5), 0.0); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { image_distance(ThinLens(-0.5), -1.0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("classify_image covers the thin-lens cases") {
  CHECK(classify_image(form_image(ThinLens(-0.2), 6.0)) ==
        ImageClass{Virtuality::Virtual, Orientation::Upright, SizeClass::Smaller});
  CHECK(classify_image(form_image(ThinLens(0.5), 1.0)) ==
        ImageClass{Virtuality::Real, Orientation::Inverted, SizeClass::Equal});
  CHECK(classify_image(form_image(ThinLens(0.5), 0.3)) ==
        ImageClass{Virtuality::Virtual, Orientation::Upright, SizeClass::Larger});
  CHECK(classify_image(form_image(ThinLens(0.5), 0.7)) ==
        ImageClass{Virtuality::Real, Orientation::Inverted, SizeClass::Larger});
  CHECK(classify_image(form_image(ThinLens(0.5), 6.0)) ==
        ImageClass{Virtuality::Real, Orientation::Inverted, SizeClass::Smaller});
}

TEST_CASE("concave lenses always give virtual upright smaller images") {
  for (double f : {-0.05, -0.2, -0.5, -3.0, -40.0}) {
    for (double d : {0.1, 1.0, 10.0, 100.0}) {
      CHECK(classify_image(form_image(ThinLens(f), d)) ==
            ImageClass{Virtuality::Virtual, Orientation::Upright, SizeClass::Smaller});
    }
  }
}

TEST_CASE("|m| crosses 1 at d_o = 2f") {
  for (double f : {0.1, 0.5, 2.0}) {
    CHECK(std::abs(lens_magnification(ThinLens(f), 2 * f - 1e-3)) > 1.0);
    CHECK(std::abs(lens_magnification(ThinLens(f), 2 * f + 1e-3)) < 1.0);
  }
}

TEST_CASE("closed forms agree with the textbook lens equation in magnitude") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> focal(0.05, 2.0);
  std::uniform_real_distribution<double> dist(0.05, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double f = (i % 2 ? 1 : -1) * focal(rng);
    const double d = dist(rng);
    if (std::abs(d - f) < 1e-3) continue;
    const ThinLens lens(f);
    const double tb = textbook_image_distance(f, d);
    CHECK(std::abs(image_distance(lens, d)) == doctest::Approx(std::abs(tb)).epsilon(1e-9));
    CHECK(lens_magnification(lens, d) == doctest::Approx(textbook_magnification(f, d)).epsilon(1e-9));
    // Back-substituting into m_1 * m_2 reproduces the printed product form.
    const double d_o2 = std::abs(image_distance(lens, d)) + 0.05;
    const double fc = 0.026;
    const double product = lens_magnification(lens, d) * (-fc / (d_o2 - fc));
    const double closed = f * fc / ((d - f) * (std::abs(d * f / (d - f)) + 0.05 - fc));
    CHECK(product == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("pinhole size ratio is inverse in depth") {
  CHECK(pinhole_size_ratio(5.0, 10.0) == doctest::Approx(2.0));
  CHECK(pinhole_size_ratio(7.0, 7.0) == 1.0);
  CHECK(pinhole_size_ratio(3.0, 12.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(pinhole_size_ratio(0.0, 1.0), Error);
  CHECK_THROWS_AS(pinhole_size_ratio(1.0, -2.0), Error);

  // Similar triangles: the same object at d and 2d.
  const auto near = PinholeProjection::from_geometry(1.5, 0.01, 4.0);
  const auto far = PinholeProjection::from_geometry(1.5, 0.01, 8.0);
  CHECK(near.image_size() * near.object_distance() == doctest::Approx(near.object_size() * near.pinhole_to_sensor()));
  CHECK(near.image_size() / far.image_size() == doctest::Approx(pinhole_size_ratio(4.0, 8.0)));
  CHECK_THROWS_AS(PinholeProjection::from_geometry(0.0, 1.0, 1.0), Error);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(0.1, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double a = d(rng), b = d(rng), c = d(rng);
    CHECK(pinhole_size_ratio(a, b) * pinhole_size_ratio(b, a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pinhole_size_ratio(a, b) * pinhole_size_ratio(b, c) ==
          doctest::Approx(pinhole_size_ratio(a, c)).epsilon(1e-12));
  }
}
