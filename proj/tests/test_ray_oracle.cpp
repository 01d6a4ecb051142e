#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "lensattack/attack_model.hpp"
#include "lensattack/error.hpp"
#include "lensattack/ray_oracle.hpp"
#include "ray_trace_reference.hpp"

using namespace lensattack;
using namespace lensattack::oracle;

TEST_CASE("compose multiplies in propagation order") {
  const auto id = compose({});
  CHECK(id.a == 1.0);
  CHECK(id.b == 0.0);
  CHECK(id.c == 0.0);
  CHECK(id.d == 1.0);

  const std::vector<OpticalElement> two{FreeSpace{6.0}, LensElement{0.5}};
  const auto m = compose(two);
  CHECK(m.a == doctest::Approx(1.0));
  CHECK(m.b == doctest::Approx(6.0));
  CHECK(m.c == doctest::Approx(-2.0));
  CHECK(m.d == doctest::Approx(-11.0));

  const std::vector<OpticalElement> four{FreeSpace{6.0}, LensElement{0.5}, FreeSpace{0.02}, LensElement{0.026}};
  const auto n = compose(four);
  CHECK(n.a == doctest::Approx(0.96).epsilon(1e-9));
  CHECK(n.b == doctest::Approx(5.78).epsilon(1e-9));
  CHECK(n.c == doctest::Approx(-38.923).epsilon(1e-4));
  CHECK(n.d == doctest::Approx(-233.308).epsilon(1e-5));
}

TEST_CASE("element validation") {
  const std::vector<OpticalElement> bad_space{FreeSpace{-1.0}};
  const std::vector<OpticalElement> bad_lens{LensElement{0.0}};
  CHECK_THROWS_AS(compose(bad_space), Error);
  CHECK_THROWS_AS(compose(bad_lens), Error);
}

TEST_CASE("composed matrices are unimodular") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> len(0.0, 5.0);
  std::uniform_real_distribution<double> foc(0.02, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<OpticalElement> elements;
    const int n = 1 + trial % 8;
    for (int i = 0; i < n; ++i) {
      if (i % 2) {
        elements.emplace_back(LensElement{(rng() % 2 ? 1 : -1) * foc(rng)});
      } else {
        elements.emplace_back(FreeSpace{len(rng)});
      }
    }
    const TransferMatrix m = compose(elements);
    const double scale = std::abs(m.a * m.d) + std::abs(m.b * m.c);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-13 * scale);
  }
}

TEST_CASE("image_of on a single lens") {
  const std::vector<OpticalElement> lens{LensElement{0.5}};
  CHECK(focus_of_collimated(lens) == doctest::Approx(0.5));

  const auto far = image_of(lens, 6.0);
  CHECK(far.image_distance == doctest::Approx(0.545455).epsilon(1e-6));
  CHECK(far.magnification == doctest::Approx(-0.090909).epsilon(1e-5));

  const auto sym = image_of(lens, 1.0);
  CHECK(sym.image_distance == doctest::Approx(1.0));
  CHECK(sym.magnification == doctest::Approx(-1.0));

  // Inside the focal length: virtual (negative), upright.
  const auto near = image_of(lens, 0.3);
  CHECK(near.image_distance < 0.0);
  CHECK(near.magnification > 1.0);
}

TEST_CASE("collimated output and afocal input are reported") {
  const std::vector<OpticalElement> lens{LensElement{0.5}};
  try {
    image_of(lens, 0.5);
    FAIL("expected Collimated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Collimated);
  }
  // Keplerian telescope: f1 + f2 separation is afocal.
  const std::vector<OpticalElement> telescope{LensElement{0.5}, FreeSpace{0.6}, LensElement{0.1}};
  try {
    focus_of_collimated(telescope);
    FAIL("expected Collimated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Collimated);
  }
  CHECK_THROWS_AS(image_of(lens, 0.0), Error);
}

TEST_CASE("two-ray consistency") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> foc(0.1, 1.0);
  std::uniform_real_distribution<double> gap(0.01, 0.5);
  std::uniform_real_distribution<double> dist(2.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    const double f = (i % 2 ? 1 : -1) * foc(rng);
    const double db = gap(rng);
    const double d = dist(rng);
    const auto sys = reference::two_lens(f, db, 0.026);
    const auto r1 = reference::image_by_two_rays(sys, d, 0.0, -0.05);
    const auto r2 = reference::image_by_two_rays(sys, d, 0.01, -0.2);
    const std::vector<OpticalElement> elements{LensElement{f}, FreeSpace{db}, LensElement{0.026}};
    const auto traced = image_of(elements, d);
    CHECK(std::abs(r1.distance - r2.distance) < 1e-9);
    CHECK(std::abs(r1.distance - traced.image_distance) < 1e-9);
    CHECK(std::abs(r1.magnification - traced.magnification) < 1e-9);
  }
}

TEST_CASE("single-lens equivalence with optics_core") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> foc(0.05, 2.0);
  std::uniform_real_distribution<double> dist(0.05, 30.0);
  int checked = 0;
  while (checked < 1000) {
    const double f = (checked % 2 ? 1 : -1) * foc(rng);
    const double d = dist(rng);
    if (std::abs(d - f) < 1e-3) continue;
    ++checked;
    const std::vector<OpticalElement> lens{LensElement{f}};
    const auto traced = image_of(lens, d);
    const auto formation = form_image(ThinLens(f), d);
    CHECK(std::abs(traced.image_distance) == doctest::Approx(std::abs(formation.image_distance)).epsilon(1e-9));
    CHECK(to_attack_image_distance(traced.image_distance) == doctest::Approx(formation.image_distance).epsilon(1e-9));
    const bool virtual_traced = traced.image_distance < 0.0;
    CHECK(virtual_traced == (classify_image(formation).virtuality == Virtuality::Virtual));
    CHECK((traced.magnification > 0) == (formation.orientation == Orientation::Upright));
  }
}

TEST_CASE("stack magnification examples") {
  // Expected values from an independent numpy matrix chain, cross-checked
  // with the two-ray reference below.
  CHECK(std::abs(stack_magnification(make_stack(-0.2, 0.02, 6.0))) == doctest::Approx(0.0044719).epsilon(1e-4));
  CHECK(std::abs(stack_magnification(make_stack(0.2, 0.5, 6.0))) == doctest::Approx(0.0033566).epsilon(1e-4));
  CHECK(std::abs(stack_magnification(make_stack(0.5, 0.02, 6.0))) == doctest::Approx(0.0042861).epsilon(1e-4));

  for (auto [f, db, d] : {std::tuple{-0.2, 0.02, 6.0}, std::tuple{0.2, 0.5, 6.0}, std::tuple{0.5, 0.02, 6.0}}) {
    const auto ref = reference::image_by_two_rays(reference::two_lens(f, db, 0.026), d);
    CHECK(stack_magnification(make_stack(f, db, d)) == doctest::Approx(ref.magnification).epsilon(1e-9));
  }

  // Without an attack lens the oracle reduces to the camera alone.
  const auto bare = make_stack(std::nullopt, 0.02, 6.0);
  CHECK(stack_magnification(bare) == doctest::Approx(-0.026 / (6.02 - 0.026)).epsilon(1e-12));
}
