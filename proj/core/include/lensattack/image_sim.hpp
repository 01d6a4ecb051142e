#pragma once

// Digital emulation of an attack lens: the region seen through the lens is
// radially rescaled about its center and optionally defocused.

#include <vector>

#include "lensattack/attack_model.hpp"
#include "lensattack/raster.hpp"

namespace lensattack {

struct TransformSpec {
  double magnification = 1.0;
  double blur_sigma = 0.0;
};

// For every pixel p inside the region, out(p) = in(c + (p - c) / m) sampled
// bilinearly with edge clamping; c is the region center (image center for
// FullRegion). Pixels outside the region are copied.
//
//   full-image crop ratio rho   -> FullRegion,   m = 1 / rho
//   partial enlarge ratio r     -> CircleRegion, m = r
//   partial shrink ratio s      -> CircleRegion, m = s
RasterImage radial_resample(const RasterImage& image, const RegionSpec& region, double magnification);

// Normalized 1-D Gaussian taps, radius ceil(3 sigma). sigma must be > 0.
std::vector<double> gaussian_kernel(double sigma);

// Separable Gaussian blur of the whole frame (edge clamped, per channel),
// written back only inside the region. sigma == 0 returns the input.
RasterImage defocus_blur(const RasterImage& image, const RegionSpec& region, double sigma);

RasterImage apply_transform(const RasterImage& image, const RegionSpec& region,
                            const TransformSpec& transform);

// Perceived depth scales inversely with apparent size: returns 1 / m.
double predicted_depth_scale(double magnification);

// Blur px per meter of focus error.
inline constexpr double kDefaultDefocusGain = 2000.0;

// Distance between where the attacked stack focuses the object behind the
// camera lens and where the sensor sits (the unattacked focus), in meters.
// Traced with the ray oracle.
double focus_shift(const OpticalStack& stack);

// sigma = gain * focus_shift(stack).
double defocus_sigma(const OpticalStack& stack, double gain = kDefaultDefocusGain);

struct SimulatedView {
  RasterImage image;
  double magnification;  // |m_total / m_ori|
  double depth_scale;    // 1 / magnification
};

SimulatedView simulate_attack_view(const RasterImage& image, const OpticalStack& stack,
                                   const RegionSpec& region, double blur_sigma);

}  // namespace lensattack
