#include "lensattack/image_sim.hpp"

#include <algorithm>
#include <cmath>

#include "lensattack/error.hpp"
#include "lensattack/ray_oracle.hpp"

namespace lensattack {

namespace {

void check_magnification(double magnification) {
  if (!(magnification > 0.0) || !std::isfinite(magnification)) {
    throw Error(ErrorKind::InvalidMagnification, "magnification must be positive and finite");
  }
}

double sample_bilinear(const RasterImage& image, double x, double y, int c) noexcept {
  x = std::clamp(x, 0.0, image.width() - 1.0);
  y = std::clamp(y, 0.0, image.height() - 1.0);
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const int x1 = std::min(x0 + 1, image.width() - 1);
  const int y1 = std::min(y0 + 1, image.height() - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double top = image.at(x0, y0, c) + fx * (image.at(x1, y0, c) - image.at(x0, y0, c));
  const double bottom = image.at(x0, y1, c) + fx * (image.at(x1, y1, c) - image.at(x0, y1, c));
  return top + fy * (bottom - top);
}

}  // namespace

RasterImage radial_resample(const RasterImage& image, const RegionSpec& region, double magnification) {
  check_magnification(magnification);
  validate_region(region, image);
  const PixelCenter c = region_center(region, image);
  RasterImage out = image;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (!region_contains(region, x, y)) continue;
      const double sx = c.x + (x - c.x) / magnification;
      const double sy = c.y + (y - c.y) / magnification;
      for (int ch = 0; ch < image.channels(); ++ch) {
        out.at(x, y, ch) = to_pixel(sample_bilinear(image, sx, sy, ch));
      }
    }
  }
  return out;
}

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidInput, "Gaussian sigma must be positive");
  }
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    taps[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += taps[i + radius];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

RasterImage defocus_blur(const RasterImage& image, const RegionSpec& region, double sigma) {
  validate_region(region, image);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidInput, "blur sigma must be >= 0");
  }
  if (sigma == 0.0) return image;

  const std::vector<double> taps = gaussian_kernel(sigma);
  const int radius = static_cast<int>(taps.size() / 2);
  const int w = image.width();
  const int h = image.height();
  const int nc = image.channels();

  // Horizontal pass into a float buffer, vertical pass straight to output.
  std::vector<double> horizontal(static_cast<std::size_t>(w) * h * nc);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += taps[k + radius] * image.at(std::clamp(x + k, 0, w - 1), y, ch);
        }
        horizontal[(static_cast<std::size_t>(y) * w + x) * nc + ch] = acc;
      }
    }
  }

  RasterImage out = image;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!region_contains(region, x, y)) continue;
      for (int ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          const int yy = std::clamp(y + k, 0, h - 1);
          acc += taps[k + radius] * horizontal[(static_cast<std::size_t>(yy) * w + x) * nc + ch];
        }
        out.at(x, y, ch) = to_pixel(acc);
      }
    }
  }
  return out;
}

RasterImage apply_transform(const RasterImage& image, const RegionSpec& region,
                            const TransformSpec& transform) {
  return defocus_blur(radial_resample(image, region, transform.magnification), region,
                      transform.blur_sigma);
}

double predicted_depth_scale(double magnification) {
  check_magnification(magnification);
  return 1.0 / magnification;
}

double focus_shift(const OpticalStack& stack) {
  OpticalStack benign = stack;
  benign.attack_lens.reset();
  return std::abs(oracle::stack_image_distance(stack) - oracle::stack_image_distance(benign));
}

double defocus_sigma(const OpticalStack& stack, double gain) {
  if (!(gain >= 0.0) || !std::isfinite(gain)) {
    throw Error(ErrorKind::InvalidInput, "defocus gain must be >= 0");
  }
  return gain * focus_shift(stack);
}

SimulatedView simulate_attack_view(const RasterImage& image, const OpticalStack& stack,
                                   const RegionSpec& region, double blur_sigma) {
  validate_region(region, image);
  if (!stack.attack_lens) {
    stack.validate();
    return {image, 1.0, 1.0};
  }
  const Magnifications m = closed_form_magnifications(stack);
  const double magnification = std::abs(m.m_total / m.m_ori);
  RasterImage view = apply_transform(image, region, {magnification, blur_sigma});
  return {std::move(view), magnification, predicted_depth_scale(magnification)};
}

}  // namespace lensattack
