#include "lensattack/raster.hpp"

#include <cmath>

#include "lensattack/error.hpp"

namespace lensattack {

namespace {

void check_shape(int width, int height, int channels) {
  if (width <= 0 || height <= 0) throw Error(ErrorKind::InvalidInput, "image size must be positive");
  if (channels != 1 && channels != 3) {
    throw Error(ErrorKind::InvalidInput, "images must have 1 or 3 channels");
  }
}

}  // namespace

RasterImage::RasterImage(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  pixels_.assign(static_cast<std::size_t>(width) * height * channels, 0);
}

RasterImage::RasterImage(int width, int height, int channels, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), channels_(channels), pixels_(std::move(pixels)) {
  check_shape(width, height, channels);
  if (pixels_.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error(ErrorKind::InvalidInput, "pixel buffer length does not match image shape");
  }
}

std::uint8_t to_pixel(double value) noexcept {
  if (!(value > 0.0)) return 0;
  if (value >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::round(value));
}

void validate_region(const RegionSpec& region, const RasterImage& image) {
  if (const auto* circle = std::get_if<CircleRegion>(&region)) {
    if (!(circle->radius > 0.0) || !std::isfinite(circle->radius)) {
      throw Error(ErrorKind::InvalidRegion, "circle radius must be positive");
    }
    if (!(circle->center_x >= 0.0 && circle->center_x <= image.width() - 1.0 &&
          circle->center_y >= 0.0 && circle->center_y <= image.height() - 1.0)) {
      throw Error(ErrorKind::InvalidRegion, "circle center lies outside the image");
    }
  }
}

PixelCenter region_center(const RegionSpec& region, const RasterImage& image) noexcept {
  if (const auto* circle = std::get_if<CircleRegion>(&region)) {
    return {circle->center_x, circle->center_y};
  }
  return {(image.width() - 1) / 2.0, (image.height() - 1) / 2.0};
}

bool region_contains(const RegionSpec& region, double x, double y) noexcept {
  if (const auto* circle = std::get_if<CircleRegion>(&region)) {
    const double dx = x - circle->center_x;
    const double dy = y - circle->center_y;
    return dx * dx + dy * dy <= circle->radius * circle->radius;
  }
  return true;
}

}  // namespace lensattack
