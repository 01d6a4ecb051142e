#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace lensattack {

// Row-major interleaved 8-bit image with 1 (gray) or 3 (RGB) channels.
class RasterImage {
 public:
  RasterImage() = default;
  // Zero-filled image. Throws InvalidInput on zero size or bad channel count.
  RasterImage(int width, int height, int channels);
  // Takes ownership of an existing buffer, which must hold width*height*channels bytes.
  RasterImage(int width, int height, int channels, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t& at(int x, int y, int c = 0) noexcept { return pixels_[index(x, y, c)]; }
  std::uint8_t at(int x, int y, int c = 0) const noexcept { return pixels_[index(x, y, c)]; }

  std::span<std::uint8_t> pixels() noexcept { return pixels_; }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Rounds half away from zero and saturates to [0, 255].
std::uint8_t to_pixel(double value) noexcept;

struct FullRegion {};

struct CircleRegion {
  double center_x;
  double center_y;
  double radius;
};

using RegionSpec = std::variant<FullRegion, CircleRegion>;

// Center of the region in pixel coordinates (pixel centers at integers).
struct PixelCenter {
  double x;
  double y;
};

// Throws InvalidRegion if a circle's center lies outside the image or its
// radius is not positive.
void validate_region(const RegionSpec& region, const RasterImage& image);
PixelCenter region_center(const RegionSpec& region, const RasterImage& image) noexcept;
bool region_contains(const RegionSpec& region, double x, double y) noexcept;

}  // namespace lensattack
