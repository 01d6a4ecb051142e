#include "lensattack/defense.hpp"

#include <algorithm>
#include <cmath>

#include "lensattack/error.hpp"

namespace lensattack {

namespace {

// Laplacian variance over the window [x0, x0+w) x [y0, y0+h) of a plane with
// the given stride, clamping neighbour lookups to the window.
double window_varlap(std::span<const double> plane, int stride, int x0, int y0, int w, int h) {
  auto sample = [&](int x, int y) {
    x = std::clamp(x, 0, w - 1);
    y = std::clamp(y, 0, h - 1);
    return plane[static_cast<std::size_t>(y0 + y) * stride + (x0 + x)];
  };
  const std::size_t n = static_cast<std::size_t>(w) * h;
  std::vector<double> response(n);
  double sum = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double r = sample(x - 1, y) + sample(x + 1, y) + sample(x, y - 1) + sample(x, y + 1) -
                       4.0 * sample(x, y);
      response[static_cast<std::size_t>(y) * w + x] = r;
      sum += r;
    }
  }
  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (const double r : response) sq += (r - mean) * (r - mean);
  return sq / static_cast<double>(n);
}

}  // namespace

std::vector<double> to_luma(const RasterImage& image) {
  const std::size_t n = static_cast<std::size_t>(image.width()) * image.height();
  std::vector<double> luma(n);
  const auto px = image.pixels();
  if (image.channels() == 1) {
    std::copy(px.begin(), px.end(), luma.begin());
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      luma[i] = 0.299 * px[3 * i] + 0.587 * px[3 * i + 1] + 0.114 * px[3 * i + 2];
    }
  }
  return luma;
}

double variance_of_laplacian(std::span<const double> plane, int width, int height) {
  if (width < 3 || height < 3) throw Error(ErrorKind::TooSmall, "VarLap needs at least 3x3 pixels");
  if (plane.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorKind::InvalidInput, "plane size does not match dimensions");
  }
  return window_varlap(plane, width, 0, 0, width, height);
}

double variance_of_laplacian(const RasterImage& image) {
  const auto luma = to_luma(image);
  return variance_of_laplacian(luma, image.width(), image.height());
}

BlurMap tiled_blur_map(const RasterImage& image, int tile_size) {
  if (tile_size < 3) throw Error(ErrorKind::TooSmall, "tile size must be at least 3");
  const auto luma = to_luma(image);
  BlurMap map;
  map.tile_size = tile_size;
  map.rows = (image.height() + tile_size - 1) / tile_size;
  map.cols = (image.width() + tile_size - 1) / tile_size;
  map.scores.resize(static_cast<std::size_t>(map.rows) * map.cols);
  for (int r = 0; r < map.rows; ++r) {
    for (int c = 0; c < map.cols; ++c) {
      const int x0 = c * tile_size;
      const int y0 = r * tile_size;
      const int w = std::min(tile_size, image.width() - x0);
      const int h = std::min(tile_size, image.height() - y0);
      map.scores[static_cast<std::size_t>(r) * map.cols + c] =
          window_varlap(luma, image.width(), x0, y0, w, h);
    }
  }
  return map;
}

DetectionVerdict detect(const BlurMap& map, double score_threshold, double min_fraction) {
  if (!std::isfinite(score_threshold) || !(min_fraction >= 0.0 && min_fraction <= 1.0)) {
    throw Error(ErrorKind::InvalidInput, "threshold must be finite and min_fraction in [0, 1]");
  }
  DetectionVerdict verdict;
  for (int r = 0; r < map.rows; ++r) {
    for (int c = 0; c < map.cols; ++c) {
      if (map.at(r, c) < score_threshold) verdict.blurry_tiles.push_back({r, c});
    }
  }
  const std::size_t total = map.scores.size();
  verdict.blurry_fraction =
      total == 0 ? 0.0 : static_cast<double>(verdict.blurry_tiles.size()) / static_cast<double>(total);
  verdict.attacked = !verdict.blurry_tiles.empty() && verdict.blurry_fraction >= min_fraction;
  return verdict;
}

}  // namespace lensattack
