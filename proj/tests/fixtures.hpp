#pragma once

// Synthetic rasters shared by the image and defense tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lensattack/image_sim.hpp"
#include "lensattack/raster.hpp"

namespace fixtures {

using lensattack::RasterImage;

inline RasterImage checkerboard(int width, int height, int square, std::uint8_t dark = 0,
                                std::uint8_t light = 255, int channels = 1) {
  RasterImage img(width, height, channels);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const std::uint8_t v = ((x / square + y / square) % 2 == 0) ? light : dark;
      for (int c = 0; c < channels; ++c) img.at(x, y, c) = v;
    }
  }
  return img;
}

inline RasterImage constant(int width, int height, std::uint8_t value, int channels = 1) {
  RasterImage img(width, height, channels);
  for (auto& p : img.pixels()) p = value;
  return img;
}

// White disk on black, centered at (cx, cy).
inline RasterImage disk(int width, int height, double cx, double cy, double radius) {
  RasterImage img(width, height, 1);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double dx = x - cx, dy = y - cy;
      img.at(x, y) = dx * dx + dy * dy <= radius * radius ? 255 : 0;
    }
  }
  return img;
}

inline int count_above(const RasterImage& img, int threshold = 127) {
  int n = 0;
  for (auto p : img.pixels()) n += p > threshold;
  return n;
}

// Radius of a disk from its bright-pixel area.
inline double measured_radius(const RasterImage& img) {
  return std::sqrt(count_above(img) / std::acos(-1.0));
}

inline RasterImage gaussian_blob(int width, int height, double sigma, double peak = 230.0,
                                 double floor = 10.0) {
  RasterImage img(width, height, 1);
  const double cx = (width - 1) / 2.0, cy = (height - 1) / 2.0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      img.at(x, y) = lensattack::to_pixel(floor + (peak - floor) * std::exp(-r2 / (2 * sigma * sigma)));
    }
  }
  return img;
}

inline RasterImage sinusoid(int width, int height, double period, double angle, double amplitude) {
  RasterImage img(width, height, 1);
  const double kx = std::cos(angle) * 2 * std::acos(-1.0) / period;
  const double ky = std::sin(angle) * 2 * std::acos(-1.0) / period;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      img.at(x, y) = lensattack::to_pixel(127.5 + amplitude * std::sin(kx * x + ky * y));
    }
  }
  return img;
}

inline RasterImage noise(int width, int height, unsigned seed, int amplitude = 255) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, amplitude);
  RasterImage img(width, height, 1);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(dist(rng));
  return img;
}

// 50 non-constant images: checkerboards, gradients/gratings, seeded noise.
inline std::vector<RasterImage> blur_corpus() {
  std::vector<RasterImage> corpus;
  for (int i = 0; i < 17; ++i) {
    corpus.push_back(checkerboard(64, 64, 2 + i, static_cast<std::uint8_t>(10 * (i % 4)),
                                  static_cast<std::uint8_t>(255 - 7 * i)));
  }
  for (int i = 0; i < 17; ++i) {
    corpus.push_back(sinusoid(64, 64, 4.0 + i, 0.3 * i, 60.0 + 4.0 * i));
  }
  for (int i = 0; i < 16; ++i) {
    corpus.push_back(noise(64, 64, 1000u + i, 64 + 12 * i));
  }
  return corpus;
}

// Left half sharp checkerboard, right half the same board blurred.
inline RasterImage half_blurred(int size = 128, int square = 4, double sigma = 2.0) {
  const auto board = checkerboard(size, size, square);
  const auto blurred = lensattack::defocus_blur(board, lensattack::FullRegion{}, sigma);
  RasterImage out = board;
  for (int y = 0; y < size; ++y) {
    for (int x = size / 2; x < size; ++x) out.at(x, y) = blurred.at(x, y);
  }
  return out;
}

}  // namespace fixtures
