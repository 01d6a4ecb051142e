#pragma once

// Blur-based detection of lens attacks. Whatever sits behind an attack lens
// is focused at a different plane than the rest of the scene, so the
// in-lens region loses high-frequency energy. The variance of the Laplacian
// (VarLap) is used as the sharpness score.

#include <span>
#include <vector>

#include "lensattack/raster.hpp"

namespace lensattack {

// BT.601 luma in floating point, one value per pixel.
std::vector<double> to_luma(const RasterImage& image);

// Population variance of the 4-neighbour Laplacian response
// [[0,1,0],[1,-4,1],[0,1,0]] with edge clamping. Throws TooSmall below 3x3.
double variance_of_laplacian(const RasterImage& image);

// Same score on an arbitrary floating-point plane (row-major, width*height).
double variance_of_laplacian(std::span<const double> plane, int width, int height);

struct BlurMap {
  int tile_size = 0;
  int rows = 0;
  int cols = 0;
  std::vector<double> scores;  // rows*cols, row-major

  double at(int row, int col) const noexcept { return scores[static_cast<std::size_t>(row) * cols + col]; }
};

// VarLap of each tile_size x tile_size tile (the last row/column of tiles
// may be narrower). Each tile is scored on its own, clamping at the tile's
// border. tile_size must be >= 3.
BlurMap tiled_blur_map(const RasterImage& image, int tile_size);

struct TileCoord {
  int row;
  int col;

  friend bool operator==(const TileCoord&, const TileCoord&) = default;
};

struct DetectionVerdict {
  bool attacked = false;
  double blurry_fraction = 0.0;
  std::vector<TileCoord> blurry_tiles;
};

// Calibrated on the synthetic checkerboard/gradient/noise corpus in tests;
// sharp fixtures score at least 10x this value.
inline constexpr double kDefaultScoreThreshold = 1000.0;
inline constexpr double kDefaultMinFraction = 0.05;
inline constexpr int kDefaultTileSize = 16;

// Tiles scoring below score_threshold are blurry. The frame is flagged when
// at least one tile is blurry and the blurry fraction reaches min_fraction.
DetectionVerdict detect(const BlurMap& map, double score_threshold = kDefaultScoreThreshold,
                        double min_fraction = kDefaultMinFraction);

}  // namespace lensattack
