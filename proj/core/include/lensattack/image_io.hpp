#pragma once

#include <filesystem>

#include "lensattack/raster.hpp"

namespace lensattack {

// Reads 8-bit PNG (gray, gray+alpha, RGB, RGBA, palette) or binary PGM/PPM,
// detected from the file signature. Alpha is dropped. Throws Io.
RasterImage read_image(const std::filesystem::path& path);

// Format chosen by extension: .png, .pgm (gray only), .ppm (RGB only).
void write_image(const std::filesystem::path& path, const RasterImage& image);

}  // namespace lensattack
