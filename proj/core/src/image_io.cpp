#include "lensattack/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <string>

#include "lensattack/error.hpp"

namespace lensattack {

namespace {

RasterImage read_png(const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str())) {
    throw Error(ErrorKind::Io, "png: " + std::string(png.message));
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const int channels = color ? 3 : 1;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, pixels.data(), 0, nullptr)) {
    const std::string message = png.message;
    png_image_free(&png);
    throw Error(ErrorKind::Io, "png: " + message);
  }
  return RasterImage(static_cast<int>(png.width), static_cast<int>(png.height), channels,
                     std::move(pixels));
}

void write_png(const std::filesystem::path& path, const RasterImage& image) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width());
  png.height = static_cast<png_uint_32>(image.height());
  png.format = image.channels() == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png, path.c_str(), 0, image.pixels().data(), 0, nullptr)) {
    throw Error(ErrorKind::Io, "png: " + std::string(png.message));
  }
}

// Skips whitespace and '#' comments, then parses a decimal header field.
int read_pnm_field(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int value = -1;
  in >> value;
  if (!in || value < 0) throw Error(ErrorKind::Io, "pnm: malformed header");
  return value;
}

RasterImage read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  char magic[2] = {};
  in.read(magic, 2);
  const int channels = magic[1] == '5' ? 1 : 3;
  const int width = read_pnm_field(in);
  const int height = read_pnm_field(in);
  const int maxval = read_pnm_field(in);
  if (maxval != 255) throw Error(ErrorKind::Io, "pnm: only 8-bit (maxval 255) files are supported");
  in.get();  // single whitespace before raster
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height * channels);
  in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  if (!in) throw Error(ErrorKind::Io, "pnm: truncated raster");
  return RasterImage(width, height, channels, std::move(pixels));
}

void write_pnm(const std::filesystem::path& path, const RasterImage& image, int channels) {
  if (image.channels() != channels) {
    throw Error(ErrorKind::Io, channels == 1 ? "pgm output needs a gray image" : "ppm output needs an RGB image");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string());
  out << (channels == 1 ? "P5" : "P6") << '\n' << image.width() << ' ' << image.height() << "\n255\n";
  const auto pixels = image.pixels();
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
}

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

}  // namespace

RasterImage read_image(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw Error(ErrorKind::Io, "cannot open " + path.string());
  unsigned char signature[8] = {};
  probe.read(reinterpret_cast<char*>(signature), sizeof signature);
  if (probe.gcount() >= 8 && png_sig_cmp(signature, 0, 8) == 0) return read_png(path);
  if (probe.gcount() >= 2 && signature[0] == 'P' && (signature[1] == '5' || signature[1] == '6')) {
    return read_pnm(path);
  }
  throw Error(ErrorKind::Io, "unrecognized image format: " + path.string());
}

void write_image(const std::filesystem::path& path, const RasterImage& image) {
  if (image.empty()) throw Error(ErrorKind::Io, "refusing to write an empty image");
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    write_png(path, image);
  } else if (ext == ".pgm") {
    write_pnm(path, image, 1);
  } else if (ext == ".ppm") {
    write_pnm(path, image, 3);
  } else {
    throw Error(ErrorKind::Io, "unsupported output extension '" + ext + "'");
  }
}

}  // namespace lensattack
