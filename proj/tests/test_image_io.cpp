#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "lensattack/error.hpp"
#include "lensattack/image_io.hpp"

using namespace lensattack;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lensattack_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("PNG and PNM preserve pixels") {
  const auto gray = fixtures::noise(31, 17, 12);
  const auto rgb = fixtures::checkerboard(12, 9, 2, 30, 200, 3);
  for (const char* name : {"gray.png", "gray.pgm"}) {
    write_image(scratch(name), gray);
    CHECK(read_image(scratch(name)) == gray);
  }
  for (const char* name : {"rgb.png", "rgb.ppm"}) {
    write_image(scratch(name), rgb);
    CHECK(read_image(scratch(name)) == rgb);
  }
}

TEST_CASE("PNM header comments are skipped") {
  const auto path = scratch("comment.pgm");
  {
    std::ofstream out(path, std::ios::binary);
    out << "P5\n# made by hand\n2 2\n255\n";
    out.put(1).put(2).put(3).put(4);
  }
  const auto img = read_image(path);
  CHECK(img.width() == 2);
  CHECK(img.at(1, 1) == 4);
}

TEST_CASE("I/O failures are typed") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind([] { read_image(scratch("missing.png").string() + ".nope"); }) == ErrorKind::Io);
  const auto junk = scratch("junk.bin");
  std::ofstream(junk) << "not an image";
  CHECK(kind([&] { read_image(junk); }) == ErrorKind::Io);
  CHECK(kind([] { write_image(scratch("x.bmp"), fixtures::constant(4, 4, 1)); }) == ErrorKind::Io);
  CHECK(kind([] { write_image(scratch("x.ppm"), fixtures::constant(4, 4, 1)); }) == ErrorKind::Io);
}
