#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chart2net {

/// 8-bit grayscale raster, row-major, origin at the top-left corner.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 255)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  void set(int x, int y, std::uint8_t v) {
    pixels[static_cast<std::size_t>(y) * width + x] = v;
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

/// Foreground mask (1 = ink). Same layout conventions as GrayImage.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;

  BinaryImage() = default;
  BinaryImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), mask(static_cast<std::size_t>(w) * h, fill) {}

  bool at(int x, int y) const {
    return mask[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool v) {
    mask[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  std::size_t count_foreground() const;

  bool operator==(const BinaryImage& other) const = default;
};

/// 24-bit RGB raster used for overlay rendering.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

  RgbImage() = default;
  RgbImage(int w, int h, std::uint8_t r = 255, std::uint8_t g = 255, std::uint8_t b = 255);

  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

// File I/O. PNG and binary PGM (P5) are supported; loaders throw
// std::runtime_error on malformed input. Color PNGs are converted to
// grayscale with the usual luminance weights (0.299, 0.587, 0.114),
// rounded half-up.
GrayImage load_image(const std::string& path);
GrayImage load_pgm(const std::string& path);
GrayImage load_png(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);
void write_png(const GrayImage& img, const std::string& path);
void write_png(const RgbImage& img, const std::string& path);

}  // namespace chart2net
