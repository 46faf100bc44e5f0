#include "chart2net/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace chart2net {

std::size_t BinaryImage::count_foreground() const {
  return std::accumulate(mask.begin(), mask.end(), std::size_t{0});
}

RgbImage::RgbImage(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3) {
  for (std::size_t i = 0; i < pixels.size(); i += 3) {
    pixels[i] = r;
    pixels[i + 1] = g;
    pixels[i + 2] = b;
  }
}

void RgbImage::set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  pixels[i] = r;
  pixels[i + 1] = g;
  pixels[i + 2] = b;
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    char a = s[s.size() - suffix.size() + i];
    char b = suffix[i];
    if (std::tolower(static_cast<unsigned char>(a)) != b) return false;
  }
  return true;
}

int read_pgm_token(std::FILE* f) {
  // Skips whitespace and '#' comments, then reads one unsigned decimal.
  int c = std::fgetc(f);
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = std::fgetc(f);
    } else if (std::isspace(c)) {
      c = std::fgetc(f);
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) return -1;
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1 << 20) return -1;
    c = std::fgetc(f);
  }
  return value;
}

std::uint8_t luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  double y = 0.299 * r + 0.587 * g + 0.114 * b;
  double rounded = std::floor(y + 0.5);
  if (rounded > 255.0) rounded = 255.0;
  return static_cast<std::uint8_t>(rounded);
}

}  // namespace

GrayImage load_pgm(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw std::runtime_error("cannot open image: " + path);
  char magic[2] = {0, 0};
  if (std::fread(magic, 1, 2, f.get()) != 2 || magic[0] != 'P' || magic[1] != '5')
    throw std::runtime_error("not a binary PGM (P5): " + path);
  int w = read_pgm_token(f.get());
  int h = read_pgm_token(f.get());
  int maxval = read_pgm_token(f.get());
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
    throw std::runtime_error("unsupported PGM header in " + path);
  GrayImage img(w, h);
  if (std::fread(img.pixels.data(), 1, img.pixels.size(), f.get()) != img.pixels.size())
    throw std::runtime_error("truncated PGM data in " + path);
  return img;
}

void write_pgm(const GrayImage& img, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("cannot write image: " + path);
  std::fprintf(f.get(), "P5\n%d %d\n255\n", img.width, img.height);
  if (std::fwrite(img.pixels.data(), 1, img.pixels.size(), f.get()) != img.pixels.size())
    throw std::runtime_error("short write: " + path);
}

GrayImage load_png(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw std::runtime_error("cannot open image: " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  std::vector<std::uint8_t> data;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("failed to decode PNG: " + path);
  }
  png_init_io(png, f.get());
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  png_byte color = png_get_color_type(png, info);
  png_byte depth = png_get_bit_depth(png, info);

  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  png_size_t rowbytes = png_get_rowbytes(png, info);
  data.resize(rowbytes * h);
  rows.resize(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = data.data() + y * rowbytes;
  png_read_image(png, rows.data());
  int channels = png_get_channels(png, info);
  png_destroy_read_struct(&png, &info, nullptr);

  GrayImage img(static_cast<int>(w), static_cast<int>(h));
  if (channels == 1) {
    for (png_uint_32 y = 0; y < h; ++y)
      for (png_uint_32 x = 0; x < w; ++x)
        img.set(static_cast<int>(x), static_cast<int>(y), data[y * rowbytes + x]);
  } else if (channels == 3) {
    for (png_uint_32 y = 0; y < h; ++y)
      for (png_uint_32 x = 0; x < w; ++x) {
        const std::uint8_t* p = &data[y * rowbytes + 3 * x];
        img.set(static_cast<int>(x), static_cast<int>(y), luminance(p[0], p[1], p[2]));
      }
  } else {
    throw std::runtime_error("unsupported PNG channel count in " + path);
  }
  return img;
}

namespace {

void write_png_impl(const std::string& path, int width, int height, int color_type,
                    std::size_t rowbytes, const std::uint8_t* data) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("cannot write image: " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("failed to encode PNG: " + path);
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < height; ++y)
    png_write_row(png, const_cast<png_bytep>(data + static_cast<std::size_t>(y) * rowbytes));
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

void write_png(const GrayImage& img, const std::string& path) {
  write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_GRAY,
                 static_cast<std::size_t>(img.width), img.pixels.data());
}

void write_png(const RgbImage& img, const std::string& path) {
  write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_RGB,
                 static_cast<std::size_t>(img.width) * 3, img.pixels.data());
}

GrayImage load_image(const std::string& path) {
  if (has_suffix(path, ".pgm")) return load_pgm(path);
  if (has_suffix(path, ".png")) return load_png(path);
  // Sniff the magic bytes for extensionless paths.
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw std::runtime_error("cannot open image: " + path);
  unsigned char magic[2] = {0, 0};
  std::fread(magic, 1, 2, f.get());
  f.reset();
  if (magic[0] == 'P' && magic[1] == '5') return load_pgm(path);
  if (magic[0] == 0x89 && magic[1] == 'P') return load_png(path);
  throw std::runtime_error("unrecognized image format: " + path);
}

}  // namespace chart2net
