#include "chart2net/raster.hpp"

#include <algorithm>
#include <stdexcept>

namespace chart2net {
namespace raster {

BinaryImage binarize(const GrayImage& img, int threshold) {
  BinaryImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    out.mask[i] = img.pixels[i] < threshold ? 1 : 0;
  return out;
}

BinaryImage mask_textboxes(const BinaryImage& img, const std::vector<Textbox>& boxes) {
  BinaryImage out = img;
  for (const Textbox& b : boxes) {
    int x0 = std::max(0, b.x);
    int y0 = std::max(0, b.y);
    int x1 = std::min(img.width - 1, b.x + b.w - 1);
    int y1 = std::min(img.height - 1, b.y + b.h - 1);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) out.set(x, y, false);
  }
  return out;
}

namespace {

enum class Pass { Dilate, Erode };

// One separable pass along x or y. Out-of-bounds pixels are background:
// they never contribute to a dilation and always defeat an erosion.
BinaryImage sweep(const BinaryImage& img, int radius, bool horizontal, Pass pass) {
  BinaryImage out(img.width, img.height);
  const int len = horizontal ? img.width : img.height;
  const int lines = horizontal ? img.height : img.width;
  for (int line = 0; line < lines; ++line) {
    for (int i = 0; i < len; ++i) {
      bool hit = pass == Pass::Erode;
      for (int d = -radius; d <= radius; ++d) {
        int j = i + d;
        bool v = false;
        if (j >= 0 && j < len)
          v = horizontal ? img.at(j, line) : img.at(line, j);
        if (pass == Pass::Dilate) {
          if (v) {
            hit = true;
            break;
          }
        } else {
          if (!v) {
            hit = false;
            break;
          }
        }
      }
      if (horizontal)
        out.set(i, line, hit);
      else
        out.set(line, i, hit);
    }
  }
  return out;
}

}  // namespace

BinaryImage close_gaps(const BinaryImage& img, int radius) {
  if (radius < 0) throw std::invalid_argument("close_gaps: radius must be >= 0");
  if (radius == 0) return img;
  BinaryImage t = sweep(img, radius, true, Pass::Dilate);
  t = sweep(t, radius, false, Pass::Dilate);
  t = sweep(t, radius, true, Pass::Erode);
  t = sweep(t, radius, false, Pass::Erode);
  return t;
}

BinaryImage strip_header(const BinaryImage& img, int header_px) {
  if (header_px < 0 || header_px > img.height)
    throw std::invalid_argument("strip_header: header_px out of range");
  BinaryImage out = img;
  std::fill(out.mask.begin(),
            out.mask.begin() + static_cast<std::size_t>(header_px) * img.width, 0);
  return out;
}

FooterResult strip_footer(const BinaryImage& img, int min_gap_rows) {
  if (min_gap_rows < 1) throw std::invalid_argument("strip_footer: min_gap_rows must be >= 1");
  std::vector<bool> blank(img.height, true);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (img.at(x, y)) {
        blank[y] = false;
        break;
      }
    }
  }

  // Scan maximal blank runs from the bottom up; the first qualifying one
  // (ink above and below, height >= min_gap_rows) is the lowest.
  std::optional<int> cut;
  int y = img.height - 1;
  while (y >= 0) {
    if (!blank[y]) {
      --y;
      continue;
    }
    int bottom = y;
    int top = y;
    while (top > 0 && blank[top - 1]) --top;
    bool ink_below = bottom + 1 < img.height;  // rows below exist and are non-blank here
    bool ink_above = false;
    for (int r = top - 1; r >= 0; --r) {
      if (!blank[r]) {
        ink_above = true;
        break;
      }
    }
    if (bottom - top + 1 >= min_gap_rows && ink_above && ink_below) {
      cut = top;
      break;
    }
    y = top - 1;
  }

  FooterResult res{img, cut};
  if (cut) {
    std::fill(res.image.mask.begin() + static_cast<std::size_t>(*cut) * img.width,
              res.image.mask.end(), 0);
  }
  return res;
}

}  // namespace raster
}  // namespace chart2net
