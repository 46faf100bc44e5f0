#pragma once

#include <string>

namespace chart2net {

/// A text label with its axis-aligned bounding box, in image pixel
/// coordinates with a top-left origin. Covers pixels [x, x+w-1] x [y, y+h-1].
struct Textbox {
  std::string content;
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  double center_x() const { return x + w / 2.0; }
  double center_y() const { return y + h / 2.0; }
  bool contains(int px, int py) const {
    return px >= x && px <= x + w - 1 && py >= y && py <= y + h - 1;
  }

  bool operator==(const Textbox&) const = default;
};

}  // namespace chart2net
