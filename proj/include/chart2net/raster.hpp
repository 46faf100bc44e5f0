#pragma once

#include <optional>
#include <vector>

#include "chart2net/image.hpp"
#include "chart2net/textbox.hpp"

namespace chart2net {
namespace raster {

/// Thresholds a grayscale image into an ink mask. A pixel is foreground
/// iff its intensity is strictly below `threshold`.
BinaryImage binarize(const GrayImage& img, int threshold = 128);

/// Clears every pixel inside the given textboxes (inclusive bounds).
/// Boxes reaching outside the image are clipped.
BinaryImage mask_textboxes(const BinaryImage& img, const std::vector<Textbox>& boxes);

/// Morphological closing (dilation then erosion) with a square structuring
/// element of half-width `radius`. Out-of-image pixels count as background
/// for both passes, so ink within `radius` of the border may be lost.
/// radius 0 is the identity.
BinaryImage close_gaps(const BinaryImage& img, int radius = 2);

/// Blanks rows [0, header_px).
BinaryImage strip_header(const BinaryImage& img, int header_px);

struct FooterResult {
  BinaryImage image;
  std::optional<int> cut_row;
};

/// Finds the lowest maximal run of all-blank rows of height >= min_gap_rows
/// with ink both above and below it, and clears everything from that run's
/// top edge downward. Returns the input unchanged when no such gap exists.
FooterResult strip_footer(const BinaryImage& img, int min_gap_rows = 20);

}  // namespace raster
}  // namespace chart2net
