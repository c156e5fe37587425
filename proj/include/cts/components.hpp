#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cts/mask.hpp"

namespace cts {

enum class Connectivity { four = 4, eight = 8 };

struct Labeling {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;  // 0 = background, 1..K otherwise
  std::vector<std::size_t> sizes;    // sizes[k-1] = pixel count of label k

  std::size_t component_count() const { return sizes.size(); }
  std::int32_t at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
};

/// Labels are assigned 1..K in raster-scan order of each component's first pixel.
Labeling connected_components(const BinaryMask& mask, Connectivity conn);

/// Background pixels 4-connected to a background pixel on the image border.
BinaryMask border_reachable_background(const BinaryMask& mask);

}  // namespace cts
