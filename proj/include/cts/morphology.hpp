#pragma once

#include <utility>
#include <vector>

#include "cts/mask.hpp"

namespace cts {

/// Digital disk: all offsets with dx^2 + dy^2 <= radius^2.
class DiskElement {
 public:
  explicit DiskElement(int radius);

  int radius() const { return radius_; }
  /// Largest w with w^2 + dy^2 <= r^2, or -1 when |dy| > r.
  int half_width(int dy) const;
  const std::vector<std::pair<int, int>>& offsets() const { return offsets_; }

 private:
  int radius_;
  std::vector<int> half_widths_;  // indexed by dy + radius
  std::vector<std::pair<int, int>> offsets_;
};

/// Out-of-bounds pixels are background.
BinaryMask dilate(const BinaryMask& mask, const DiskElement& se);
/// A pixel survives only if every offset lands in-bounds on foreground.
BinaryMask erode(const BinaryMask& mask, const DiskElement& se);

}  // namespace cts
