#include "cts/morphology.hpp"

#include <algorithm>
#include <vector>

namespace cts {
namespace {

int isqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// prefix[i] = number of set pixels in row[0, i).
void row_prefix(const BinaryMask& m, int y, std::vector<int>& prefix) {
  prefix.assign(static_cast<std::size_t>(m.width()) + 1, 0);
  const auto px = m.pixels().subspan(m.index(0, y), static_cast<std::size_t>(m.width()));
  for (int x = 0; x < m.width(); ++x) prefix[x + 1] = prefix[x] + px[x];
}

}  // namespace

DiskElement::DiskElement(int radius) : radius_(radius) {
  if (radius < 0) throw ContractError("disk radius must be >= 0");
  half_widths_.resize(static_cast<std::size_t>(2 * radius + 1));
  for (int dy = -radius; dy <= radius; ++dy) {
    const int w = isqrt(radius * radius - dy * dy);
    half_widths_[dy + radius] = w;
    for (int dx = -w; dx <= w; ++dx) offsets_.emplace_back(dx, dy);
  }
}

int DiskElement::half_width(int dy) const {
  if (dy < -radius_ || dy > radius_) return -1;
  return half_widths_[dy + radius_];
}

// Both operators treat the disk as one horizontal run per row offset and test
// each run with a row prefix sum, so the cost is O(W * H * (2r + 1)).

BinaryMask dilate(const BinaryMask& mask, const DiskElement& se) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h);
  if (se.radius() == 0) return mask;
  std::vector<int> prefix;
  for (int sy = 0; sy < h; ++sy) {
    row_prefix(mask, sy, prefix);
    if (prefix[w] == 0) continue;
    for (int dy = -se.radius(); dy <= se.radius(); ++dy) {
      const int y = sy + dy;
      if (y < 0 || y >= h) continue;
      const int hw = se.half_width(dy);
      for (int x = 0; x < w; ++x) {
        if (out.at(x, y)) continue;
        const int lo = std::max(0, x - hw);
        const int hi = std::min(w, x + hw + 1);
        if (prefix[hi] - prefix[lo] > 0) out.set(x, y);
      }
    }
  }
  return out;
}

BinaryMask erode(const BinaryMask& mask, const DiskElement& se) {
  const int w = mask.width();
  const int h = mask.height();
  if (se.radius() == 0) return mask;
  BinaryMask out = mask;
  std::vector<int> prefix;
  for (int sy = 0; sy < h; ++sy) {
    row_prefix(mask, sy, prefix);
    // Row sy is the dy-offset row for output rows y = sy - dy.
    for (int dy = -se.radius(); dy <= se.radius(); ++dy) {
      const int y = sy - dy;
      if (y < 0 || y >= h) continue;
      const int hw = se.half_width(dy);
      for (int x = 0; x < w; ++x) {
        if (!out.at(x, y)) continue;
        const int lo = x - hw;
        const int hi = x + hw + 1;
        if (lo < 0 || hi > w || prefix[hi] - prefix[lo] != hi - lo) out.set(x, y, false);
      }
    }
  }
  // Rows whose disk reaches past the top or bottom edge cannot survive.
  for (int y = 0; y < h; ++y) {
    if (y - se.radius() < 0 || y + se.radius() >= h) {
      for (int x = 0; x < w; ++x) out.set(x, y, false);
    }
  }
  return out;
}

}  // namespace cts
