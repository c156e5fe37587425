#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cts/errors.hpp"

namespace cts {

struct PixelCoord {
  int x = 0;  // column, left to right
  int y = 0;  // row, top to bottom

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
  // Raster order: row first, then column.
  friend bool operator<(const PixelCoord& a, const PixelCoord& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

/// Row-major raster of {0,1} pixels, 1 = foreground.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height);
  /// Throws ContractError if the size is wrong or any value is outside {0,1}.
  BinaryMask(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }

  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  bool at(int x, int y) const { return pixels_[index(x, y)] != 0; }
  bool at(PixelCoord p) const { return at(p.x, p.y); }
  /// Out-of-bounds positions read as background.
  bool get(int x, int y) const { return in_bounds(x, y) && at(x, y); }
  void set(int x, int y, bool v = true) { pixels_[index(x, y)] = v ? 1 : 0; }
  void set(PixelCoord p, bool v = true) { set(p.x, p.y, v); }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::size_t count() const;
  bool any() const;
  std::vector<PixelCoord> coords() const;  // raster order

  bool same_shape(const BinaryMask& o) const { return width_ == o.width_ && height_ == o.height_; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

BinaryMask complement(const BinaryMask& m);
/// Pixelwise a ⊆ b. Shapes must match.
bool is_subset(const BinaryMask& a, const BinaryMask& b);

void require_same_shape(const BinaryMask& a, const BinaryMask& b, const char* what);

/// Nonzero element => foreground. For callers holding in-memory arrays.
template <typename T>
BinaryMask mask_from_nonzero(std::span<const T> values, int width, int height) {
  if (width < 0 || height < 0 ||
      values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw ContractError("array size does not match width*height");
  }
  std::vector<std::uint8_t> px(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) px[i] = values[i] != T{} ? 1 : 0;
  return BinaryMask(width, height, std::move(px));
}

}  // namespace cts
