#include "cts/mask.hpp"

#include <algorithm>
#include <string>

namespace cts {

BinaryMask::BinaryMask(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw ContractError("negative mask dimensions");
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0) throw ContractError("negative mask dimensions");
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw ContractError("pixel buffer size " + std::to_string(pixels_.size()) + " != " + std::to_string(width) +
                        "x" + std::to_string(height));
  }
  if (std::any_of(pixels_.begin(), pixels_.end(), [](std::uint8_t v) { return v > 1; })) {
    throw ContractError("mask values must be 0 or 1");
  }
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

bool BinaryMask::any() const {
  return std::find(pixels_.begin(), pixels_.end(), std::uint8_t{1}) != pixels_.end();
}

std::vector<PixelCoord> BinaryMask::coords() const {
  std::vector<PixelCoord> out;
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x)
      if (at(x, y)) out.push_back({x, y});
  return out;
}

BinaryMask complement(const BinaryMask& m) {
  std::vector<std::uint8_t> px(m.pixels().begin(), m.pixels().end());
  for (auto& v : px) v ^= 1;
  return BinaryMask(m.width(), m.height(), std::move(px));
}

bool is_subset(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b, "is_subset");
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i] && !pb[i]) return false;
  return true;
}

void require_same_shape(const BinaryMask& a, const BinaryMask& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.width()) + "x" +
                            std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                            std::to_string(b.height()));
  }
}

}  // namespace cts
