#include "cts/components.hpp"

#include <vector>

namespace cts {

Labeling connected_components(const BinaryMask& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  Labeling out;
  out.width = w;
  out.height = h;
  out.labels.assign(mask.size(), 0);

  static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int n_dirs = conn == Connectivity::four ? 4 : 8;

  std::vector<PixelCoord> stack;
  std::int32_t next = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y) || out.labels[mask.index(x, y)] != 0) continue;
      const std::int32_t label = ++next;
      std::size_t size = 0;
      out.labels[mask.index(x, y)] = label;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const PixelCoord p = stack.back();
        stack.pop_back();
        ++size;
        for (int d = 0; d < n_dirs; ++d) {
          const int nx = p.x + kDx[d];
          const int ny = p.y + kDy[d];
          if (!mask.get(nx, ny)) continue;
          auto& l = out.labels[mask.index(nx, ny)];
          if (l != 0) continue;
          l = label;
          stack.push_back({nx, ny});
        }
      }
      out.sizes.push_back(size);
    }
  }
  return out;
}

BinaryMask border_reachable_background(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask reached(w, h);
  std::vector<PixelCoord> stack;
  auto seed = [&](int x, int y) {
    if (!mask.at(x, y) && !reached.at(x, y)) {
      reached.set(x, y);
      stack.push_back({x, y});
    }
  };
  for (int x = 0; x < w; ++x) {
    if (h == 0) break;
    seed(x, 0);
    seed(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    if (w == 0) break;
    seed(0, y);
    seed(w - 1, y);
  }
  static constexpr int kDx[4] = {1, -1, 0, 0};
  static constexpr int kDy[4] = {0, 0, 1, -1};
  while (!stack.empty()) {
    const PixelCoord p = stack.back();
    stack.pop_back();
    for (int d = 0; d < 4; ++d) {
      const int nx = p.x + kDx[d];
      const int ny = p.y + kDy[d];
      if (mask.in_bounds(nx, ny)) seed(nx, ny);
    }
  }
  return reached;
}

}  // namespace cts
