#include "cts/skeleton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cts/components.hpp"

namespace cts {
namespace {

// Neighbour code bit k holds P(k+2): P2 = N, P3 = NE, P4 = E, P5 = SE,
// P6 = S, P7 = SW, P8 = W, P9 = NW (clockwise from north).
constexpr bool zs_deletable(unsigned code, int sub) {
  auto p = [code](int i) { return (code >> (i - 2)) & 1u; };
  int b = 0;
  int a = 0;
  for (int i = 2; i <= 9; ++i) {
    b += static_cast<int>(p(i));
    const int next = i == 9 ? 2 : i + 1;
    if (p(i) == 0 && p(next) == 1) ++a;
  }
  if (b < 2 || b > 6 || a != 1) return false;
  if (sub == 0) return p(2) * p(4) * p(6) == 0 && p(4) * p(6) * p(8) == 0;
  return p(2) * p(4) * p(8) == 0 && p(2) * p(6) * p(8) == 0;
}

constexpr auto make_table(int sub) {
  std::array<bool, 256> t{};
  for (unsigned c = 0; c < 256; ++c) t[c] = zs_deletable(c, sub);
  return t;
}

constexpr std::array<std::array<bool, 256>, 2> kDeletable{make_table(0), make_table(1)};

// Working copy with a one-pixel zero frame so neighbour reads need no bounds checks.
class PaddedRaster {
 public:
  explicit PaddedRaster(const BinaryMask& m)
      : stride_(static_cast<std::size_t>(m.width()) + 2),
        data_(stride_ * (static_cast<std::size_t>(m.height()) + 2), 0) {
    for (int y = 0; y < m.height(); ++y)
      for (int x = 0; x < m.width(); ++x)
        if (m.at(x, y)) {
          data_[pos(x, y)] = 1;
          active_.push_back(pos(x, y));
        }
  }

  unsigned code(std::size_t i) const {
    const std::size_t s = stride_;
    return data_[i - s] | data_[i - s + 1] << 1 | data_[i + 1] << 2 | data_[i + s + 1] << 3 | data_[i + s] << 4 |
           data_[i + s - 1] << 5 | data_[i - 1] << 6 | data_[i - s - 1] << 7;
  }

  std::size_t sub_iteration(int sub) {
    flagged_.clear();
    for (const auto i : active_)
      if (kDeletable[sub][code(i)]) flagged_.push_back(i);
    for (const auto i : flagged_) data_[i] = 0;
    if (!flagged_.empty()) {
      std::erase_if(active_, [this](std::size_t i) { return data_[i] == 0; });
    }
    return flagged_.size();
  }

  std::size_t full_pass() { return sub_iteration(0) + sub_iteration(1); }

  void copy_to(BinaryMask& m) const {
    for (int y = 0; y < m.height(); ++y)
      for (int x = 0; x < m.width(); ++x) m.set(x, y, data_[pos(x, y)] != 0);
  }

 private:
  std::size_t pos(int x, int y) const {
    return static_cast<std::size_t>(y + 1) * stride_ + static_cast<std::size_t>(x + 1);
  }

  std::size_t stride_;
  std::vector<std::uint8_t> data_;
  std::vector<std::size_t> active_;
  std::vector<std::size_t> flagged_;
};

int skeleton_neighbors(const BinaryMask& m, int x, int y) {
  int n = 0;
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx)
      if ((dx != 0 || dy != 0) && m.get(x + dx, y + dy)) ++n;
  return n;
}

double step_length(PixelCoord a, PixelCoord b) {
  return (a.x != b.x && a.y != b.y) ? std::numbers::sqrt2 : 1.0;
}

// Orders a component whose pixels all have at most two in-component neighbours.
std::vector<PixelCoord> trace_chain(const std::vector<PixelCoord>& comp, const Labeling& lab, std::int32_t label,
                                    bool& is_loop) {
  auto in_comp = [&](int x, int y) {
    return x >= 0 && y >= 0 && x < lab.width && y < lab.height && lab.at(x, y) == label;
  };
  auto neighbors_of = [&](PixelCoord p) {
    std::vector<PixelCoord> out;
    // Raster order, so the first entry is the smallest (y, x).
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx)
        if ((dx != 0 || dy != 0) && in_comp(p.x + dx, p.y + dy)) out.push_back({p.x + dx, p.y + dy});
    return out;
  };

  // comp is in raster order: the first endpoint found is the lexicographically smallest.
  PixelCoord start = comp.front();
  is_loop = true;
  for (const auto& p : comp) {
    if (neighbors_of(p).size() == 1) {
      start = p;
      is_loop = false;
      break;
    }
  }

  std::vector<PixelCoord> path{start};
  path.reserve(comp.size());
  PixelCoord prev = start;
  PixelCoord cur = neighbors_of(start).front();
  while (path.size() < comp.size()) {
    path.push_back(cur);
    const auto nbrs = neighbors_of(cur);
    // At most two neighbours: the one we came from and the next one.
    const auto next = std::find_if(nbrs.begin(), nbrs.end(), [&](PixelCoord q) { return !(q == prev); });
    if (next == nbrs.end()) break;
    prev = cur;
    cur = *next;
  }
  if (path.size() != comp.size()) throw ContractError("skeleton component is not a simple chain");
  return path;
}

}  // namespace

std::size_t zhang_suen_pass(BinaryMask& mask) {
  PaddedRaster r(mask);
  const auto removed = r.full_pass();
  r.copy_to(mask);
  return removed;
}

bool is_thinning_fixed_point(const BinaryMask& mask) {
  PaddedRaster r(mask);
  return r.full_pass() == 0;
}

Skeleton thin(const BinaryMask& mask) {
  PaddedRaster r(mask);
  while (r.full_pass() != 0) {
  }
  Skeleton s{BinaryMask(mask.width(), mask.height())};
  r.copy_to(s.raster);
  return s;
}

std::vector<ClassifiedPixel> classify(const Skeleton& skel) {
  std::vector<ClassifiedPixel> out;
  for (const auto& p : skel.pixels()) {
    const int n = skeleton_neighbors(skel.raster, p.x, p.y);
    PixelClass c = PixelClass::junction;
    if (n == 0) c = PixelClass::isolated;
    else if (n == 1) c = PixelClass::endpoint;
    else if (n == 2) c = PixelClass::regular;
    out.push_back({p, n, c});
  }
  return out;
}

SegmentDecomposition decompose(const Skeleton& skel) {
  if (!is_thinning_fixed_point(skel.raster)) {
    throw ContractError("decompose requires a thinning fixed point");
  }
  const BinaryMask& m = skel.raster;
  const int w = m.width();
  const int h = m.height();

  BinaryMask junctions(w, h);
  BinaryMask regular(w, h);
  for (const auto& cp : classify(skel)) {
    if (cp.cls == PixelClass::junction) junctions.set(cp.at);
    else regular.set(cp.at);
  }

  SegmentDecomposition out;
  out.width = w;
  out.height = h;

  const Labeling lab = connected_components(regular, Connectivity::eight);
  std::vector<std::vector<PixelCoord>> comps(lab.component_count());
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (const auto l = lab.at(x, y); l != 0) comps[l - 1].push_back({x, y});

  for (std::size_t k = 0; k < comps.size(); ++k) {
    SkeletonSegment seg;
    if (comps[k].size() == 1) {
      seg.kind = SegmentKind::isolated_pixel;
      seg.pixels = comps[k];
    } else {
      bool is_loop = false;
      seg.pixels = trace_chain(comps[k], lab, static_cast<std::int32_t>(k + 1), is_loop);
      seg.kind = is_loop ? SegmentKind::loop : SegmentKind::open_path;
    }
    out.segments.push_back(std::move(seg));
  }

  const Labeling jlab = connected_components(junctions, Connectivity::eight);
  std::vector<std::vector<PixelCoord>> clusters(jlab.component_count());
  std::vector<bool> touches_segment(jlab.component_count(), false);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto l = jlab.at(x, y);
      if (l == 0) continue;
      clusters[l - 1].push_back({x, y});
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if (regular.get(x + dx, y + dy)) touches_segment[l - 1] = true;
    }
  }
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (touches_segment[k]) {
      out.junction_pixels.insert(out.junction_pixels.end(), clusters[k].begin(), clusters[k].end());
    } else {
      out.segments.push_back({0, SegmentKind::junction_cluster, clusters[k], 0.0});
    }
  }
  std::sort(out.junction_pixels.begin(), out.junction_pixels.end());

  std::vector<std::pair<PixelCoord, std::size_t>> order;
  for (std::size_t i = 0; i < out.segments.size(); ++i) {
    const auto& px = out.segments[i].pixels;
    order.emplace_back(*std::min_element(px.begin(), px.end()), i);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SkeletonSegment> sorted;
  sorted.reserve(order.size());
  for (const auto& [first, i] : order) sorted.push_back(std::move(out.segments[i]));
  out.segments = std::move(sorted);
  for (std::size_t i = 0; i < out.segments.size(); ++i) {
    auto& s = out.segments[i];
    s.id = static_cast<int>(i);
    s.length = segment_length(s);
    out.total_length += s.length;
  }
  return out;
}

double segment_length(const SkeletonSegment& seg) {
  switch (seg.kind) {
    case SegmentKind::isolated_pixel:
      return 1.0;
    case SegmentKind::junction_cluster:
      return std::max(1.0, static_cast<double>(seg.pixels.size()) - 1.0);
    case SegmentKind::open_path:
    case SegmentKind::loop:
      break;
  }
  double len = 0.0;
  for (std::size_t i = 1; i < seg.pixels.size(); ++i) len += step_length(seg.pixels[i - 1], seg.pixels[i]);
  if (seg.kind == SegmentKind::loop && seg.pixels.size() > 1) {
    len += step_length(seg.pixels.back(), seg.pixels.front());
  }
  return std::max(1.0, len);
}

std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::open_path:
      return "open_path";
    case SegmentKind::loop:
      return "loop";
    case SegmentKind::isolated_pixel:
      return "isolated_pixel";
    case SegmentKind::junction_cluster:
      return "junction_cluster";
  }
  return "?";
}

std::string_view to_string(PixelClass c) {
  switch (c) {
    case PixelClass::isolated:
      return "isolated";
    case PixelClass::endpoint:
      return "endpoint";
    case PixelClass::regular:
      return "regular";
    case PixelClass::junction:
      return "junction";
  }
  return "?";
}

}  // namespace cts
