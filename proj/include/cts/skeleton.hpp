#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cts/mask.hpp"

namespace cts {

/// One-pixel-wide curve set produced by thinning.
struct Skeleton {
  BinaryMask raster;

  int width() const { return raster.width(); }
  int height() const { return raster.height(); }
  std::vector<PixelCoord> pixels() const { return raster.coords(); }
  bool empty() const { return !raster.any(); }
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Zhang-Suen thinning, iterated until a full pass deletes nothing.
Skeleton thin(const BinaryMask& mask);

/// One full Zhang-Suen pass (both sub-iterations). Returns the number of
/// deleted pixels.
std::size_t zhang_suen_pass(BinaryMask& mask);

bool is_thinning_fixed_point(const BinaryMask& mask);

enum class PixelClass { isolated, endpoint, regular, junction };

struct ClassifiedPixel {
  PixelCoord at;
  int neighbors = 0;  // skeleton 8-neighbours
  PixelClass cls = PixelClass::isolated;
};

/// Every skeleton pixel, in raster order, classified by its 8-neighbour count.
std::vector<ClassifiedPixel> classify(const Skeleton& skel);

enum class SegmentKind { open_path, loop, isolated_pixel, junction_cluster };

struct SkeletonSegment {
  int id = 0;
  SegmentKind kind = SegmentKind::open_path;
  // open_path and loop: consecutive entries are 8-adjacent. Other kinds: raster order.
  std::vector<PixelCoord> pixels;
  double length = 0.0;

  std::size_t pixel_count() const { return pixels.size(); }
};

struct SegmentDecomposition {
  int width = 0;
  int height = 0;
  std::vector<SkeletonSegment> segments;  // segments[i].id == i
  std::vector<PixelCoord> junction_pixels;  // raster order
  double total_length = 0.0;

  bool empty() const { return segments.empty(); }
};

/// Removes junction pixels (>= 3 neighbours) and turns each remaining
/// 8-connected component into a segment. Junction clusters touching no segment
/// pixel become junction_cluster segments. Segment ids follow the raster order
/// of each segment's first pixel in raster order.
///
/// Throws ContractError when the skeleton is not a thinning fixed point.
SegmentDecomposition decompose(const Skeleton& skel);

/// Polygonal length (1 per orthogonal step, sqrt(2) per diagonal step; loops
/// include the closing step). Isolated pixels count 1, junction clusters
/// max(1, n - 1).
double segment_length(const SkeletonSegment& seg);

std::string_view to_string(SegmentKind k);
std::string_view to_string(PixelClass c);

}  // namespace cts
