#include "cts/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cts/morphology.hpp"

namespace cts {
namespace {

// Window around the subject's bounding box, grown by the buffer radius and
// clipped to the raster. Reference pixels outside it are farther than r from
// every subject pixel, so buffering inside the window loses nothing.
struct Window {
  int x0, y0, x1, y1;  // inclusive
  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
  bool contains(PixelCoord p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

Window subject_window(const SkeletonSegment& subject, int radius, int width, int height) {
  Window win{width, height, -1, -1};
  for (const auto& p : subject.pixels) {
    win.x0 = std::min(win.x0, p.x);
    win.y0 = std::min(win.y0, p.y);
    win.x1 = std::max(win.x1, p.x);
    win.y1 = std::max(win.y1, p.y);
  }
  win.x0 = std::max(0, win.x0 - radius);
  win.y0 = std::max(0, win.y0 - radius);
  win.x1 = std::min(width - 1, win.x1 + radius);
  win.y1 = std::min(height - 1, win.y1 + radius);
  return win;
}

void check_dims(const SkeletonSegment& subject, const SegmentDecomposition& reference) {
  for (const auto& p : subject.pixels) {
    if (p.x < 0 || p.y < 0 || p.x >= reference.width || p.y >= reference.height) {
      throw DimensionMismatch("subject segment lies outside the reference raster");
    }
  }
}

}  // namespace

void MatchConfig::validate() const {
  if (buffer_radius <= 0) throw ContractError("buffer radius must be > 0");
  if (!(overlap_threshold >= 0.0 && overlap_threshold <= 1.0)) {
    throw ContractError("overlap threshold must lie in [0, 1]");
  }
}

std::vector<int> candidates_for(const SkeletonSegment& subject, const SegmentDecomposition& reference,
                                int radius) {
  if (radius < 0) throw ContractError("buffer radius must be >= 0");
  check_dims(subject, reference);
  if (subject.pixels.empty() || reference.segments.empty()) return {};

  const Window win = subject_window(subject, radius, reference.width, reference.height);
  BinaryMask local(win.width(), win.height());
  for (const auto& p : subject.pixels) local.set(p.x - win.x0, p.y - win.y0);
  const BinaryMask reach = dilate(local, DiskElement(radius));

  std::vector<int> ids;
  for (const auto& seg : reference.segments) {
    for (const auto& p : seg.pixels) {
      if (win.contains(p) && reach.at(p.x - win.x0, p.y - win.y0)) {
        ids.push_back(seg.id);
        break;
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

SegmentMatch match_one(const SkeletonSegment& subject, const SegmentDecomposition& reference,
                       const MatchConfig& cfg) {
  cfg.validate();
  SegmentMatch result;
  result.segment_id = subject.id;
  result.candidate_ids = candidates_for(subject, reference, cfg.buffer_radius);
  if (result.candidate_ids.empty() || subject.pixels.empty()) return result;

  // Every candidate goes into one mask before buffering, so fragments of a
  // broken reference curve cover the subject jointly.
  const Window win = subject_window(subject, cfg.buffer_radius, reference.width, reference.height);
  BinaryMask integrated(win.width(), win.height());
  for (const int id : result.candidate_ids) {
    for (const auto& p : reference.segments[static_cast<std::size_t>(id)].pixels) {
      if (win.contains(p)) integrated.set(p.x - win.x0, p.y - win.y0);
    }
  }
  const BinaryMask buffer = dilate(integrated, DiskElement(cfg.buffer_radius));

  std::size_t covered = 0;
  for (const auto& p : subject.pixels) covered += buffer.at(p.x - win.x0, p.y - win.y0) ? 1 : 0;
  result.overlap_ratio = static_cast<double>(covered) / static_cast<double>(subject.pixels.size());
  result.matched = result.overlap_ratio >= cfg.overlap_threshold;
  return result;
}

MatchTable match_all(const SegmentDecomposition& subject, const SegmentDecomposition& reference,
                     const MatchConfig& cfg) {
  if (subject.width != reference.width || subject.height != reference.height) {
    throw DimensionMismatch("match_all: decompositions differ in size");
  }
  MatchTable table;
  table.reserve(subject.segments.size());
  for (const auto& seg : subject.segments) table.push_back(match_one(seg, reference, cfg));
  return table;
}

}  // namespace cts
