#pragma once

#include <vector>

#include "cts/skeleton.hpp"

namespace cts {

struct MatchConfig {
  int buffer_radius = 10;        // pixels, > 0
  double overlap_threshold = 0.5;  // in [0, 1], inclusive comparison

  void validate() const;  // throws ContractError
  friend bool operator==(const MatchConfig&, const MatchConfig&) = default;
};

struct SegmentMatch {
  int segment_id = 0;
  bool matched = false;
  double overlap_ratio = 0.0;
  std::vector<int> candidate_ids;  // ascending

  friend bool operator==(const SegmentMatch&, const SegmentMatch&) = default;
};

/// One entry per subject segment, indexed by segment id.
using MatchTable = std::vector<SegmentMatch>;

/// Reference segments with at least one pixel within Euclidean distance
/// <= radius of some subject pixel, ascending id.
std::vector<int> candidates_for(const SkeletonSegment& subject, const SegmentDecomposition& reference,
                                int radius);

/// Integrates every candidate into one mask, buffers it by a disk of the
/// configured radius and reports the fraction of subject pixels covered.
SegmentMatch match_one(const SkeletonSegment& subject, const SegmentDecomposition& reference,
                       const MatchConfig& cfg);

MatchTable match_all(const SegmentDecomposition& subject, const SegmentDecomposition& reference,
                     const MatchConfig& cfg);

}  // namespace cts
