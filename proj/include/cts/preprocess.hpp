#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "cts/mask.hpp"

namespace cts {

enum class SmoothMode { none, open, close };
enum class ApplyTo { prediction_only, both };

/// Optional clean-up applied before skeletonization. Defaults are the identity.
struct PreprocessConfig {
  std::size_t hole_area_threshold = 0;  // 0 = off
  SmoothMode smooth_mode = SmoothMode::none;
  int smooth_radius = 0;  // 0 = off
  ApplyTo apply_to = ApplyTo::prediction_only;

  bool is_identity() const {
    return hole_area_threshold == 0 && (smooth_mode == SmoothMode::none || smooth_radius == 0);
  }
  friend bool operator==(const PreprocessConfig&, const PreprocessConfig&) = default;
};

/// Fills every enclosed background component (4-connected, not touching the
/// border) whose pixel count is <= max_area. max_area == 0 disables filling.
BinaryMask fill_holes(const BinaryMask& mask, std::size_t max_area);

/// open = dilate(erode(m)), close = erode(dilate(m)), both with a disk.
BinaryMask smooth(const BinaryMask& mask, SmoothMode mode, int radius);

/// fill_holes then smooth, on the prediction only or on both masks.
std::pair<BinaryMask, BinaryMask> run_preprocess(const BinaryMask& gt, const BinaryMask& pred,
                                                 const PreprocessConfig& cfg);

std::string_view to_string(SmoothMode m);
std::string_view to_string(ApplyTo a);
SmoothMode parse_smooth_mode(std::string_view s);  // throws ContractError
ApplyTo parse_apply_to(std::string_view s);        // accepts "pred", "prediction_only", "both"

}  // namespace cts
