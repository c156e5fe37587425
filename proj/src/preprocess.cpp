#include "cts/preprocess.hpp"

#include <string>
#include <vector>

#include "cts/components.hpp"
#include "cts/morphology.hpp"

namespace cts {

BinaryMask fill_holes(const BinaryMask& mask, std::size_t max_area) {
  if (max_area == 0) return mask;
  const int w = mask.width();
  const int h = mask.height();
  const Labeling bg = connected_components(complement(mask), Connectivity::four);

  std::vector<bool> touches_border(bg.component_count() + 1, false);
  auto mark = [&](int x, int y) { touches_border[bg.at(x, y)] = true; };
  for (int x = 0; x < w; ++x) {
    mark(x, 0);
    mark(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    mark(0, y);
    mark(w - 1, y);
  }

  BinaryMask out = mask;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto label = bg.at(x, y);
      if (label == 0 || touches_border[label]) continue;
      if (bg.sizes[label - 1] <= max_area) out.set(x, y);
    }
  }
  return out;
}

BinaryMask smooth(const BinaryMask& mask, SmoothMode mode, int radius) {
  if (radius < 0) throw ContractError("smoothing radius must be >= 0");
  if (mode == SmoothMode::none || radius == 0) return mask;
  const DiskElement disk(radius);
  if (mode == SmoothMode::open) return dilate(erode(mask, disk), disk);

  // Closing runs on a frame grown by the radius so the dilated shape may leave
  // the raster and come back; erosion against the raw edge would shave off
  // foreground that touches the border.
  BinaryMask padded(mask.width() + 2 * radius, mask.height() + 2 * radius);
  for (const auto& p : mask.coords()) padded.set(p.x + radius, p.y + radius);
  const BinaryMask closed = erode(dilate(padded, disk), disk);
  BinaryMask out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x) out.set(x, y, closed.at(x + radius, y + radius));
  return out;
}

namespace {
BinaryMask apply_steps(const BinaryMask& m, const PreprocessConfig& cfg) {
  return smooth(fill_holes(m, cfg.hole_area_threshold), cfg.smooth_mode, cfg.smooth_radius);
}
}  // namespace

std::pair<BinaryMask, BinaryMask> run_preprocess(const BinaryMask& gt, const BinaryMask& pred,
                                                 const PreprocessConfig& cfg) {
  if (cfg.is_identity()) return {gt, pred};
  BinaryMask pred_out = apply_steps(pred, cfg);
  BinaryMask gt_out = cfg.apply_to == ApplyTo::both ? apply_steps(gt, cfg) : gt;
  return {std::move(gt_out), std::move(pred_out)};
}

std::string_view to_string(SmoothMode m) {
  switch (m) {
    case SmoothMode::open:
      return "open";
    case SmoothMode::close:
      return "close";
    case SmoothMode::none:
      break;
  }
  return "none";
}

std::string_view to_string(ApplyTo a) { return a == ApplyTo::both ? "both" : "prediction_only"; }

SmoothMode parse_smooth_mode(std::string_view s) {
  if (s == "none") return SmoothMode::none;
  if (s == "open") return SmoothMode::open;
  if (s == "close") return SmoothMode::close;
  throw ContractError("unknown smoothing mode '" + std::string(s) + "'");
}

ApplyTo parse_apply_to(std::string_view s) {
  if (s == "pred" || s == "prediction_only") return ApplyTo::prediction_only;
  if (s == "both") return ApplyTo::both;
  throw ContractError("unknown apply-to target '" + std::string(s) + "'");
}

}  // namespace cts
