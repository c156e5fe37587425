#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cts/image_io.hpp"
#include "cts/scoring.hpp"

namespace cts {

struct EvalReport {
  std::string pair_id;
  std::string gt_path;
  std::string pred_path;
  Scores scores;
  EvalConfig config;
};

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(std::string_view s);  // throws ContractError

inline constexpr std::string_view kCsvHeader =
    "pair_id,gt_path,pred_path,pcs,rcs,cts,pred_total_len,pred_matched_len,gt_total_len,gt_matched_len,"
    "degenerate_flag";

struct ReportSummary {
  std::size_t pairs = 0;
  double mean_cts = 0.0;   // arithmetic mean of per-pair cts
  double micro_pcs = 0.0;  // pooled lengths
  double micro_rcs = 0.0;
  double micro_cts = 0.0;
};

ReportSummary summarize(const std::vector<EvalReport>& reports);

void write_csv(const std::vector<EvalReport>& reports, std::ostream& out);
void write_json(const std::vector<EvalReport>& reports, const EvalConfig& config, std::ostream& out);
/// Throws IoError if the file cannot be written.
void write_report(const std::vector<EvalReport>& reports, const EvalConfig& config, ReportFormat format,
                  const std::filesystem::path& path);

/// Palette of the skeleton overlay.
namespace palette {
inline constexpr RgbImage::Color background{0, 0, 0};
inline constexpr RgbImage::Color gt_matched{0, 0, 255};
inline constexpr RgbImage::Color gt_unmatched{255, 255, 0};
inline constexpr RgbImage::Color gt_junction{128, 128, 255};
inline constexpr RgbImage::Color pred_matched{0, 255, 0};
inline constexpr RgbImage::Color pred_unmatched{255, 0, 0};
inline constexpr RgbImage::Color pred_junction{255, 128, 128};
}  // namespace palette

/// Ground truth drawn first, prediction on top.
RgbImage render_overlay(const SegmentDecomposition& gt, const SegmentDecomposition& pred,
                        const MatchTable& gt_table, const MatchTable& pred_table);

}  // namespace cts
