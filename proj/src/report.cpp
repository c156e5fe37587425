#include "cts/report.hpp"

#include <fmt/format.h>

#include <fstream>
#include <json.hpp>
#include <ostream>
#include <string>

namespace cts {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fixed6(double v) { return fmt::format("{:.6f}", v); }

nlohmann::ordered_json config_json(const EvalConfig& c) {
  nlohmann::ordered_json j;
  j["buffer_radius"] = c.match.buffer_radius;
  j["overlap_threshold"] = c.match.overlap_threshold;
  j["hole_area_threshold"] = c.preprocess.hole_area_threshold;
  j["smooth_mode"] = std::string(to_string(c.preprocess.smooth_mode));
  j["smooth_radius"] = c.preprocess.smooth_radius;
  j["apply_to"] = std::string(to_string(c.preprocess.apply_to));
  j["binarize_threshold"] = c.binarize_threshold;
  return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw ContractError("unknown report format '" + std::string(s) + "'");
}

ReportSummary summarize(const std::vector<EvalReport>& reports) {
  ReportSummary sum;
  sum.pairs = reports.size();
  if (reports.empty()) return sum;
  double cts_total = 0.0;
  double pred_matched = 0.0, pred_total = 0.0, gt_matched = 0.0, gt_total = 0.0;
  for (const auto& r : reports) {
    cts_total += r.scores.cts;
    pred_matched += r.scores.pred_matched_len;
    pred_total += r.scores.pred_total_len;
    gt_matched += r.scores.gt_matched_len;
    gt_total += r.scores.gt_total_len;
  }
  sum.mean_cts = cts_total / static_cast<double>(reports.size());
  // Pooled totals follow the same empty conventions as a single pair.
  if (pred_total == 0.0 && gt_total == 0.0) {
    sum.micro_pcs = sum.micro_rcs = sum.micro_cts = 1.0;
  } else if (pred_total > 0.0 && gt_total > 0.0) {
    sum.micro_pcs = pred_matched / pred_total;
    sum.micro_rcs = gt_matched / gt_total;
    sum.micro_cts = harmonic_cts(sum.micro_pcs, sum.micro_rcs);
  }
  return sum;
}

void write_csv(const std::vector<EvalReport>& reports, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    const Scores& s = r.scores;
    out << csv_field(r.pair_id) << ',' << csv_field(r.gt_path) << ',' << csv_field(r.pred_path) << ','
        << fixed6(s.pcs) << ',' << fixed6(s.rcs) << ',' << fixed6(s.cts) << ',' << fixed6(s.pred_total_len) << ','
        << fixed6(s.pred_matched_len) << ',' << fixed6(s.gt_total_len) << ',' << fixed6(s.gt_matched_len) << ','
        << to_string(s.degenerate) << '\n';
  }
}

void write_json(const std::vector<EvalReport>& reports, const EvalConfig& config, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["config"] = config_json(config);
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    const Scores& s = r.scores;
    nlohmann::ordered_json p;
    p["pair_id"] = r.pair_id;
    p["gt_path"] = r.gt_path;
    p["pred_path"] = r.pred_path;
    p["pcs"] = s.pcs;
    p["rcs"] = s.rcs;
    p["cts"] = s.cts;
    p["pred_total_len"] = s.pred_total_len;
    p["pred_matched_len"] = s.pred_matched_len;
    p["gt_total_len"] = s.gt_total_len;
    p["gt_matched_len"] = s.gt_matched_len;
    p["degenerate_flag"] = std::string(to_string(s.degenerate));
    pairs.push_back(std::move(p));
  }
  doc["pairs"] = std::move(pairs);

  const ReportSummary sum = summarize(reports);
  nlohmann::ordered_json js;
  js["pairs"] = sum.pairs;
  if (sum.pairs == 0) {
    js["mean_cts"] = nullptr;
    js["micro_pcs"] = nullptr;
    js["micro_rcs"] = nullptr;
    js["micro_cts"] = nullptr;
  } else {
    js["mean_cts"] = sum.mean_cts;
    js["micro_pcs"] = sum.micro_pcs;
    js["micro_rcs"] = sum.micro_rcs;
    js["micro_cts"] = sum.micro_cts;
  }
  doc["summary"] = std::move(js);
  out << doc.dump(2) << '\n';
}

void write_report(const std::vector<EvalReport>& reports, const EvalConfig& config, ReportFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  if (format == ReportFormat::csv) write_csv(reports, out);
  else write_json(reports, config, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

RgbImage render_overlay(const SegmentDecomposition& gt, const SegmentDecomposition& pred, const MatchTable& gt_table,
                        const MatchTable& pred_table) {
  if (gt.width != pred.width || gt.height != pred.height) {
    throw DimensionMismatch("render_overlay: decompositions differ in size");
  }
  if (gt_table.size() != gt.segments.size() || pred_table.size() != pred.segments.size()) {
    throw ContractError("render_overlay: match table does not cover its decomposition");
  }
  RgbImage img(gt.width, gt.height);
  auto draw = [&img](const SegmentDecomposition& d, const MatchTable& t, RgbImage::Color hit, RgbImage::Color miss,
                     RgbImage::Color junction) {
    for (const auto& seg : d.segments) {
      const auto color = t[static_cast<std::size_t>(seg.id)].matched ? hit : miss;
      for (const auto& p : seg.pixels) img.set(p.x, p.y, color);
    }
    for (const auto& p : d.junction_pixels) img.set(p.x, p.y, junction);
  };
  draw(gt, gt_table, palette::gt_matched, palette::gt_unmatched, palette::gt_junction);
  draw(pred, pred_table, palette::pred_matched, palette::pred_unmatched, palette::pred_junction);
  return img;
}

}  // namespace cts
