#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <thread>

#include "cts/image_io.hpp"
#include "cts/report.hpp"
#include "cts/scoring.hpp"

namespace fs = std::filesystem;

namespace cts::cli {
namespace {

struct MetricFlags {
  int buffer_radius = 10;
  double overlap_threshold = 0.5;
  std::size_t hole_fill_area = 0;
  std::string smooth = "none";
  int smooth_radius = 0;
  std::string apply_to = "pred";
  int binarize_threshold = kDefaultBinarizeThreshold;
  std::string format = "csv";

  EvalConfig to_config() const {
    EvalConfig c;
    c.match.buffer_radius = buffer_radius;
    c.match.overlap_threshold = overlap_threshold;
    c.preprocess.hole_area_threshold = hole_fill_area;
    c.preprocess.smooth_mode = parse_smooth_mode(smooth);
    c.preprocess.smooth_radius = smooth_radius;
    c.preprocess.apply_to = parse_apply_to(apply_to);
    c.binarize_threshold = binarize_threshold;
    return c;
  }
};

void add_metric_flags(CLI::App* cmd, MetricFlags& f) {
  cmd->add_option("--buffer-radius", f.buffer_radius, "Buffer radius r in pixels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--overlap-threshold", f.overlap_threshold, "Overlap threshold for a match")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--hole-fill-area", f.hole_fill_area, "Fill enclosed holes up to this many pixels (0 = off)")
      ->capture_default_str();
  cmd->add_option("--smooth", f.smooth, "Pre-skeleton smoothing")
      ->check(CLI::IsMember({"none", "open", "close"}))
      ->capture_default_str();
  cmd->add_option("--smooth-radius", f.smooth_radius, "Smoothing disk radius (0 = off)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--apply-to", f.apply_to, "Masks that preprocessing touches")
      ->check(CLI::IsMember({"pred", "both"}))
      ->capture_default_str();
  cmd->add_option("--binarize-threshold", f.binarize_threshold, "Foreground iff luminance >= threshold")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  cmd->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

std::string scores_line(const Scores& s) {
  return fmt::format("PCS={:.6f} RCS={:.6f} CTS={:.6f}", s.pcs, s.rcs, s.cts);
}

std::string summary_line(const ReportSummary& s) {
  return fmt::format("pairs={} mean_cts={:.6f} micro_cts={:.6f}", s.pairs, s.mean_cts, s.micro_cts);
}

struct PairResult {
  EvalReport report;
  std::optional<RgbImage> overlay;
};

PairResult evaluate_files(const std::string& pair_id, const fs::path& gt_path, const fs::path& pred_path,
                          const EvalConfig& cfg, bool want_overlay) {
  const BinaryMask gt = load_mask(gt_path, cfg.binarize_threshold);
  const BinaryMask pred = load_mask(pred_path, cfg.binarize_threshold);
  EvalDiagnostics diag;
  PairResult r;
  r.report = {pair_id, gt_path.string(), pred_path.string(), evaluate(gt, pred, cfg, &diag), cfg};
  if (want_overlay) r.overlay = render_overlay(diag.gt, diag.pred, diag.gt_table, diag.pred_table);
  return r;
}

int run_eval(const fs::path& gt, const fs::path& pred, const MetricFlags& flags, const std::string& overlay,
             const std::string& report, std::ostream& out) {
  const EvalConfig cfg = flags.to_config();
  const PairResult r = evaluate_files(pred.filename().string(), gt, pred, cfg, !overlay.empty());
  if (r.overlay) save_rgb_png(*r.overlay, overlay);
  if (!report.empty()) write_report({r.report}, cfg, parse_report_format(flags.format), report);
  out << scores_line(r.report.scores) << '\n';
  return kExitOk;
}

std::set<std::string> list_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::set<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) names.insert(e.path().filename().string());
  }
  return names;
}

int run_batch(const fs::path& gt_dir, const fs::path& pred_dir, const MetricFlags& flags, const std::string& report,
              const std::string& overlay_dir, bool strict, int jobs, std::ostream& out, std::ostream& err) {
  const EvalConfig cfg = flags.to_config();
  const auto gt_names = list_files(gt_dir);
  const auto pred_names = list_files(pred_dir);

  std::vector<std::string> pairs;
  std::set_intersection(gt_names.begin(), gt_names.end(), pred_names.begin(), pred_names.end(),
                        std::back_inserter(pairs));
  std::vector<fs::path> unpaired;
  for (const auto& n : gt_names)
    if (!pred_names.contains(n)) unpaired.push_back(gt_dir / n);
  for (const auto& n : pred_names)
    if (!gt_names.contains(n)) unpaired.push_back(pred_dir / n);

  for (const auto& p : unpaired) err << (strict ? "error" : "warning") << ": unpaired file " << p.string() << '\n';
  if (strict && !unpaired.empty()) return kExitDimension;
  if (pairs.empty()) {
    err << "error: no file names common to " << gt_dir.string() << " and " << pred_dir.string() << '\n';
    return kExitDimension;
  }
  if (!overlay_dir.empty()) fs::create_directories(overlay_dir);

  std::vector<PairResult> results(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        results[i] = evaluate_files(pairs[i], gt_dir / pairs[i], pred_dir / pairs[i], cfg, !overlay_dir.empty());
        if (results[i].overlay) {
          save_rgb_png(*results[i].overlay, fs::path(overlay_dir) / (fs::path(pairs[i]).stem().string() + ".png"));
          results[i].overlay.reset();
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_threads = std::clamp(jobs, 1, static_cast<int>(pairs.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<EvalReport> reports;
  reports.reserve(results.size());
  for (auto& r : results) reports.push_back(std::move(r.report));

  const auto format = parse_report_format(flags.format);
  const ReportSummary summary = summarize(reports);
  if (report.empty()) {
    if (format == ReportFormat::csv) write_csv(reports, out);
    else write_json(reports, cfg, out);
    err << summary_line(summary) << '\n';
  } else {
    write_report(reports, cfg, format, report);
    out << summary_line(summary) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crack Topology Score: skeleton-based evaluation of binary crack masks", "cts"};
  app.require_subcommand(1);

  MetricFlags eval_flags;
  std::string gt, pred, overlay, report;
  auto* eval = app.add_subcommand("eval", "Score one prediction against one ground truth");
  eval->add_option("--gt", gt, "Ground-truth mask (PNG or PGM)")->required();
  eval->add_option("--pred", pred, "Predicted mask (PNG or PGM)")->required();
  eval->add_option("--overlay", overlay, "Write a skeleton overlay PNG");
  eval->add_option("--report", report, "Write a report file");
  add_metric_flags(eval, eval_flags);

  MetricFlags batch_flags;
  std::string gt_dir, pred_dir, batch_report, overlay_dir;
  bool strict = false;
  int jobs = 1;
  auto* batch = app.add_subcommand("batch", "Score every same-named pair in two directories");
  batch->add_option("--gt-dir", gt_dir, "Ground-truth directory")->required();
  batch->add_option("--pred-dir", pred_dir, "Prediction directory")->required();
  batch->add_option("--report", batch_report, "Report file (default: standard output)");
  batch->add_option("--overlay-dir", overlay_dir, "Write one overlay PNG per pair into this directory");
  batch->add_flag("--strict", strict, "Fail when a file has no partner");
  batch->add_option("--jobs", jobs, "Pairs evaluated concurrently")->check(CLI::PositiveNumber)->capture_default_str();
  add_metric_flags(batch, batch_flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(gt, pred, eval_flags, overlay, report, out);
    return run_batch(gt_dir, pred_dir, batch_flags, batch_report, overlay_dir, strict, jobs, out, err);
  } catch (const DimensionMismatch& e) {
    err << "error: dimension mismatch: " << e.what() << '\n';
    return kExitDimension;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cts::cli
