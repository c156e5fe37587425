#include "cts/scoring.hpp"

#include <string>

namespace cts {
namespace {

LengthScore length_weighted(const MatchTable& table, const SegmentDecomposition& decomp, const char* what) {
  if (table.size() != decomp.segments.size()) {
    throw ContractError(std::string(what) + ": match table does not cover the decomposition");
  }
  LengthScore s;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& seg = decomp.segments[i];
    if (table[i].segment_id != seg.id) throw ContractError(std::string(what) + ": segment id mismatch");
    s.total_len += seg.length;
    if (table[i].matched) s.matched_len += seg.length;
  }
  s.score = s.total_len > 0.0 ? s.matched_len / s.total_len : 0.0;
  return s;
}

}  // namespace

LengthScore compute_pcs(const MatchTable& pred_table, const SegmentDecomposition& pred) {
  return length_weighted(pred_table, pred, "compute_pcs");
}

LengthScore compute_rcs(const MatchTable& gt_table, const SegmentDecomposition& gt) {
  return length_weighted(gt_table, gt, "compute_rcs");
}

double harmonic_cts(double pcs, double rcs) {
  const double sum = pcs + rcs;
  return sum == 0.0 ? 0.0 : 2.0 * pcs * rcs / sum;
}

Scores score_tables(const SegmentDecomposition& gt, const SegmentDecomposition& pred, const MatchTable& gt_table,
                    const MatchTable& pred_table) {
  const LengthScore p = compute_pcs(pred_table, pred);
  const LengthScore r = compute_rcs(gt_table, gt);
  Scores s;
  s.pred_total_len = p.total_len;
  s.pred_matched_len = p.matched_len;
  s.gt_total_len = r.total_len;
  s.gt_matched_len = r.matched_len;

  if (gt.empty() && pred.empty()) {
    s.pcs = s.rcs = s.cts = 1.0;
    s.degenerate = Degenerate::both_empty;
  } else if (pred.empty()) {
    s.degenerate = Degenerate::pred_empty;
  } else if (gt.empty()) {
    s.degenerate = Degenerate::gt_empty;
  } else {
    s.pcs = p.score;
    s.rcs = r.score;
    s.cts = harmonic_cts(s.pcs, s.rcs);
  }
  return s;
}

Scores evaluate(const BinaryMask& gt, const BinaryMask& pred, const EvalConfig& cfg, EvalDiagnostics* diagnostics) {
  require_same_shape(gt, pred, "evaluate");
  cfg.match.validate();

  const auto [gt_clean, pred_clean] = run_preprocess(gt, pred, cfg.preprocess);
  EvalDiagnostics local;
  EvalDiagnostics& d = diagnostics ? *diagnostics : local;
  d.gt_skeleton = thin(gt_clean);
  d.pred_skeleton = thin(pred_clean);
  d.gt = decompose(d.gt_skeleton);
  d.pred = decompose(d.pred_skeleton);
  d.pred_table = match_all(d.pred, d.gt, cfg.match);
  d.gt_table = match_all(d.gt, d.pred, cfg.match);
  return score_tables(d.gt, d.pred, d.gt_table, d.pred_table);
}

std::string_view to_string(Degenerate d) {
  switch (d) {
    case Degenerate::both_empty:
      return "both_empty";
    case Degenerate::pred_empty:
      return "pred_empty";
    case Degenerate::gt_empty:
      return "gt_empty";
    case Degenerate::none:
      break;
  }
  return "none";
}

}  // namespace cts
