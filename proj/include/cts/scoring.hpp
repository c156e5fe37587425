#pragma once

#include <string_view>

#include "cts/matching.hpp"
#include "cts/preprocess.hpp"
#include "cts/skeleton.hpp"

namespace cts {

enum class Degenerate { none, both_empty, pred_empty, gt_empty };

struct Scores {
  double pcs = 0.0;
  double rcs = 0.0;
  double cts = 0.0;
  double pred_total_len = 0.0;
  double pred_matched_len = 0.0;
  double gt_total_len = 0.0;
  double gt_matched_len = 0.0;
  Degenerate degenerate = Degenerate::none;

  friend bool operator==(const Scores&, const Scores&) = default;
};

struct EvalConfig {
  PreprocessConfig preprocess;
  MatchConfig match;
  int binarize_threshold = 128;

  friend bool operator==(const EvalConfig&, const EvalConfig&) = default;
};

struct LengthScore {
  double score = 0.0;
  double matched_len = 0.0;
  double total_len = 0.0;
};

/// Length-weighted fraction of matched segments; 0 when there are none.
/// Throws ContractError when the table does not cover the decomposition.
LengthScore compute_pcs(const MatchTable& pred_table, const SegmentDecomposition& pred);
LengthScore compute_rcs(const MatchTable& gt_table, const SegmentDecomposition& gt);

/// 2pr/(p+r), or 0 when p + r == 0.
double harmonic_cts(double pcs, double rcs);

/// Intermediate products kept for overlays and debugging.
struct EvalDiagnostics {
  Skeleton gt_skeleton;
  Skeleton pred_skeleton;
  SegmentDecomposition gt;
  SegmentDecomposition pred;
  MatchTable gt_table;    // gt -> pred
  MatchTable pred_table;  // pred -> gt
};

/// Full pipeline: preprocess, thin, decompose, match both ways, score.
/// Throws DimensionMismatch if the masks differ in size.
Scores evaluate(const BinaryMask& gt, const BinaryMask& pred, const EvalConfig& cfg = {},
                EvalDiagnostics* diagnostics = nullptr);

/// Scoring from already matched decompositions, including empty-skeleton conventions.
Scores score_tables(const SegmentDecomposition& gt, const SegmentDecomposition& pred,
                    const MatchTable& gt_table, const MatchTable& pred_table);

std::string_view to_string(Degenerate d);

}  // namespace cts
