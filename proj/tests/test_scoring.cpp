#include <doctest.h>

#include <algorithm>
#include <random>

#include "cts/scoring.hpp"
#include "testkit.hpp"

using namespace cts;

namespace {

SegmentDecomposition lines(int w, int h, const std::vector<int>& pixel_counts) {
  SegmentDecomposition d;
  d.width = w;
  d.height = h;
  int row = 0;
  for (const int n : pixel_counts) {
    SkeletonSegment s{static_cast<int>(d.segments.size()), SegmentKind::open_path, {}, 0.0};
    for (int x = 0; x < n; ++x) s.pixels.push_back({x, row});
    s.length = segment_length(s);
    d.total_length += s.length;
    d.segments.push_back(std::move(s));
    row += 2;
  }
  return d;
}

MatchTable verdicts(const std::vector<bool>& matched) {
  MatchTable t;
  for (std::size_t i = 0; i < matched.size(); ++i) t.push_back({static_cast<int>(i), matched[i], matched[i] ? 1.0 : 0.0, {}});
  return t;
}

// Scores computed without going through evaluate().
Scores bypass_pipeline(const BinaryMask& gt, const BinaryMask& pred, const MatchConfig& cfg) {
  const auto g = decompose(thin(gt));
  const auto p = decompose(thin(pred));
  return score_tables(g, p, match_all(g, p, cfg), match_all(p, g, cfg));
}

}  // namespace

TEST_CASE("compute_pcs examples") {
  const auto d = lines(32, 8, {10, 4});
  REQUIRE(d.segments[0].length == 9.0);
  REQUIRE(d.segments[1].length == 3.0);
  CHECK(compute_pcs(verdicts({true, true}), d).score == 1.0);
  const auto partial = compute_pcs(verdicts({true, false}), d);
  CHECK(partial.score == 0.75);
  CHECK(partial.matched_len == 9.0);
  CHECK(partial.total_len == 12.0);
  CHECK(compute_pcs(verdicts({false, false}), d).score == 0.0);

  CHECK_THROWS_AS(compute_pcs(verdicts({true}), d), ContractError);
  MatchTable swapped = verdicts({true, false});
  std::swap(swapped[0].segment_id, swapped[1].segment_id);
  CHECK_THROWS_AS(compute_pcs(swapped, d), ContractError);

  const SegmentDecomposition empty{4, 4, {}, {}, 0.0};
  CHECK(compute_pcs({}, empty).score == 0.0);
}

TEST_CASE("compute_rcs examples") {
  const auto d = lines(32, 8, {11, 11});
  CHECK(compute_rcs(verdicts({true, true}), d).score == 1.0);
  CHECK(compute_rcs(verdicts({true, false}), d).score == 0.5);
  CHECK(compute_rcs(verdicts({false, false}), d).score == 0.0);
}

TEST_CASE("harmonic_cts") {
  CHECK(harmonic_cts(1.0, 1.0) == 1.0);
  CHECK(harmonic_cts(1.0, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(harmonic_cts(0.0, 0.0) == 0.0);
  CHECK(harmonic_cts(0.0, 1.0) == 0.0);
}

TEST_CASE("evaluate examples") {
  std::mt19937 rng(31);
  const BinaryMask m = testkit::crack_like(96, 96, rng);
  const Scores self = evaluate(m, m);
  CHECK(self.pcs == 1.0);
  CHECK(self.rcs == 1.0);
  CHECK(self.cts == 1.0);
  CHECK(self.degenerate == Degenerate::none);

  const BinaryMask gt = testkit::horizontal_line(128, 128, 50, 10, 90);
  const Scores near = evaluate(gt, testkit::horizontal_line(128, 128, 55, 10, 90));
  CHECK(near == Scores{1.0, 1.0, 1.0, 80.0, 80.0, 80.0, 80.0, Degenerate::none});
  const Scores far = evaluate(gt, testkit::horizontal_line(128, 128, 75, 10, 90));
  CHECK(far == Scores{0.0, 0.0, 0.0, 80.0, 0.0, 80.0, 0.0, Degenerate::none});

  const Scores both = evaluate(BinaryMask(16, 16), BinaryMask(16, 16));
  CHECK(both == Scores{1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, Degenerate::both_empty});
}

TEST_CASE("evaluate degenerate conventions") {
  const BinaryMask line = testkit::horizontal_line(32, 8, 3, 2, 20);
  const Scores no_pred = evaluate(line, BinaryMask(32, 8));
  CHECK(no_pred.pcs == 0.0);
  CHECK(no_pred.rcs == 0.0);
  CHECK(no_pred.cts == 0.0);
  CHECK(no_pred.degenerate == Degenerate::pred_empty);
  CHECK(no_pred.gt_total_len == 18.0);

  const Scores no_gt = evaluate(BinaryMask(32, 8), line);
  CHECK(no_gt.cts == 0.0);
  CHECK(no_gt.degenerate == Degenerate::gt_empty);

  // A 2x2 blob thins away, so it counts as an empty skeleton.
  BinaryMask blob(8, 8);
  for (int y = 3; y < 5; ++y)
    for (int x = 3; x < 5; ++x) blob.set(x, y);
  CHECK(evaluate(blob, BinaryMask(8, 8)).degenerate == Degenerate::both_empty);
}

TEST_CASE("evaluate rejects mismatched sizes and bad configs") {
  CHECK_THROWS_AS(evaluate(BinaryMask(64, 64), BinaryMask(32, 32)), DimensionMismatch);
  EvalConfig bad;
  bad.match.buffer_radius = 0;
  CHECK_THROWS_AS(evaluate(BinaryMask(8, 8), BinaryMask(8, 8), bad), ContractError);
}

TEST_CASE("evaluate diagnostics expose the intermediate products") {
  const BinaryMask gt = testkit::horizontal_line(40, 20, 5, 2, 30);
  const BinaryMask pred = testkit::horizontal_line(40, 20, 8, 2, 30);
  EvalDiagnostics d;
  const Scores s = evaluate(gt, pred, {}, &d);
  CHECK(d.gt.segments.size() == 1);
  CHECK(d.pred.segments.size() == 1);
  CHECK(d.gt_table.size() == 1);
  CHECK(d.pred_table[0].matched);
  CHECK(s.cts == 1.0);
}

TEST_CASE("score properties over a random corpus") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryMask a = testkit::random_mask(64, 64, rng);
    const BinaryMask b = testkit::random_mask(64, 64, rng);
    EvalConfig cfg;
    cfg.match.buffer_radius = 1 + static_cast<int>(rng() % 12);
    const Scores ab = evaluate(a, b, cfg);
    const Scores ba = evaluate(b, a, cfg);
    CHECK(ab.pcs == ba.rcs);
    CHECK(ab.rcs == ba.pcs);
    CHECK(ab.cts == ba.cts);
    CHECK(ab.cts == doctest::Approx(harmonic_cts(ab.pcs, ab.rcs)).epsilon(1e-12));
    for (const double v : {ab.pcs, ab.rcs, ab.cts}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(ab.cts <= 2.0 * std::min(ab.pcs, ab.rcs));
    CHECK(ab.pred_matched_len <= ab.pred_total_len);
    CHECK(ab.gt_matched_len <= ab.gt_total_len);

    CHECK(evaluate(a, b, cfg) == ab);
    CHECK(bypass_pipeline(a, b, cfg.match) == ab);

    const int dx = static_cast<int>(rng() % 10), dy = static_cast<int>(rng() % 10);
    CHECK(evaluate(testkit::shift(a, dx, dy, 80, 80), testkit::shift(b, dx, dy, 80, 80), cfg) == ab);
  }
}

TEST_CASE("preprocessing changes scores only when enabled") {
  BinaryMask gt(64, 32), pred(64, 32);
  for (int y = 12; y <= 16; ++y)
    for (int x = 8; x <= 55; ++x) {
      gt.set(x, y);
      pred.set(x, y);
    }
  for (int y = 14; y <= 15; ++y)
    for (int x = 30; x <= 31; ++x) pred.set(x, y, false);

  EvalConfig tight;
  tight.match.buffer_radius = 1;
  const Scores raw = evaluate(gt, pred, tight);
  CHECK(raw.cts < 1.0);
  tight.preprocess.hole_area_threshold = 4;
  CHECK(evaluate(gt, pred, tight).cts == 1.0);
  tight.preprocess.hole_area_threshold = 3;
  CHECK(evaluate(gt, pred, tight) == raw);
}
