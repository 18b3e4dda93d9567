#include <algorithm>
#include <cmath>
#include <limits>

#include "comprint/errors.hpp"
#include "comprint/metrics.hpp"

namespace comprint::metrics {

namespace {

// Heatmap values sorted ascending with positive-label prefix counts; lets a
// threshold be scored in O(log N) instead of a full pass.
struct SortedScores {
  std::vector<float> values;
  std::vector<std::uint64_t> pos_prefix;  // positives among values[0..i)
  std::uint64_t total_pos = 0;
  std::uint64_t n = 0;
};

SortedScores sort_scores(const FloatPlane& heatmap, const GrayImage& mask) {
  SortedScores s;
  s.n = heatmap.data.size();
  std::vector<std::pair<float, bool>> v(s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    v[i] = {heatmap.data[i], mask.data[i] != 0};
  std::sort(v.begin(), v.end());
  s.values.resize(s.n);
  s.pos_prefix.resize(s.n + 1, 0);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.values[i] = v[i].first;
    s.pos_prefix[i + 1] = s.pos_prefix[i] + (v[i].second ? 1 : 0);
  }
  s.total_pos = s.pos_prefix[s.n];
  return s;
}

ConfusionCounts counts_at(const SortedScores& s, double threshold, int polarity) {
  ConfusionCounts c;
  std::uint64_t pred_pos, tp;
  if (polarity > 0) {
    // prediction: value >= threshold
    auto it = std::lower_bound(s.values.begin(), s.values.end(),
                               static_cast<float>(threshold),
                               [](float a, double b) { return static_cast<double>(a) < b; });
    std::size_t lb = static_cast<std::size_t>(it - s.values.begin());
    pred_pos = s.n - lb;
    tp = s.total_pos - s.pos_prefix[lb];
  } else {
    // prediction: -value >= threshold  <=>  value <= -threshold
    auto it = std::upper_bound(s.values.begin(), s.values.end(), -threshold,
                               [](double a, float b) { return a < static_cast<double>(b); });
    std::size_t ub = static_cast<std::size_t>(it - s.values.begin());
    pred_pos = ub;
    tp = s.pos_prefix[ub];
  }
  c.tp = tp;
  c.fp = pred_pos - tp;
  c.fn = s.total_pos - tp;
  c.tn = (s.n - s.total_pos) - c.fp;
  return c;
}

std::vector<double> candidate_thresholds(const SortedScores& s, int n_thresholds,
                                         SweepMode mode) {
  std::vector<double> t;
  if (mode == SweepMode::kExhaustive) {
    t.reserve(s.n + 2);
    for (std::size_t i = 0; i < s.n; ++i)
      if (i == 0 || s.values[i] != s.values[i - 1]) t.push_back(s.values[i]);
  } else {
    t.reserve(static_cast<std::size_t>(n_thresholds) + 2);
    for (int i = 0; i < n_thresholds; ++i) {
      double level = static_cast<double>(i) / (n_thresholds - 1);
      auto idx = static_cast<std::size_t>(std::llround(level * static_cast<double>(s.n - 1)));
      t.push_back(s.values[idx]);
    }
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  t.insert(t.begin(), -std::numeric_limits<double>::infinity());
  t.push_back(std::numeric_limits<double>::infinity());
  return t;
}

}  // namespace

MccCurve max_mcc(const FloatPlane& heatmap, const GrayImage& mask, int n_thresholds,
                 SweepMode mode) {
  if (n_thresholds < 2) throw ConfigError("max_mcc: n_thresholds must be >= 2");
  if (heatmap.empty()) throw DataError("max_mcc: empty heatmap");
  if (!heatmap.all_finite()) throw DataError("max_mcc: heatmap contains non-finite values");

  SortedScores s = sort_scores(heatmap, mask);
  std::vector<double> base = candidate_thresholds(s, n_thresholds, mode);

  MccCurve best_curve;
  double best = -std::numeric_limits<double>::infinity();
  for (int polarity : {+1, -1}) {
    MccCurve curve;
    curve.polarity = polarity;
    curve.thresholds.reserve(base.size());
    curve.mcc_values.reserve(base.size());
    // same candidate set mirrored for the negated plane
    for (std::size_t i = 0; i < base.size(); ++i) {
      double t = polarity > 0 ? base[i] : -base[base.size() - 1 - i];
      curve.thresholds.push_back(t);
      curve.mcc_values.push_back(mcc(counts_at(s, t, polarity)));
    }
    curve.best_mcc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.mcc_values.size(); ++i) {
      if (curve.mcc_values[i] > curve.best_mcc) {
        curve.best_mcc = curve.mcc_values[i];
        curve.best_threshold = curve.thresholds[i];
      }
    }
    if (curve.best_mcc > best) {
      best = curve.best_mcc;
      best_curve = curve;
    }
  }
  return best_curve;
}

}  // namespace comprint::metrics
