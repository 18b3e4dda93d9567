#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "comprint/plane.hpp"

namespace comprint::metrics {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + tn + fp + fn; }
};

/// Tallies prediction = (polarity * heatmap >= threshold) against a binary
/// mask (nonzero = forged). Shapes must match.
ConfusionCounts confusion_counts(const FloatPlane& heatmap, const GrayImage& mask,
                                 double threshold, int polarity);

/// Matthews correlation coefficient. Returns 0 when any factor of the
/// denominator is 0 (the expression is undefined there).
double mcc(const ConfusionCounts& c);

struct MccCurve {
  std::vector<double> thresholds;  // sweep of the winning polarity, ascending
  std::vector<double> mcc_values;  // parallel to thresholds
  double best_mcc = 0.0;
  double best_threshold = 0.0;
  int polarity = +1;
};

enum class SweepMode {
  kQuantile,    // n_thresholds evenly spaced quantile levels + sentinels
  kExhaustive,  // every distinct heatmap value (audit mode)
};

/// Best MCC over thresholds and both polarities. A constant heatmap only
/// admits degenerate predictions and scores 0.
MccCurve max_mcc(const FloatPlane& heatmap, const GrayImage& mask, int n_thresholds,
                 SweepMode mode = SweepMode::kQuantile);

/// Pixel-level score of one heatmap/mask pair plus its grid coordinates.
struct EvalRecord {
  std::string model;
  std::string source_id;
  int left_qf = 0;
  int right_qf = 0;
  std::string variant;  // "lossless" or "rec<qf>"
  double best_mcc = 0.0;
  double best_threshold = 0.0;
  int polarity = +1;
};

struct CellKey {
  std::string model;
  int left_qf = 0;
  std::string variant;

  auto operator<=>(const CellKey&) const = default;
};

struct CellStats {
  double mean = 0.0;
  double stddev = 0.0;
  int count = 0;
};

struct ResultGrid {
  std::map<CellKey, CellStats> cells;

  const CellStats* find(const std::string& model, int left_qf,
                        const std::string& variant) const;
};

/// Per-cell mean/count/stddev. Duplicate (model, source, left_qf, variant)
/// entries are an error (double counting).
ResultGrid aggregate_grid(const std::vector<EvalRecord>& records);

void write_results_csv(const std::filesystem::path& path,
                       const std::vector<EvalRecord>& records);
std::vector<EvalRecord> read_results_csv(const std::filesystem::path& path);
void write_grid_csv(const std::filesystem::path& path, const ResultGrid& grid);

}  // namespace comprint::metrics
