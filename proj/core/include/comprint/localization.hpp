#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comprint/plane.hpp"

namespace comprint::localization {

/// Maps real-valued fingerprint samples onto the symmetric integer range
/// [-T, T]: clamp(round(x / step), -T, T).
struct ResidualQuantizer {
  double quantization_step = 1.0;  // > 0
  int truncation = 1;              // T >= 1

  int levels() const { return 2 * truncation + 1; }
  int quantize(double x) const;

  /// Step chosen so the plane's standard deviation spans `levels_per_std`
  /// quantization levels.
  static ResidualQuantizer adaptive(const FloatPlane& plane, double levels_per_std = 1.0,
                                    int truncation = 1);
};

/// Integer plane with values in [-truncation, truncation].
struct QuantizedPlane {
  int rows = 0;
  int cols = 0;
  int truncation = 1;
  std::vector<std::int8_t> data;

  std::int8_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

QuantizedPlane quantize_residual(const FloatPlane& comprint, const ResidualQuantizer& q);

enum class Direction { kHorizontal, kVertical };

/// Histogram of length-`order` runs of consecutive quantized values, bins
/// indexed by the base-(2T+1) encoding of the run (no symmetry folding).
struct CooccurrenceHistogram {
  int order = 0;
  int levels = 0;
  Direction direction = Direction::kHorizontal;
  std::vector<std::uint64_t> bins;  // size levels^order

  std::uint64_t total() const;
};

/// Index of a run in an unfolded histogram; first sample is the most
/// significant digit. Values are in [-T, T].
std::size_t encode_run(std::span<const int> run, int truncation);

/// Counts all runs inside the window whose top-left corner is
/// (origin_row, origin_col). Returns {horizontal, vertical}.
std::pair<CooccurrenceHistogram, CooccurrenceHistogram> compute_cooccurrence(
    const QuantizedPlane& quantized, int origin_row, int origin_col, int window, int order);

/// Equivalence classes of runs under negation and reversal. `table` maps an
/// unfolded bin index to its folded class.
struct FoldTable {
  int levels = 0;
  int order = 0;
  int n_classes = 0;
  std::vector<int> table;  // size levels^order
};

FoldTable make_fold_table(int levels, int order);

/// Grid of per-window feature vectors over a quantized plane. Vectors are
/// direction-merged, symmetry-folded, L1-normalized co-occurrence
/// histograms; after reduce_dimension they are PCA projections.
struct FeatureField {
  int grid_rows = 0;
  int grid_cols = 0;
  int dim = 0;
  int window = 0;
  int stride = 0;
  int image_rows = 0;
  int image_cols = 0;
  bool zero_variance = false;            // degenerate input, EM must be skipped
  std::vector<double> vectors;           // grid_rows*grid_cols x dim, row-major
  std::vector<double> projection_mean;   // set by reduce_dimension
  std::vector<double> projection_basis;  // dim x original_dim, row-major

  double* vec(int gr, int gc) {
    return vectors.data() + (static_cast<std::size_t>(gr) * grid_cols + gc) * dim;
  }
  const double* vec(int gr, int gc) const {
    return vectors.data() + (static_cast<std::size_t>(gr) * grid_cols + gc) * dim;
  }
  int n_vectors() const { return grid_rows * grid_cols; }

  /// Pixel coordinates of the window center for a grid cell.
  double center_row(int gr) const { return gr * stride + (window - 1) / 2.0; }
  double center_col(int gc) const { return gc * stride + (window - 1) / 2.0; }
};

FeatureField build_feature_field(const QuantizedPlane& quantized, int window, int stride,
                                 int order);

/// Principal-component projection fitted on this field's own vectors.
/// Flags the field zero-variance when all vectors coincide.
FeatureField reduce_dimension(const FeatureField& field, int d);

struct GaussianMixtureState {
  std::array<double, 2> weights{0.5, 0.5};
  std::array<Eigen::VectorXd, 2> means;
  std::array<Eigen::MatrixXd, 2> covariances;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool degenerate = false;
  std::vector<double> ll_history;  // one entry per EM iteration

  /// log N(x; mean_c, cov_c), without the mixing weight.
  double component_log_density(int c, const Eigen::VectorXd& x) const;
};

/// Two-component Gaussian-mixture EM with k-means initialization restarts
/// (best final likelihood wins, ties broken by restart index) and an
/// eigenvalue floor on covariances.
GaussianMixtureState em_fit(const FeatureField& field, int max_iter, double tol,
                            std::uint64_t seed, int restarts = 10);

struct Heatmap {
  FloatPlane values;  // larger = more likely anomalous component
  std::string source_id;
  std::string model_tag;
};

/// Per-cell log-likelihood ratio of the two components, bilinearly
/// interpolated from window centers to pixel resolution (nearest beyond the
/// outermost centers). Degenerate states produce a constant heatmap.
Heatmap heatmap_from_responsibilities(const GaussianMixtureState& state,
                                      const FeatureField& field, int rows, int cols);

struct LocalizationParams {
  int truncation = 1;
  int order = 4;
  double levels_per_std = 1.0;
  int window = 128;
  int stride = 8;
  int reduce_dim = 25;
  int em_restarts = 10;
  int em_max_iter = 100;
  double em_tol = 1e-6;
  int n_thresholds = 256;  // carried along for evaluation sidecars
  bool highpass = false;
  std::uint64_t seed = 0;
};

/// 4-neighbor high-pass residual, optional front end before quantization.
FloatPlane highpass_residual(const FloatPlane& plane);

/// Full comprint -> heatmap chain.
Heatmap localize(const FloatPlane& comprint, const LocalizationParams& params,
                 const std::string& source_id = "", const std::string& model_tag = "");

}  // namespace comprint::localization
