#include <algorithm>
#include <cmath>

#include "comprint/errors.hpp"
#include "comprint/localization.hpp"

namespace comprint::localization {

FeatureField build_feature_field(const QuantizedPlane& quantized, int window, int stride,
                                 int order) {
  if (stride <= 0) throw ConfigError("build_feature_field: stride must be > 0");
  if (order < 2) throw ConfigError("build_feature_field: order must be >= 2");
  if (window < order) throw ConfigError("build_feature_field: window smaller than order");
  if (window > quantized.rows || window > quantized.cols)
    throw ConfigError("build_feature_field: window exceeds image size");

  const int levels = 2 * quantized.truncation + 1;
  const FoldTable fold = make_fold_table(levels, order);
  const int T = quantized.truncation;
  const std::size_t msd = [&] {
    std::size_t r = 1;
    for (int i = 0; i < order - 1; ++i) r *= static_cast<std::size_t>(levels);
    return r;
  }();

  // folded class of the run starting at each pixel, precomputed once per
  // direction so windows only sum table entries
  const int run_cols = quantized.cols - order + 1;
  const int run_rows = quantized.rows - order + 1;
  std::vector<int> class_h(static_cast<std::size_t>(quantized.rows) * run_cols);
  std::vector<int> class_v(static_cast<std::size_t>(run_rows) * quantized.cols);
  for (int r = 0; r < quantized.rows; ++r) {
    std::size_t code = 0;
    for (int c = 0; c < quantized.cols; ++c) {
      code = (code % msd) * levels + static_cast<std::size_t>(quantized.at(r, c) + T);
      if (c >= order - 1)
        class_h[static_cast<std::size_t>(r) * run_cols + (c - order + 1)] =
            fold.table[code];
    }
  }
  for (int c = 0; c < quantized.cols; ++c) {
    std::size_t code = 0;
    for (int r = 0; r < quantized.rows; ++r) {
      code = (code % msd) * levels + static_cast<std::size_t>(quantized.at(r, c) + T);
      if (r >= order - 1)
        class_v[static_cast<std::size_t>(r - order + 1) * quantized.cols + c] =
            fold.table[code];
    }
  }

  FeatureField field;
  field.window = window;
  field.stride = stride;
  field.image_rows = quantized.rows;
  field.image_cols = quantized.cols;
  field.grid_rows = (quantized.rows - window) / stride + 1;
  field.grid_cols = (quantized.cols - window) / stride + 1;
  field.dim = fold.n_classes;
  field.vectors.assign(
      static_cast<std::size_t>(field.grid_rows) * field.grid_cols * field.dim, 0.0);

  std::vector<std::uint32_t> hist(static_cast<std::size_t>(fold.n_classes));
  const int runs_per_line = window - order + 1;
  for (int gr = 0; gr < field.grid_rows; ++gr) {
    for (int gc = 0; gc < field.grid_cols; ++gc) {
      const int r0 = gr * stride, c0 = gc * stride;
      std::fill(hist.begin(), hist.end(), 0u);
      for (int r = r0; r < r0 + window; ++r) {
        const int* row = class_h.data() + static_cast<std::size_t>(r) * run_cols + c0;
        for (int i = 0; i < runs_per_line; ++i) ++hist[row[i]];
      }
      for (int r = r0; r < r0 + runs_per_line; ++r) {
        const int* row = class_v.data() + static_cast<std::size_t>(r) * quantized.cols + c0;
        for (int i = 0; i < window; ++i) ++hist[row[i]];
      }
      double total = 2.0 * window * runs_per_line;
      double* out = field.vec(gr, gc);
      for (int k = 0; k < fold.n_classes; ++k) out[k] = hist[k] / total;
    }
  }
  return field;
}

}  // namespace comprint::localization
