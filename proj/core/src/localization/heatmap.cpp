#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>

#include "comprint/errors.hpp"
#include "comprint/localization.hpp"

namespace comprint::localization {

Heatmap heatmap_from_responsibilities(const GaussianMixtureState& state,
                                      const FeatureField& field, int rows, int cols) {
  Heatmap hm;
  hm.values = FloatPlane(rows, cols, 0.f);
  if (state.degenerate || field.zero_variance) return hm;  // no evidence: flat map

  const int d = field.dim;
  // per-cell log-likelihood ratio of component 1 (anomalous) vs component 0
  std::array<Eigen::LLT<Eigen::MatrixXd>, 2> llt;
  std::array<double, 2> log_norm{};
  for (int c = 0; c < 2; ++c) {
    llt[c].compute(state.covariances[c]);
    double logdet = 0.0;
    for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(llt[c].matrixL()(i, i));
    log_norm[c] = -0.5 * logdet;  // shared d*log(2*pi) cancels in the ratio
  }

  Eigen::MatrixXd grid_llr(field.grid_rows, field.grid_cols);
  Eigen::VectorXd x(d);
  for (int gr = 0; gr < field.grid_rows; ++gr) {
    for (int gc = 0; gc < field.grid_cols; ++gc) {
      const double* v = field.vec(gr, gc);
      for (int k = 0; k < d; ++k) x(k) = v[k];
      double q0 = llt[0].matrixL().solve(x - state.means[0]).squaredNorm();
      double q1 = llt[1].matrixL().solve(x - state.means[1]).squaredNorm();
      grid_llr(gr, gc) = (log_norm[1] - 0.5 * q1) - (log_norm[0] - 0.5 * q0);
    }
  }

  // bilinear between window centers, clamped (= nearest) outside them
  const double row0 = field.center_row(0);
  const double col0 = field.center_col(0);
  for (int r = 0; r < rows; ++r) {
    double gr = (r - row0) / field.stride;
    gr = std::clamp(gr, 0.0, static_cast<double>(field.grid_rows - 1));
    int g0 = static_cast<int>(gr);
    int g1 = std::min(g0 + 1, field.grid_rows - 1);
    double fr = gr - g0;
    for (int c = 0; c < cols; ++c) {
      double gc = (c - col0) / field.stride;
      gc = std::clamp(gc, 0.0, static_cast<double>(field.grid_cols - 1));
      int h0 = static_cast<int>(gc);
      int h1 = std::min(h0 + 1, field.grid_cols - 1);
      double fc = gc - h0;
      double top = grid_llr(g0, h0) * (1 - fc) + grid_llr(g0, h1) * fc;
      double bot = grid_llr(g1, h0) * (1 - fc) + grid_llr(g1, h1) * fc;
      hm.values.at(r, c) = static_cast<float>(top * (1 - fr) + bot * fr);
    }
  }
  return hm;
}

Heatmap localize(const FloatPlane& comprint, const LocalizationParams& params,
                 const std::string& source_id, const std::string& model_tag) {
  FloatPlane filtered;
  const FloatPlane* src = &comprint;
  if (params.highpass) {
    filtered = highpass_residual(comprint);
    src = &filtered;
  }

  auto quantizer =
      ResidualQuantizer::adaptive(*src, params.levels_per_std, params.truncation);
  QuantizedPlane q = quantize_residual(*src, quantizer);
  FeatureField raw = build_feature_field(q, params.window, params.stride, params.order);
  int d = std::min(params.reduce_dim, raw.dim);
  FeatureField reduced = reduce_dimension(raw, d);
  GaussianMixtureState state = em_fit(reduced, params.em_max_iter, params.em_tol,
                                      params.seed, params.em_restarts);
  Heatmap hm =
      heatmap_from_responsibilities(state, reduced, comprint.rows, comprint.cols);
  hm.source_id = source_id;
  hm.model_tag = model_tag;
  return hm;
}

}  // namespace comprint::localization
