#include <algorithm>
#include <cmath>

#include "comprint/errors.hpp"
#include "comprint/localization.hpp"

namespace comprint::localization {

int ResidualQuantizer::quantize(double x) const {
  double scaled = x / quantization_step;
  // round half away from zero keeps the map odd-symmetric
  long v = std::lround(scaled);
  long t = truncation;
  return static_cast<int>(std::clamp(v, -t, t));
}

ResidualQuantizer ResidualQuantizer::adaptive(const FloatPlane& plane, double levels_per_std,
                                              int truncation) {
  if (levels_per_std <= 0) throw ConfigError("adaptive quantizer: levels_per_std must be > 0");
  if (truncation < 1) throw ConfigError("adaptive quantizer: truncation must be >= 1");
  double sd = stddev(plane);
  ResidualQuantizer q;
  q.truncation = truncation;
  q.quantization_step = std::max(sd / levels_per_std, 1e-12);
  return q;
}

QuantizedPlane quantize_residual(const FloatPlane& comprint, const ResidualQuantizer& q) {
  if (q.quantization_step <= 0)
    throw ConfigError("quantize_residual: quantization_step must be > 0");
  if (q.truncation < 1) throw ConfigError("quantize_residual: truncation must be >= 1");
  if (!comprint.all_finite())
    throw DataError("quantize_residual: comprint contains non-finite values");

  QuantizedPlane out;
  out.rows = comprint.rows;
  out.cols = comprint.cols;
  out.truncation = q.truncation;
  out.data.resize(comprint.data.size());
  for (std::size_t i = 0; i < comprint.data.size(); ++i)
    out.data[i] = static_cast<std::int8_t>(q.quantize(comprint.data[i]));
  return out;
}

FloatPlane highpass_residual(const FloatPlane& plane) {
  FloatPlane out(plane.rows, plane.cols, 0.f);
  for (int r = 0; r < plane.rows; ++r) {
    for (int c = 0; c < plane.cols; ++c) {
      auto clamped = [&](int rr, int cc) {
        rr = std::clamp(rr, 0, plane.rows - 1);
        cc = std::clamp(cc, 0, plane.cols - 1);
        return plane.at(rr, cc);
      };
      float nb = 0.25f * (clamped(r - 1, c) + clamped(r + 1, c) + clamped(r, c - 1) +
                          clamped(r, c + 1));
      out.at(r, c) = plane.at(r, c) - nb;
    }
  }
  return out;
}

}  // namespace comprint::localization
