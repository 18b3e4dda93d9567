#include <cmath>

#include "comprint/errors.hpp"
#include "comprint/metrics.hpp"

namespace comprint::metrics {

ConfusionCounts confusion_counts(const FloatPlane& heatmap, const GrayImage& mask,
                                 double threshold, int polarity) {
  if (heatmap.rows != mask.rows || heatmap.cols != mask.cols)
    throw DataError("confusion_counts: heatmap and mask shapes differ");
  if (polarity != 1 && polarity != -1)
    throw ConfigError("confusion_counts: polarity must be +1 or -1");

  ConfusionCounts c;
  const double sign = polarity;
  for (std::size_t i = 0; i < heatmap.data.size(); ++i) {
    bool pred = sign * static_cast<double>(heatmap.data[i]) >= threshold;
    bool truth = mask.data[i] != 0;
    if (pred) {
      if (truth)
        ++c.tp;
      else
        ++c.fp;
    } else {
      if (truth)
        ++c.fn;
      else
        ++c.tn;
    }
  }
  return c;
}

double mcc(const ConfusionCounts& c) {
  const double tp = static_cast<double>(c.tp);
  const double tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp);
  const double fn = static_cast<double>(c.fn);
  // sqrt of each factor separately keeps intermediate magnitudes ~N^2
  const double d1 = tp + fp, d2 = tp + fn, d3 = tn + fp, d4 = tn + fn;
  if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0) return 0.0;
  return (tp * tn - fp * fn) /
         (std::sqrt(d1) * std::sqrt(d2) * std::sqrt(d3) * std::sqrt(d4));
}

}  // namespace comprint::metrics
