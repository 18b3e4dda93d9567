#include "comprint/plane.hpp"

#include <algorithm>

namespace comprint {

FloatPlane to_float(const GrayImage& img, float scale) {
  FloatPlane out(img.rows, img.cols);
  for (std::size_t i = 0; i < img.data.size(); ++i)
    out.data[i] = static_cast<float>(img.data[i]) * scale;
  return out;
}

GrayImage to_u8_minmax(const FloatPlane& plane) {
  GrayImage out(plane.rows, plane.cols, 128);
  if (plane.empty()) return out;
  auto [mn_it, mx_it] = std::minmax_element(plane.data.begin(), plane.data.end());
  float mn = *mn_it, mx = *mx_it;
  if (mx <= mn) return out;  // constant plane -> mid-gray
  float inv = 255.0f / (mx - mn);
  for (std::size_t i = 0; i < plane.data.size(); ++i) {
    float v = (plane.data[i] - mn) * inv;
    out.data[i] = static_cast<std::uint8_t>(std::clamp(v + 0.5f, 0.0f, 255.0f));
  }
  return out;
}

float mean(const FloatPlane& plane) {
  if (plane.empty()) return 0.f;
  double s = 0;
  for (float v : plane.data) s += v;
  return static_cast<float>(s / static_cast<double>(plane.size()));
}

float stddev(const FloatPlane& plane) {
  if (plane.size() < 2) return 0.f;
  double m = mean(plane);
  double s = 0;
  for (float v : plane.data) {
    double d = v - m;
    s += d * d;
  }
  return static_cast<float>(std::sqrt(s / static_cast<double>(plane.size())));
}

}  // namespace comprint
