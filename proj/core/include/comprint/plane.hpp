#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace comprint {

/// Single-channel 8-bit image, row-major.
struct GrayImage {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int r, int c, std::uint8_t fill = 0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  std::uint8_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }

  bool operator==(const GrayImage& o) const = default;
};

/// Single-channel float plane, row-major. Carrier for fingerprints,
/// heatmaps and residual targets.
struct FloatPlane {
  int rows = 0;
  int cols = 0;
  std::vector<float> data;

  FloatPlane() = default;
  FloatPlane(int r, int c, float fill = 0.f)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  float& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  float at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }

  bool all_finite() const {
    for (float v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }

  bool operator==(const FloatPlane& o) const = default;
};

/// Interleaved 8-bit raster as it comes out of an image decoder
/// (1 = grayscale, 3 = BGR like the decoder produces).
struct RasterImage {
  int rows = 0;
  int cols = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  bool empty() const { return data.empty(); }
};

FloatPlane to_float(const GrayImage& img, float scale = 1.0f);

/// Min-max scales a plane into [0,255] for visualization. Constant planes
/// map to mid-gray.
GrayImage to_u8_minmax(const FloatPlane& plane);

float mean(const FloatPlane& plane);
float stddev(const FloatPlane& plane);

}  // namespace comprint
