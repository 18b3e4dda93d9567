#pragma once

#include <filesystem>

#include "comprint/plane.hpp"

namespace comprint {

/// 2-D float32 array I/O in NPY format (self-describing, little-endian,
/// C order). The on-disk format for comprints and heatmaps.
void save_npy(const std::filesystem::path& path, const FloatPlane& plane);
FloatPlane load_npy(const std::filesystem::path& path);

}  // namespace comprint
