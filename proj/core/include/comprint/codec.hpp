#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "comprint/plane.hpp"

namespace comprint::dataset {

/// Baseline sequential JPEG at the conventional libjpeg quality scaling,
/// Huffman optimization off. Grayscale in, grayscale out.
std::vector<std::uint8_t> encode_jpeg(const GrayImage& image, int quality);

std::vector<std::uint8_t> encode_png(const GrayImage& image);

/// Decodes any supported still-image payload to grayscale.
GrayImage decode_gray(const std::vector<std::uint8_t>& bytes);

/// Decodes a file in any common raster format; empty result if the file is
/// not decodable.
RasterImage decode_raster_file(const std::filesystem::path& path);

GrayImage load_gray(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
void write_png(const std::filesystem::path& path, const GrayImage& image);

}  // namespace comprint::dataset
