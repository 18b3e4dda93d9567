#include "comprint/codec.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "comprint/errors.hpp"

namespace comprint::dataset {

namespace {
cv::Mat to_mat(const GrayImage& image) {
  cv::Mat m(image.rows, image.cols, CV_8UC1);
  std::memcpy(m.data, image.data.data(), image.data.size());
  return m;
}

GrayImage from_mat(const cv::Mat& m) {
  GrayImage out(m.rows, m.cols);
  if (m.isContinuous()) {
    std::memcpy(out.data.data(), m.data, out.data.size());
  } else {
    for (int r = 0; r < m.rows; ++r)
      std::memcpy(out.data.data() + static_cast<std::size_t>(r) * m.cols, m.ptr(r), m.cols);
  }
  return out;
}
}  // namespace

std::vector<std::uint8_t> encode_jpeg(const GrayImage& image, int quality) {
  if (quality < 1 || quality > 100)
    throw ConfigError("jpeg quality must be in [1,100], got " + std::to_string(quality));
  if (image.empty()) throw DataError("encode_jpeg: empty image");
  std::vector<std::uint8_t> bytes;
  std::vector<int> params = {
      cv::IMWRITE_JPEG_QUALITY,     quality,
      cv::IMWRITE_JPEG_PROGRESSIVE, 0,
      cv::IMWRITE_JPEG_OPTIMIZE,    0,
  };
  if (!cv::imencode(".jpg", to_mat(image), bytes, params))
    throw DataError("JPEG encoding failed");
  return bytes;
}

std::vector<std::uint8_t> encode_png(const GrayImage& image) {
  if (image.empty()) throw DataError("encode_png: empty image");
  std::vector<std::uint8_t> bytes;
  std::vector<int> params = {cv::IMWRITE_PNG_COMPRESSION, 6};
  if (!cv::imencode(".png", to_mat(image), bytes, params))
    throw DataError("PNG encoding failed");
  return bytes;
}

GrayImage decode_gray(const std::vector<std::uint8_t>& bytes) {
  cv::Mat m = cv::imdecode(bytes, cv::IMREAD_GRAYSCALE);
  if (m.empty()) throw DataError("image payload is not decodable");
  return from_mat(m);
}

RasterImage decode_raster_file(const std::filesystem::path& path) {
  cv::Mat m = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  RasterImage out;
  if (m.empty()) return out;
  if (m.depth() != CV_8U) {
    cv::Mat tmp;
    m.convertTo(tmp, CV_8U, 255.0 / 65535.0 * (m.depth() == CV_16U ? 1.0 : 257.0));
    m = tmp;
  }
  if (m.channels() == 4) {
    cv::Mat tmp;
    cv::cvtColor(m, tmp, cv::COLOR_BGRA2BGR);
    m = tmp;
  }
  out.rows = m.rows;
  out.cols = m.cols;
  out.channels = m.channels();
  out.data.resize(static_cast<std::size_t>(m.rows) * m.cols * m.channels());
  if (m.isContinuous()) {
    std::memcpy(out.data.data(), m.data, out.data.size());
  } else {
    std::size_t row_bytes = static_cast<std::size_t>(m.cols) * m.channels();
    for (int r = 0; r < m.rows; ++r)
      std::memcpy(out.data.data() + r * row_bytes, m.ptr(r), row_bytes);
  }
  return out;
}

GrayImage load_gray(const std::filesystem::path& path) {
  cv::Mat m = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
  if (m.empty()) throw ArtifactError("cannot load image: " + path.string());
  return from_mat(m);
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArtifactError("cannot write file: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ArtifactError("short write: " + path.string());
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
  write_file(path, encode_png(image));
}

}  // namespace comprint::dataset
