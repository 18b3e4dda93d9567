#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "comprint/log.hpp"
#include "comprint/plane.hpp"

namespace comprint::dataset {

/// Preprocessed grayscale source image.
struct SourceImage {
  std::string id;
  GrayImage pixels;
  std::string origin;  // source path + preprocessing applied
};

/// Ordered JPEG quality-factor steps applied to an image. An empty step
/// list with final_lossless=true is the pristine (never JPEG-coded) case.
struct CompressionChain {
  std::vector<int> steps;
  bool final_lossless = false;

  bool operator==(const CompressionChain&) const = default;
  void validate() const;
  std::string label() const;  // e.g. "jpeg50", "jpeg50+jpeg90", "pristine"
};

struct TrainingRecipe {
  std::string name;
  std::vector<int> first_qfs;
  std::vector<int> recompression_qfs;
  double recompression_probability = 0.0;

  void validate() const;

  static TrainingRecipe high_qf();
  static TrainingRecipe wide_qf();
  static TrainingRecipe high_qf_rec();
  /// Accepts highqf / wideqf / highqfrec, case-insensitive.
  static TrainingRecipe by_name(std::string_view name);
};

/// One composite test image: left half at left_qf, right half at
/// left_qf+10, optionally recompressed whole at recompress_qf.
struct CompositeSpec {
  int left_qf = 0;
  int right_qf = 0;
  std::optional<int> recompress_qf;
  std::string source_id;

  void validate() const;
  std::string variant() const;  // "lossless" or "rec<qf>"
  std::string entry_id() const;
};

/// The 15 left-half quality factors of the composite grid (20..90 step 5).
const std::vector<int>& composite_left_qfs();
/// Whole-image recompression quality factors of the test grid.
const std::vector<int>& composite_recompress_qfs();

enum class Role { kTrain, kVal, kTest };
std::string to_string(Role role);
Role role_from_string(std::string_view s);

struct ManifestEntry {
  std::string id;
  Role role = Role::kTrain;
  std::optional<CompressionChain> chain;
  std::optional<CompositeSpec> composite;
  std::string path;      // relative to the dataset root (ingest: absolute source path)
  std::string checksum;  // "fnv1a64:<hex>"
};

struct DatasetManifest {
  std::string recipe_name;  // empty until a recipe is applied
  std::uint64_t seed = 0;
  std::vector<ManifestEntry> entries;

  std::string to_json() const;
  static DatasetManifest from_json(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static DatasetManifest load(const std::filesystem::path& path);

  std::vector<const ManifestEntry*> by_role(Role role) const;
  const ManifestEntry* find(std::string_view id) const;
  /// Verifies recorded checksums against files under root.
  void verify_checksums(const std::filesystem::path& root) const;
};

struct SplitSizes {
  int train = 0;
  int val = 0;
  int test = 0;
};

/// Scans a corpus directory, skips undecodable files (logged), and draws
/// disjoint random train/val/test splits with the given seed.
DatasetManifest ingest_corpus(const std::filesystem::path& corpus_dir, SplitSizes sizes,
                              std::uint64_t seed, Logger* log = nullptr);

/// Grayscale (BT.601 luma) + bicubic resize to the target size.
SourceImage preprocess(const RasterImage& image, int target_rows, int target_cols,
                       std::string_view id = "", std::string_view origin = "");

struct CompressedResult {
  GrayImage pixels;                // final decoded plane
  std::vector<std::uint8_t> bytes; // final encoded file content
};

/// Applies the chain's JPEG steps in order, each decode feeding the next
/// encode; a lossless final save re-encodes the last decoded plane as PNG.
CompressedResult compress_chain(const GrayImage& image, const CompressionChain& chain);

/// Chain for one image under a recipe: first QF uniform over first_qfs,
/// then with recompression_probability a second QF uniform over
/// recompression_qfs. Randomness depends only on (seed, image id).
CompressionChain draw_chain(const TrainingRecipe& recipe, std::uint64_t seed,
                            std::string_view image_id);

/// Reads the ingest manifest, preprocesses each source to the role's target
/// size and writes PNGs under root/preprocessed. Returns the new manifest.
DatasetManifest preprocess_corpus(const DatasetManifest& ingest,
                                  const std::filesystem::path& root, int train_size,
                                  int test_size, Logger* log = nullptr);

/// Compresses every train/val entry with a per-image drawn chain; JPEG
/// files land under root/train/<recipe>/images.
DatasetManifest build_training_set(const DatasetManifest& preprocessed,
                                   const TrainingRecipe& recipe, std::uint64_t seed,
                                   const std::filesystem::path& root, Logger* log = nullptr);

struct CompositeResult {
  GrayImage image;
  GrayImage mask;  // 0 = left half, 1 = right half
  std::vector<std::pair<std::string, std::filesystem::path>> files;  // variant -> path
};

/// Halves compressed at (left_qf, left_qf+10), concatenated; saved lossless
/// and, when the spec asks, recompressed whole.
CompositeResult build_composite(const SourceImage& left_src, const CompositeSpec& spec,
                                const std::filesystem::path& out_dir);

/// Full composite grid over the test split: 15 QF pairs x (1 lossless + 7
/// recompressed) variants per source image.
DatasetManifest build_test_suite(const DatasetManifest& preprocessed,
                                 const std::filesystem::path& root, Logger* log = nullptr);

/// Textured random grayscale/RGB PNGs for exercising the pipeline without a
/// real corpus.
void synth_corpus(const std::filesystem::path& dir, int count, int rows, int cols,
                  std::uint64_t seed);

}  // namespace comprint::dataset
