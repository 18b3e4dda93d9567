#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace comprint {

/// Streaming FNV-1a 64-bit hash. Used for file checksums, per-image seed
/// derivation and stage/config content hashes.
class Fnv1a64 {
 public:
  Fnv1a64& update(const void* bytes, std::size_t n);
  Fnv1a64& update(std::string_view s) { return update(s.data(), s.size()); }
  Fnv1a64& update(std::uint64_t v);
  std::uint64_t digest() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

/// Checksum of a file's content, "fnv1a64:<16 hex digits>".
std::string checksum_file(const std::filesystem::path& path);

/// splitmix64 finalizer; decorrelates derived seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-item RNG seed from a global seed and a stable string id. Independent
/// of the order items are processed in.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view item_id);

}  // namespace comprint
