#include "comprint/hash.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include "comprint/errors.hpp"

namespace comprint {

namespace {
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;
}

Fnv1a64& Fnv1a64::update(const void* bytes, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < n; ++i) {
    state_ ^= p[i];
    state_ *= kFnvPrime;
  }
  return *this;
}

Fnv1a64& Fnv1a64::update(std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  return update(b, 8);
}

std::string Fnv1a64::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(state_));
  return std::string(buf);
}

std::uint64_t fnv1a64(std::string_view s) { return Fnv1a64().update(s).digest(); }

std::string fnv1a64_hex(std::string_view s) { return Fnv1a64().update(s).hex(); }

std::string checksum_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArtifactError("cannot open file for checksum: " + path.string());
  Fnv1a64 h;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return "fnv1a64:" + h.hex();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view item_id) {
  return splitmix64(global_seed ^ fnv1a64(item_id));
}

}  // namespace comprint
