#include "comprint/npy.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include "comprint/errors.hpp"

namespace comprint {

namespace {
constexpr char kMagic[] = "\x93NUMPY";
}

void save_npy(const std::filesystem::path& path, const FloatPlane& plane) {
  std::ostringstream hdr;
  hdr << "{'descr': '<f4', 'fortran_order': False, 'shape': (" << plane.rows << ", "
      << plane.cols << "), }";
  std::string header = hdr.str();
  // total header block (magic 6 + version 2 + len 2 + dict) padded to 64
  std::size_t unpadded = 10 + header.size() + 1;
  std::size_t padded = (unpadded + 63) / 64 * 64;
  header.append(padded - unpadded, ' ');
  header.push_back('\n');

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArtifactError("cannot write npy file: " + path.string());
  out.write(kMagic, 6);
  out.put(1).put(0);  // version 1.0
  std::uint16_t hlen = static_cast<std::uint16_t>(header.size());
  out.put(static_cast<char>(hlen & 0xff)).put(static_cast<char>(hlen >> 8));
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(plane.data.data()),
            static_cast<std::streamsize>(plane.data.size() * sizeof(float)));
  if (!out) throw ArtifactError("short write on npy file: " + path.string());
}

FloatPlane load_npy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArtifactError("cannot open npy file: " + path.string());
  char magic[6];
  in.read(magic, 6);
  if (!in || std::memcmp(magic, kMagic, 6) != 0)
    throw DataError("not an npy file: " + path.string());
  unsigned char ver[2];
  in.read(reinterpret_cast<char*>(ver), 2);
  unsigned char lenb[2];
  in.read(reinterpret_cast<char*>(lenb), 2);
  std::size_t hlen = lenb[0] | (static_cast<std::size_t>(lenb[1]) << 8);
  std::string header(hlen, '\0');
  in.read(header.data(), static_cast<std::streamsize>(hlen));
  if (!in) throw DataError("truncated npy header: " + path.string());

  if (header.find("'<f4'") == std::string::npos)
    throw DataError("npy dtype is not <f4: " + path.string());
  if (header.find("'fortran_order': False") == std::string::npos)
    throw DataError("npy must be C order: " + path.string());
  auto sh = header.find("'shape':");
  auto lp = header.find('(', sh);
  auto rp = header.find(')', lp);
  if (sh == std::string::npos || lp == std::string::npos || rp == std::string::npos)
    throw DataError("malformed npy shape: " + path.string());
  std::string shape = header.substr(lp + 1, rp - lp - 1);
  int rows = 0, cols = 0;
  if (std::sscanf(shape.c_str(), "%d , %d", &rows, &cols) != 2 &&
      std::sscanf(shape.c_str(), "%d, %d", &rows, &cols) != 2)
    throw DataError("npy array is not 2-D: " + path.string());
  if (rows <= 0 || cols <= 0) throw DataError("bad npy shape: " + path.string());

  FloatPlane plane(rows, cols);
  in.read(reinterpret_cast<char*>(plane.data.data()),
          static_cast<std::streamsize>(plane.data.size() * sizeof(float)));
  if (!in) throw DataError("truncated npy data: " + path.string());
  return plane;
}

}  // namespace comprint
