#pragma once

#include <filesystem>
#include <fstream>
#include <string>

namespace comprint {

/// Minimal structured logger: "key=value" lines to stderr and optionally a
/// file. One instance per run; stages log one line per event.
class Logger {
 public:
  Logger() = default;
  void open(const std::filesystem::path& file);
  void line(const std::string& msg);
  void kv(const std::string& stage, const std::string& fields);

 private:
  std::ofstream file_;
};

}  // namespace comprint
