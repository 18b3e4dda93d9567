#include "comprint/log.hpp"

#include <chrono>
#include <iostream>

namespace comprint {

namespace {
std::string timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", std::gmtime(&t));
  return buf;
}
}  // namespace

void Logger::open(const std::filesystem::path& file) {
  std::filesystem::create_directories(file.parent_path());
  file_.open(file, std::ios::app);
}

void Logger::line(const std::string& msg) {
  std::string out = timestamp() + " " + msg;
  std::cerr << out << "\n";
  if (file_.is_open()) file_ << out << "\n" << std::flush;
}

void Logger::kv(const std::string& stage, const std::string& fields) {
  line("stage=" + stage + " " + fields);
}

}  // namespace comprint
