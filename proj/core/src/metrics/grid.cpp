#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "comprint/errors.hpp"
#include "comprint/metrics.hpp"

namespace comprint::metrics {

const CellStats* ResultGrid::find(const std::string& model, int left_qf,
                                  const std::string& variant) const {
  auto it = cells.find(CellKey{model, left_qf, variant});
  return it == cells.end() ? nullptr : &it->second;
}

ResultGrid aggregate_grid(const std::vector<EvalRecord>& records) {
  std::set<std::tuple<std::string, std::string, int, std::string>> seen;
  std::map<CellKey, std::vector<double>> buckets;
  for (const auto& r : records) {
    if (!(r.best_mcc >= -1.0 && r.best_mcc <= 1.0))
      throw DataError("aggregate_grid: MCC out of [-1,1] for " + r.source_id);
    auto key = std::make_tuple(r.model, r.source_id, r.left_qf, r.variant);
    if (!seen.insert(key).second)
      throw DataError("aggregate_grid: duplicate result for model=" + r.model +
                      " source=" + r.source_id + " left_qf=" + std::to_string(r.left_qf) +
                      " variant=" + r.variant);
    buckets[CellKey{r.model, r.left_qf, r.variant}].push_back(r.best_mcc);
  }

  ResultGrid grid;
  for (const auto& [key, vals] : buckets) {
    CellStats st;
    st.count = static_cast<int>(vals.size());
    double sum = 0;
    for (double v : vals) sum += v;
    st.mean = sum / st.count;
    double ss = 0;
    for (double v : vals) ss += (v - st.mean) * (v - st.mean);
    st.stddev = st.count > 1 ? std::sqrt(ss / (st.count - 1)) : 0.0;
    grid.cells[key] = st;
  }
  return grid;
}

namespace {
std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}
}  // namespace

void write_results_csv(const std::filesystem::path& path,
                       const std::vector<EvalRecord>& records) {
  std::ofstream out(path);
  if (!out) throw ArtifactError("cannot write results csv: " + path.string());
  out << "model,source_id,left_qf,right_qf,variant,best_mcc,best_threshold,polarity\n";
  for (const auto& r : records) {
    out << r.model << ',' << r.source_id << ',' << r.left_qf << ',' << r.right_qf << ','
        << r.variant << ',' << fmt_double(r.best_mcc) << ',' << fmt_double(r.best_threshold)
        << ',' << r.polarity << '\n';
  }
}

std::vector<EvalRecord> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArtifactError("cannot read results csv: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty results csv: " + path.string());
  std::vector<EvalRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 8) throw DataError("malformed results csv row: " + line);
    EvalRecord r;
    r.model = f[0];
    r.source_id = f[1];
    r.left_qf = std::stoi(f[2]);
    r.right_qf = std::stoi(f[3]);
    r.variant = f[4];
    r.best_mcc = std::stod(f[5]);
    r.best_threshold = std::stod(f[6]);
    r.polarity = std::stoi(f[7]);
    records.push_back(std::move(r));
  }
  return records;
}

void write_grid_csv(const std::filesystem::path& path, const ResultGrid& grid) {
  std::ofstream out(path);
  if (!out) throw ArtifactError("cannot write grid csv: " + path.string());
  out << "model,left_qf,variant,mean_best_mcc,count,stddev\n";
  for (const auto& [key, st] : grid.cells) {
    out << key.model << ',' << key.left_qf << ',' << key.variant << ','
        << fmt_double(st.mean) << ',' << st.count << ',' << fmt_double(st.stddev) << '\n';
  }
}

}  // namespace comprint::metrics
