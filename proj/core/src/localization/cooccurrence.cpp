#include <algorithm>
#include <cmath>

#include "comprint/errors.hpp"
#include "comprint/localization.hpp"

namespace comprint::localization {

namespace {
std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

std::uint64_t CooccurrenceHistogram::total() const {
  std::uint64_t t = 0;
  for (auto b : bins) t += b;
  return t;
}

std::size_t encode_run(std::span<const int> run, int truncation) {
  const std::size_t levels = static_cast<std::size_t>(2 * truncation + 1);
  std::size_t idx = 0;
  for (int v : run) idx = idx * levels + static_cast<std::size_t>(v + truncation);
  return idx;
}

std::pair<CooccurrenceHistogram, CooccurrenceHistogram> compute_cooccurrence(
    const QuantizedPlane& quantized, int origin_row, int origin_col, int window, int order) {
  if (order < 2) throw ConfigError("compute_cooccurrence: order must be >= 2");
  if (window < order) throw ConfigError("compute_cooccurrence: window smaller than order");
  if (origin_row < 0 || origin_col < 0 || origin_row + window > quantized.rows ||
      origin_col + window > quantized.cols)
    throw ConfigError("compute_cooccurrence: window out of bounds");

  const int levels = 2 * quantized.truncation + 1;
  const std::size_t n_bins = ipow(static_cast<std::size_t>(levels), order);
  const std::size_t msd = ipow(static_cast<std::size_t>(levels), order - 1);

  CooccurrenceHistogram h, v;
  h.order = v.order = order;
  h.levels = v.levels = levels;
  h.direction = Direction::kHorizontal;
  v.direction = Direction::kVertical;
  h.bins.assign(n_bins, 0);
  v.bins.assign(n_bins, 0);

  const int T = quantized.truncation;
  // rolling base-`levels` code along each row, then each column
  for (int r = origin_row; r < origin_row + window; ++r) {
    std::size_t code = 0;
    for (int c = origin_col; c < origin_col + window; ++c) {
      code = (code % msd) * levels + static_cast<std::size_t>(quantized.at(r, c) + T);
      if (c - origin_col >= order - 1) ++h.bins[code];
    }
  }
  for (int c = origin_col; c < origin_col + window; ++c) {
    std::size_t code = 0;
    for (int r = origin_row; r < origin_row + window; ++r) {
      code = (code % msd) * levels + static_cast<std::size_t>(quantized.at(r, c) + T);
      if (r - origin_row >= order - 1) ++v.bins[code];
    }
  }
  return {std::move(h), std::move(v)};
}

FoldTable make_fold_table(int levels, int order) {
  if (levels < 3 || levels % 2 == 0) throw ConfigError("fold table: levels must be odd >= 3");
  if (order < 2) throw ConfigError("fold table: order must be >= 2");

  const std::size_t n_bins = ipow(static_cast<std::size_t>(levels), order);
  FoldTable ft;
  ft.levels = levels;
  ft.order = order;
  ft.table.assign(n_bins, -1);

  const int T = (levels - 1) / 2;
  std::vector<int> digits(order);
  for (std::size_t code = 0; code < n_bins; ++code) {
    std::size_t x = code;
    for (int i = order - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(x % levels) - T;
      x /= levels;
    }
    // canonical representative: min encoding over {t, -t, rev(t), -rev(t)}
    std::vector<int> neg(order), rev(order), negrev(order);
    for (int i = 0; i < order; ++i) {
      neg[i] = -digits[i];
      rev[i] = digits[order - 1 - i];
      negrev[i] = -digits[order - 1 - i];
    }
    std::size_t canon = std::min({encode_run(digits, T), encode_run(neg, T),
                                  encode_run(rev, T), encode_run(negrev, T)});
    if (ft.table[canon] < 0) ft.table[canon] = ft.n_classes++;
    ft.table[code] = ft.table[canon];
  }
  return ft;
}

}  // namespace comprint::localization
