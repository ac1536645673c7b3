#include "rkidx/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rkidx/types.hpp"

namespace rkidx {

namespace {
constexpr int kSlots = 10;
constexpr double kRankShift = 20.0;
constexpr double kScale = 1000.0;
}  // namespace

RkResult rk_index(const std::vector<int>& ranks, int n_world) {
  if (ranks.empty()) throw DataError("no eligible papers");
  if (n_world <= 0) throw DataError("n_world must be positive");

  std::vector<int> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) throw DataError("ranks must be positive");
    if (sorted[i] > n_world)
      throw DataError("rank " + std::to_string(sorted[i]) + " exceeds n_world " +
                      std::to_string(n_world));
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw DataError("ranks must be distinct (duplicate " + std::to_string(sorted[i]) + ")");
  }

  RkResult result;
  result.n_entity = static_cast<int>(sorted.size());
  if (sorted.size() > kSlots) sorted.resize(kSlots);
  result.contributing_ranks = sorted;
  result.padded_slots = kSlots - static_cast<int>(sorted.size());

  double log_sum = 0;
  for (int r : sorted) log_sum += std::log(r + kRankShift);
  log_sum += result.padded_slots * std::log(n_world + kRankShift);
  result.value = kScale * std::exp(-log_sum / kSlots);
  result.rendered = render_rk(result.value);
  return result;
}

int top_fraction_count(const std::vector<int>& ranks, const PercentileCutoff& cutoff) {
  return static_cast<int>(
      std::count_if(ranks.begin(), ranks.end(), [&](int r) { return r <= cutoff.cutoff_count; }));
}

std::string render_rk(double value) {
  if (value < 0.20) return "< 0.20";
  // two decimals, half away from zero
  double scaled = static_cast<double>(std::llround(value * 100.0)) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", scaled);
  return buf;
}

}  // namespace rkidx
