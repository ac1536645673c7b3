#pragma once

#include <string>
#include <vector>

#include "rkidx/ranking.hpp"

namespace rkidx {

// Rk-index: 1000 divided by the geometric mean of (rank + 20) over 10 slots.
// When fewer than 10 ranks are supplied, the missing slots are padded with
// virtual rank n_world. Maximum value 39.47, attained only by ranks 1..10.
struct RkResult {
  double value = 0;
  std::vector<int> contributing_ranks;  // the real ranks used, ascending, up to 10
  int padded_slots = 0;
  int n_entity = 0;  // paper count of the selected subset
  std::string rendered;
};

// ranks must be distinct, positive, and <= n_world. Throws DataError on an
// empty rank set ("no eligible papers") or a rank beyond n_world.
RkResult rk_index(const std::vector<int>& ranks, int n_world);

// How many of the ranks fall at or above the percentile cutoff.
int top_fraction_count(const std::vector<int>& ranks, const PercentileCutoff& cutoff);

// "< 0.20" below 0.20, otherwise two decimals rounded half away from zero.
// Single formatting authority for every report.
std::string render_rk(double value);

}  // namespace rkidx
