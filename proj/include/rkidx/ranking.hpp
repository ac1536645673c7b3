#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "rkidx/types.hpp"

namespace rkidx {

struct RankEntry {
  int rank = 0;  // 1 = most cited
  std::string id;
  long long citations = 0;
  std::set<std::string> countries;

  bool operator==(const RankEntry&) const = default;
};

// Per-topic global ordering by windowed citations, ties broken by ascending id.
// Ranks are ordinal 1..n_world.
struct RankedList {
  std::string topic;
  std::vector<RankEntry> entries;

  int n_world() const { return static_cast<int>(entries.size()); }
  bool operator==(const RankedList&) const = default;
};

struct PercentileCutoff {
  double level = 0;       // fraction in (0,1]
  int cutoff_count = 0;   // nearest-integer(level * n_world), at least 1
};

RankedList build_ranked_list(const Corpus& corpus, const std::string& topic);

// cutoff_count = round-half-away-from-zero(level * n_world), floored at 1.
PercentileCutoff percentile_cutoff(int n_world, double level);

// Global ranks of the eligible papers, ascending. Never re-ranks within the subset.
std::vector<int> entity_ranks(const RankedList& list, const std::set<std::string>& eligible_ids);

// CSV export: rank,id,citations,countries with countries ';'-joined.
void write_ranked_list_csv(std::ostream& out, const RankedList& list);

}  // namespace rkidx
