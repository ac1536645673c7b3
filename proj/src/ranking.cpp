#include "rkidx/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace rkidx {

RankedList build_ranked_list(const Corpus& corpus, const std::string& topic) {
  if (topic.empty()) throw DataError("empty topic");
  if (!corpus.topics.contains(topic)) throw DataError("unknown topic '" + topic + "'");

  RankedList list;
  list.topic = topic;
  for (const auto& rec : corpus.records) {
    if (rec.topic != topic) continue;
    list.entries.push_back({0, rec.id, window_citations(rec, corpus.window), rec.countries});
  }
  std::sort(list.entries.begin(), list.entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.citations != b.citations) return a.citations > b.citations;
    return a.id < b.id;
  });
  int rank = 0;
  for (auto& entry : list.entries) entry.rank = ++rank;
  return list;
}

PercentileCutoff percentile_cutoff(int n_world, double level) {
  if (n_world <= 0) throw DataError("n_world must be positive");
  if (!(level > 0.0) || level > 1.0)
    throw DataError("percentile level must be in (0, 1]");
  int count = static_cast<int>(std::llround(level * n_world));  // half away from zero
  return {level, std::max(count, 1)};
}

std::vector<int> entity_ranks(const RankedList& list, const std::set<std::string>& eligible_ids) {
  std::vector<int> ranks;
  ranks.reserve(eligible_ids.size());
  std::set<std::string> unseen = eligible_ids;
  for (const auto& entry : list.entries) {
    if (unseen.erase(entry.id)) ranks.push_back(entry.rank);
  }
  if (!unseen.empty())
    throw DataError("id '" + *unseen.begin() + "' not in ranked list for topic '" + list.topic +
                    "'");
  // entries are rank-ordered, so ranks are already ascending
  return ranks;
}

void write_ranked_list_csv(std::ostream& out, const RankedList& list) {
  out << "rank,id,citations,countries\n";
  for (const auto& entry : list.entries) {
    out << entry.rank << ',' << entry.id << ',' << entry.citations << ',';
    bool first = true;
    for (const auto& c : entry.countries) {
      if (!first) out << ';';
      out << c;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace rkidx
