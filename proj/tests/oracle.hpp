#pragma once

// Brute-force re-computation of analysis cells by the most naive route:
// full re-sort, linear filter, direct product and tenth root. Deliberately
// shares no code with the ranking/metrics/analyses modules it checks.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rkidx/analyses.hpp"
#include "rkidx/types.hpp"

namespace oracle {

struct Result {
  std::size_t n = 0;                   // eligible paper count
  std::optional<double> value;         // absent means "no eligible papers"
  std::vector<int> contributing_ranks; // real ranks used, ascending
};

inline bool oracle_eligible(const rkidx::PublicationRecord& rec, const rkidx::EntitySpec& entity,
                            const rkidx::SubsetSelector& sel) {
  bool any_in = false, any_out = false;
  for (const auto& c : rec.countries) {
    if (entity.members.count(c))
      any_in = true;
    else
      any_out = true;
  }
  bool partner_in = false;
  if (sel.partner) {
    for (const auto& c : rec.countries)
      if (sel.partner->members.count(c)) partner_in = true;
  }
  using K = rkidx::SelectorKind;
  switch (sel.kind) {
    case K::domestic: return !any_out;
    case K::collaborative: return any_in && any_out;
    case K::collaborative_excluding: return any_in && any_out && !partner_in;
    case K::entity_all: return any_in;
    case K::world_excluding: return !any_in;
    case K::world_all: return true;
  }
  return false;
}

inline Result oracle_rk(const rkidx::Corpus& corpus, const std::string& topic,
                        const rkidx::EntitySpec& entity, const rkidx::SubsetSelector& sel) {
  // own windowed-citation sum
  struct Row {
    long long cites;
    std::string id;
    bool eligible;
  };
  std::vector<Row> rows;
  for (const auto& rec : corpus.records) {
    if (rec.topic != topic) continue;
    long long cites = 0;
    for (const auto& [year, count] : rec.citations_by_year) {
      if (year >= corpus.window.citation_years.first && year <= corpus.window.citation_years.last)
        cites += count;
    }
    rows.push_back({cites, rec.id, oracle_eligible(rec, entity, sel)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.cites != b.cites) return a.cites > b.cites;
    return a.id < b.id;
  });

  Result result;
  std::vector<long double> slots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].eligible) continue;
    ++result.n;
    if (slots.size() < 10) {
      int rank = static_cast<int>(i) + 1;
      result.contributing_ranks.push_back(rank);
      slots.push_back(static_cast<long double>(rank) + 20.0L);
    }
  }
  if (result.n == 0) return result;  // no eligible papers
  while (slots.size() < 10) slots.push_back(static_cast<long double>(rows.size()) + 20.0L);

  long double product = 1.0L;
  for (long double s : slots) product *= s;
  result.value = static_cast<double>(1000.0L / std::pow(product, 0.1L));
  return result;
}

}  // namespace oracle
