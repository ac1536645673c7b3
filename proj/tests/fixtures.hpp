#pragma once

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rkidx/corpus.hpp"
#include "rkidx/types.hpp"

namespace fixtures {

inline bool within(double value, double expected, double tol) {
  return std::abs(value - expected) <= tol;
}

inline rkidx::WindowConfig default_window() {
  return {{2014, 2017}, {2019, 2022}, {}};
}

// A corpus with one topic where paper at global rank r receives n_world - r + 1
// citations (all distinct, so ranks are forced). Chosen ranks get the given id
// and country set; filler papers are single-country "ZZ".
inline rkidx::Corpus make_rank_fixture(
    int n_world,
    const std::map<int, std::pair<std::string, std::set<std::string>>>& special,
    const std::string& topic = "solar",
    const std::vector<std::pair<std::string, std::set<std::string>>>& aggregates = {}) {
  std::vector<rkidx::PublicationRecord> records;
  records.reserve(n_world);
  for (int r = 1; r <= n_world; ++r) {
    rkidx::PublicationRecord rec;
    auto it = special.find(r);
    if (it != special.end()) {
      rec.id = it->second.first;
      rec.countries = it->second.second;
    } else {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "f%06d", r);
      rec.id = buf;
      rec.countries = {"ZZ"};
    }
    rec.topic = topic;
    rec.year = 2015;
    rec.citations_by_year[2019] = n_world - r + 1;
    rec.doc_type = rkidx::DocType::article;
    records.push_back(std::move(rec));
  }
  return rkidx::load(std::move(records), default_window(), aggregates);
}

// Solar cells/photovoltaics worked example: the ten most cited domestic papers
// of each of the three entities sit at these global ranks.
inline const std::vector<int> kUsaRanks = {4, 8, 9, 15, 24, 27, 29, 31, 32, 36};
inline const std::vector<int> kChinaRanks = {10, 18, 19, 22, 77, 97, 106, 108, 109, 132};
inline const std::vector<int> kEuRanks = {46, 48, 95, 118, 121, 133, 141, 167, 203, 209};

inline rkidx::Corpus make_golden_fixture(int n_world = 61699) {
  std::map<int, std::pair<std::string, std::set<std::string>>> special;
  int i = 0;
  for (int r : kUsaRanks) special[r] = {"us" + std::to_string(++i), {"US"}};
  i = 0;
  for (int r : kChinaRanks) special[r] = {"cn" + std::to_string(++i), {"CN"}};
  i = 0;
  for (int r : kEuRanks) special[r] = {"eu" + std::to_string(++i), {"DE"}};
  return make_rank_fixture(n_world, special, "solar",
                           {{"EU", {"DE", "FR", "ES", "IT", "NL", "SE"}}});
}

}  // namespace fixtures
