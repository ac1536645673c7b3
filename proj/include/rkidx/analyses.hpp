#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rkidx/metrics.hpp"
#include "rkidx/ranking.hpp"

namespace rkidx {

struct EntitySpec {
  std::string name;
  std::set<std::string> members;  // singleton for a country, e.g. 27 codes for the EU
};

enum class SelectorKind {
  domestic,                 // countries a subset of entity members
  collaborative,            // entity participates alongside at least one outsider
  collaborative_excluding,  // collaborative, and no affiliation from the partner
  entity_all,               // any entity participation
  world_excluding,          // no entity participation
  world_all,                // every paper
};

struct SubsetSelector {
  SelectorKind kind = SelectorKind::domestic;
  std::optional<EntitySpec> partner;  // required iff kind == collaborative_excluding
};

std::string selector_label(const SubsetSelector& sel);

struct AnalysisCell {
  std::string entity;
  std::string topic;
  SubsetSelector selector;
  std::size_t n = 0;
  std::optional<RkResult> rk;  // absent when the selection is empty or errored
  std::string error;           // "no eligible papers" or a propagated message
};

// Eligible paper ids for (topic, entity, selector). Throws UsageError on a
// malformed selector, DataError on an unknown topic.
std::set<std::string> select(const Corpus& corpus, const std::string& topic,
                             const EntitySpec& entity, const SubsetSelector& selector);

// Memoizes one RankedList per topic over an immutable corpus.
class Analyzer {
 public:
  explicit Analyzer(const Corpus& corpus) : corpus_(corpus) {}

  const Corpus& corpus() const { return corpus_; }
  const RankedList& ranked_list(const std::string& topic);

  // Install a pre-built list (used when lists are built in parallel up front).
  void adopt_list(RankedList list);

  AnalysisCell analyze_cell(const std::string& topic, const EntitySpec& entity,
                            const SubsetSelector& selector);

  // (entity, domestic) paired with the complement (world minus entity).
  std::pair<AnalysisCell, AnalysisCell> world_exclusion_compare(const std::string& topic,
                                                                const EntitySpec& entity);

 private:
  const Corpus& corpus_;
  std::map<std::string, RankedList> lists_;
};

enum class ExecMode { serial, parallel };

// One cell per (entity, topic, selector), rows in input entity order.
// Per-cell failures become annotated empty cells; the table never aborts.
// Output is independent of ExecMode and of corpus record order.
std::vector<AnalysisCell> batch_table(const Corpus& corpus, const std::vector<EntitySpec>& entities,
                                      const std::vector<std::string>& topics,
                                      const std::vector<SubsetSelector>& selectors,
                                      ExecMode mode = ExecMode::parallel);

struct ThresholdEntry {
  double level = 0;
  std::string entity;
  int count = 0;  // topics with rk.value strictly above level
};

// Per level: entities sorted by count desc then name asc, zero counts omitted.
std::vector<ThresholdEntry> threshold_summary(const std::vector<AnalysisCell>& table,
                                              const std::vector<double>& levels);

struct RatioEntry {
  std::string entity;
  std::string topic;
  std::optional<double> ratio;  // collaborative over domestic; absent when undefined
};

// Ratio rk(C)/rk(D) per (entity, topic) pair present in the table. Undefined
// when the domestic cell is empty or renders below the 0.20 threshold.
std::vector<RatioEntry> ratio_report(const std::vector<AnalysisCell>& table);

}  // namespace rkidx
