#include "rkidx/analyses.hpp"

#include <algorithm>

#ifdef RKIDX_HAVE_OPENMP
#include <omp.h>
#endif

namespace rkidx {

namespace {

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b)
      ++it_a;
    else if (*it_b < *it_a)
      ++it_b;
    else
      return true;
  }
  return false;
}

void check_selector(const EntitySpec& entity, const SubsetSelector& selector) {
  if (entity.members.empty()) throw UsageError("entity '" + entity.name + "' has no members");
  bool needs_partner = selector.kind == SelectorKind::collaborative_excluding;
  if (needs_partner != selector.partner.has_value())
    throw UsageError(needs_partner ? "selector collaborative_excluding requires a partner"
                                   : "selector does not take a partner");
  if (selector.partner) {
    if (selector.partner->members.empty())
      throw UsageError("partner '" + selector.partner->name + "' has no members");
    if (intersects(selector.partner->members, entity.members))
      throw UsageError("partner '" + selector.partner->name + "' overlaps entity '" + entity.name +
                       "'");
  }
}

bool eligible(const PublicationRecord& rec, const EntitySpec& entity,
              const SubsetSelector& selector) {
  const auto& c = rec.countries;
  switch (selector.kind) {
    case SelectorKind::domestic:
      return subset_of(c, entity.members);
    case SelectorKind::collaborative:
      return intersects(c, entity.members) && !subset_of(c, entity.members);
    case SelectorKind::collaborative_excluding:
      return intersects(c, entity.members) && !subset_of(c, entity.members) &&
             !intersects(c, selector.partner->members);
    case SelectorKind::entity_all:
      return intersects(c, entity.members);
    case SelectorKind::world_excluding:
      return !intersects(c, entity.members);
    case SelectorKind::world_all:
      return true;
  }
  return false;
}

}  // namespace

std::string selector_label(const SubsetSelector& sel) {
  switch (sel.kind) {
    case SelectorKind::domestic: return "domestic";
    case SelectorKind::collaborative: return "collaborative";
    case SelectorKind::collaborative_excluding:
      return "collaborative_excluding:" + (sel.partner ? sel.partner->name : std::string("?"));
    case SelectorKind::entity_all: return "entity_all";
    case SelectorKind::world_excluding: return "world_excluding";
    case SelectorKind::world_all: return "world_all";
  }
  return "?";
}

std::set<std::string> select(const Corpus& corpus, const std::string& topic,
                             const EntitySpec& entity, const SubsetSelector& selector) {
  if (!corpus.topics.contains(topic)) throw DataError("unknown topic '" + topic + "'");
  check_selector(entity, selector);
  std::set<std::string> ids;
  for (const auto& rec : corpus.records) {
    if (rec.topic == topic && eligible(rec, entity, selector)) ids.insert(rec.id);
  }
  return ids;
}

void Analyzer::adopt_list(RankedList list) {
  std::string topic = list.topic;
  lists_.insert_or_assign(std::move(topic), std::move(list));
}

const RankedList& Analyzer::ranked_list(const std::string& topic) {
  auto it = lists_.find(topic);
  if (it == lists_.end())
    it = lists_.emplace(topic, build_ranked_list(corpus_, topic)).first;
  return it->second;
}

AnalysisCell Analyzer::analyze_cell(const std::string& topic, const EntitySpec& entity,
                                    const SubsetSelector& selector) {
  AnalysisCell cell{entity.name, topic, selector, 0, std::nullopt, ""};
  auto ids = select(corpus_, topic, entity, selector);
  cell.n = ids.size();
  if (ids.empty()) {
    cell.error = "no eligible papers";
    return cell;
  }
  const RankedList& list = ranked_list(topic);
  cell.rk = rk_index(entity_ranks(list, ids), list.n_world());
  cell.rk->n_entity = static_cast<int>(ids.size());
  return cell;
}

std::pair<AnalysisCell, AnalysisCell> Analyzer::world_exclusion_compare(const std::string& topic,
                                                                        const EntitySpec& entity) {
  return {analyze_cell(topic, entity, {SelectorKind::domestic, std::nullopt}),
          analyze_cell(topic, entity, {SelectorKind::world_excluding, std::nullopt})};
}

std::vector<AnalysisCell> batch_table(const Corpus& corpus, const std::vector<EntitySpec>& entities,
                                      const std::vector<std::string>& topics,
                                      const std::vector<SubsetSelector>& selectors,
                                      ExecMode mode) {
  if (entities.empty() || topics.empty() || selectors.empty())
    throw UsageError("batch_table needs non-empty entities, topics, and selectors");

  // Ranked lists are memoized per topic; build them up front (parallel across
  // topics) so the per-cell loop reads them without synchronization.
  Analyzer analyzer(corpus);
  std::vector<std::string> known;
  for (const auto& t : topics)
    if (corpus.topics.contains(t)) known.push_back(t);
#ifdef RKIDX_HAVE_OPENMP
  if (mode == ExecMode::parallel) {
    std::vector<RankedList> built(known.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < known.size(); ++i)
      built[i] = build_ranked_list(corpus, known[i]);
    for (std::size_t i = 0; i < known.size(); ++i) analyzer.adopt_list(std::move(built[i]));
  } else {
    for (const auto& t : known) analyzer.ranked_list(t);
  }
#else
  (void)mode;
  for (const auto& t : known) analyzer.ranked_list(t);
#endif

  const std::size_t n_cells = entities.size() * topics.size() * selectors.size();
  std::vector<AnalysisCell> table(n_cells);
  auto compute = [&](std::size_t idx) {
    std::size_t e = idx / (topics.size() * selectors.size());
    std::size_t rest = idx % (topics.size() * selectors.size());
    std::size_t t = rest / selectors.size();
    std::size_t s = rest % selectors.size();
    AnalysisCell cell{entities[e].name, topics[t], selectors[s], 0, std::nullopt, ""};
    try {
      cell = analyzer.analyze_cell(topics[t], entities[e], selectors[s]);
    } catch (const std::exception& e_) {
      cell.error = e_.what();
    }
    table[idx] = std::move(cell);
  };

#ifdef RKIDX_HAVE_OPENMP
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t idx = 0; idx < n_cells; ++idx) compute(idx);
    return table;
  }
#endif
  for (std::size_t idx = 0; idx < n_cells; ++idx) compute(idx);
  return table;
}

std::vector<ThresholdEntry> threshold_summary(const std::vector<AnalysisCell>& table,
                                              const std::vector<double>& levels) {
  if (levels.empty()) throw UsageError("levels must be non-empty");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i - 1] < levels[i])) throw UsageError("levels must be strictly ascending");

  std::vector<ThresholdEntry> out;
  for (double level : levels) {
    std::map<std::string, int> counts;
    for (const auto& cell : table) {
      if (cell.rk && cell.rk->value > level) ++counts[cell.entity];
    }
    std::vector<ThresholdEntry> block;
    for (const auto& [entity, count] : counts) block.push_back({level, entity, count});
    std::sort(block.begin(), block.end(), [](const ThresholdEntry& a, const ThresholdEntry& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.entity < b.entity;
    });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<RatioEntry> ratio_report(const std::vector<AnalysisCell>& table) {
  std::map<std::pair<std::string, std::string>, const AnalysisCell*> domestic, collab;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& cell : table) {
    auto key = std::make_pair(cell.entity, cell.topic);
    if (cell.selector.kind == SelectorKind::domestic) {
      domestic.emplace(key, &cell);
    } else if (cell.selector.kind == SelectorKind::collaborative) {
      collab.emplace(key, &cell);
    } else {
      continue;
    }
    if (domestic.contains(key) && collab.contains(key) &&
        std::find(order.begin(), order.end(), key) == order.end())
      order.push_back(key);
  }

  std::vector<RatioEntry> out;
  for (const auto& key : order) {
    const AnalysisCell* d = domestic.at(key);
    const AnalysisCell* c = collab.at(key);
    RatioEntry entry{key.first, key.second, std::nullopt};
    // undefined when domestic is empty or below the rendering threshold;
    // flagged, never fabricated
    if (d->rk && c->rk && d->rk->value >= 0.20)
      entry.ratio = c->rk->value / d->rk->value;
    out.push_back(entry);
  }
  return out;
}

}  // namespace rkidx
