#include "rkidx/corpus.hpp"

#include <algorithm>
#include <cctype>

namespace rkidx {

long long window_citations(const PublicationRecord& rec, const WindowConfig& window) {
  long long total = 0;
  for (const auto& [year, count] : rec.citations_by_year) {
    if (window.citation_years.contains(year)) total += count;
  }
  return total;
}

bool is_country_code(const std::string& s) {
  return s.size() == 2 && std::isupper(static_cast<unsigned char>(s[0])) &&
         std::isupper(static_cast<unsigned char>(s[1]));
}

Corpus load(std::vector<PublicationRecord> records, WindowConfig window,
            const std::vector<std::pair<std::string, std::set<std::string>>>& aggregates,
            const std::set<std::string>& excluded_ids) {
  Corpus corpus;
  corpus.window = std::move(window);
  corpus.excluded_ids = excluded_ids;

  if (!corpus.window.publication_years.valid() || !corpus.window.citation_years.valid())
    throw DataError("window: year ranges must be non-empty");

  // Codes actually in use; an aggregate name may look like a code (e.g. "EU")
  // as long as it does not collide with one of these.
  std::set<std::string> used_codes;
  for (const auto& rec : records)
    used_codes.insert(rec.countries.begin(), rec.countries.end());
  for (const auto& [_, members] : aggregates)
    used_codes.insert(members.begin(), members.end());

  for (const auto& [name, members] : aggregates) {
    if (used_codes.contains(name))
      throw DataError("aggregate name '" + name + "' collides with a country code");
    if (members.empty()) throw DataError("aggregate '" + name + "' is empty");
    for (const auto& code : members) {
      if (!is_country_code(code))
        throw DataError("aggregate '" + name + "' references invalid country code '" + code + "'");
    }
    if (!corpus.aggregates.emplace(name, members).second)
      throw DataError("duplicate aggregate name '" + name + "'");
  }

  // Overrides for topics absent from the input are inert rather than fatal so
  // that reloading an already-filtered corpus with the same config is a no-op.
  for (const auto& [topic, range] : corpus.window.topic_overrides) {
    if (!range.valid()) throw DataError("window override for '" + topic + "' is empty");
  }

  for (auto& rec : records) {
    if (rec.doc_type != DocType::article) {
      ++corpus.diagnostics.filtered_doctype;
      continue;
    }
    if (corpus.excluded_ids.contains(rec.id)) {
      ++corpus.diagnostics.filtered_excluded;
      continue;
    }
    if (!corpus.window.publication_window(rec.topic).contains(rec.year)) {
      ++corpus.diagnostics.filtered_window;
      continue;
    }
    corpus.topics.insert(rec.topic);
    corpus.records.push_back(std::move(rec));
  }

  return corpus;
}

}  // namespace rkidx
