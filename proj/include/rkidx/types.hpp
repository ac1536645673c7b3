#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rkidx {

// Data-level failure (bad input file, unknown topic, ...). CLI maps this to exit 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse (bad flag combination, malformed selector, ...). CLI maps this to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocType { article, other };

struct PublicationRecord {
  std::string id;
  std::string topic;
  int year = 0;
  std::set<std::string> countries;           // ISO 3166-1 alpha-2 codes
  std::map<int, long long> citations_by_year;
  DocType doc_type = DocType::article;

  bool operator==(const PublicationRecord&) const = default;
};

struct YearRange {
  int first = 0;
  int last = 0;

  bool contains(int y) const { return y >= first && y <= last; }
  bool valid() const { return first <= last; }
  bool operator==(const YearRange&) const = default;
};

struct WindowConfig {
  YearRange publication_years;
  YearRange citation_years;
  std::map<std::string, YearRange> topic_overrides;  // per-topic publication window

  const YearRange& publication_window(const std::string& topic) const {
    auto it = topic_overrides.find(topic);
    return it != topic_overrides.end() ? it->second : publication_years;
  }
  bool operator==(const WindowConfig&) const = default;
};

struct LoadDiagnostics {
  std::size_t filtered_doctype = 0;
  std::size_t filtered_excluded = 0;
  std::size_t filtered_window = 0;

  std::size_t total() const { return filtered_doctype + filtered_excluded + filtered_window; }
  bool operator==(const LoadDiagnostics&) const = default;
};

struct Corpus {
  std::vector<PublicationRecord> records;
  std::set<std::string> topics;
  WindowConfig window;
  std::map<std::string, std::set<std::string>> aggregates;
  std::set<std::string> excluded_ids;
  LoadDiagnostics diagnostics;
};

// Sum of citations over the citation window; years outside contribute 0.
long long window_citations(const PublicationRecord& rec, const WindowConfig& window);

// Two uppercase ASCII letters.
bool is_country_code(const std::string& s);

}  // namespace rkidx
