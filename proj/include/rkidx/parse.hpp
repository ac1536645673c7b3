#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "rkidx/types.hpp"

namespace rkidx {

enum class RecordFormat { jsonl, csv };

struct ParseOptions {
  // Year a bare CSV citation total is booked under. A total-only corpus carries
  // no per-year breakdown, so the caller supplies one in-window year for it.
  std::optional<int> total_citation_year;
};

// One record per line/row. Throws DataError with line number on malformed input,
// duplicate ids, empty country sets, or unknown JSONL fields.
std::vector<PublicationRecord> parse_records(std::istream& in, RecordFormat format,
                                             const ParseOptions& opts = {});

struct ParseIssue {
  std::size_t line = 0;
  std::string reason;
};

// Collects per-line problems instead of throwing; bad lines are skipped.
std::vector<PublicationRecord> parse_records_collect(std::istream& in, RecordFormat format,
                                                     const ParseOptions& opts,
                                                     std::vector<ParseIssue>& issues);

// Emits the same JSONL schema parse_records accepts.
void write_records_jsonl(std::ostream& out, const std::vector<PublicationRecord>& records);

}  // namespace rkidx
