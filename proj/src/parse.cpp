#include "rkidx/parse.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rkidx {
namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw DataError("line " + std::to_string(line) + ": " + reason);
}

int parse_int(std::string_view s, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    fail(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  return value;
}

long long parse_count(std::string_view s, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
    fail(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

const std::set<std::string> kJsonlFields = {"id",        "topic",
                                            "year",      "countries",
                                            "citations_by_year", "doc_type"};

DocType parse_doc_type(const std::string& s, std::size_t line) {
  if (s == "article") return DocType::article;
  if (s == "other") return DocType::other;
  fail(line, "invalid doc_type '" + s + "'");
}

PublicationRecord parse_jsonl_line(const std::string& text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(line, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) fail(line, "expected a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!kJsonlFields.contains(key)) fail(line, "unknown field '" + key + "'");
  }
  for (const auto& field : kJsonlFields) {
    if (!obj.contains(field)) fail(line, "missing field '" + field + "'");
  }

  PublicationRecord rec;
  try {
    rec.id = obj.at("id").get<std::string>();
    rec.topic = obj.at("topic").get<std::string>();
    rec.year = obj.at("year").get<int>();
    for (const auto& c : obj.at("countries")) rec.countries.insert(c.get<std::string>());
    for (const auto& [year_str, count] : obj.at("citations_by_year").items()) {
      int year = parse_int(year_str, line, "citation year");
      long long n = count.get<long long>();
      if (n < 0) fail(line, "negative citation count for year " + year_str);
      rec.citations_by_year[year] = n;
    }
    rec.doc_type = parse_doc_type(obj.at("doc_type").get<std::string>(), line);
  } catch (const json::exception& e) {
    fail(line, std::string("bad field type: ") + e.what());
  }
  if (rec.id.empty()) fail(line, "empty id");
  if (rec.countries.empty()) fail(line, "empty country set for id '" + rec.id + "'");
  return rec;
}

// header: id,topic,year,countries,citations_total_or_byyear,doc_type
constexpr std::string_view kCsvHeader = "id,topic,year,countries,citations_total_or_byyear,doc_type";

PublicationRecord parse_csv_line(const std::string& text, std::size_t line,
                                 const ParseOptions& opts) {
  auto cells = split(text, ',');
  if (cells.size() != 6)
    fail(line, "expected 6 columns, got " + std::to_string(cells.size()));

  PublicationRecord rec;
  rec.id = std::string(cells[0]);
  rec.topic = std::string(cells[1]);
  rec.year = parse_int(cells[2], line, "year");
  for (auto part : split(cells[3], ';')) {
    if (!part.empty()) rec.countries.insert(std::string(part));
  }
  std::string_view cites = cells[4];
  if (!cites.empty()) {
    if (cites.find(':') != std::string_view::npos) {
      // "2019:3|2020:1"
      for (auto pair : split(cites, '|')) {
        auto kv = split(pair, ':');
        if (kv.size() != 2) fail(line, "invalid citations cell '" + std::string(cites) + "'");
        int year = parse_int(kv[0], line, "citation year");
        rec.citations_by_year[year] = parse_count(kv[1], line, "citation count");
      }
    } else {
      if (!opts.total_citation_year)
        fail(line, "bare citation total needs a configured total year (use year:count pairs)");
      long long total = parse_count(cites, line, "citation total");
      if (total > 0) rec.citations_by_year[*opts.total_citation_year] = total;
    }
  }
  rec.doc_type = parse_doc_type(std::string(cells[5]), line);
  if (rec.id.empty()) fail(line, "empty id");
  if (rec.countries.empty()) fail(line, "empty country set for id '" + rec.id + "'");
  return rec;
}

}  // namespace

std::vector<PublicationRecord> parse_records_collect(std::istream& in, RecordFormat format,
                                                     const ParseOptions& opts,
                                                     std::vector<ParseIssue>& issues) {
  std::vector<PublicationRecord> records;
  std::set<std::string> seen;
  std::string text;
  std::size_t line = 0;
  bool header_done = false;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (format == RecordFormat::csv && !header_done) {
      header_done = true;
      if (text != kCsvHeader) {
        issues.push_back({line, "bad CSV header, expected '" + std::string(kCsvHeader) + "'"});
        return records;
      }
      continue;
    }
    if (text.empty()) continue;
    try {
      PublicationRecord rec = format == RecordFormat::jsonl ? parse_jsonl_line(text, line)
                                                            : parse_csv_line(text, line, opts);
      if (!seen.insert(rec.id).second) fail(line, "duplicate id '" + rec.id + "'");
      records.push_back(std::move(rec));
    } catch (const DataError& e) {
      issues.push_back({line, e.what()});
    }
  }
  return records;
}

std::vector<PublicationRecord> parse_records(std::istream& in, RecordFormat format,
                                             const ParseOptions& opts) {
  std::vector<ParseIssue> issues;
  auto records = parse_records_collect(in, format, opts, issues);
  if (!issues.empty()) throw DataError(issues.front().reason);
  return records;
}

void write_records_jsonl(std::ostream& out, const std::vector<PublicationRecord>& records) {
  for (const auto& rec : records) {
    json obj;
    obj["id"] = rec.id;
    obj["topic"] = rec.topic;
    obj["year"] = rec.year;
    obj["countries"] = rec.countries;
    json cites = json::object();
    for (const auto& [year, count] : rec.citations_by_year)
      cites[std::to_string(year)] = count;
    obj["citations_by_year"] = cites;
    obj["doc_type"] = rec.doc_type == DocType::article ? "article" : "other";
    out << obj.dump() << '\n';
  }
}

}  // namespace rkidx
