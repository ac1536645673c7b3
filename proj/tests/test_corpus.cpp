#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "rkidx/corpus.hpp"
#include "rkidx/parse.hpp"
#include "fixtures.hpp"

using namespace rkidx;

namespace {

PublicationRecord make_record(std::string id, std::string topic = "graphene", int year = 2015,
                              std::set<std::string> countries = {"US"},
                              DocType dt = DocType::article) {
  PublicationRecord rec;
  rec.id = std::move(id);
  rec.topic = std::move(topic);
  rec.year = year;
  rec.countries = std::move(countries);
  rec.citations_by_year[2019] = 1;
  rec.doc_type = dt;
  return rec;
}

}  // namespace

TEST_CASE("parse_records jsonl maps fields directly") {
  std::istringstream in(
      R"({"id":"p1","topic":"graphene","year":2015,"countries":["US"],"citations_by_year":{"2019":3,"2020":1},"doc_type":"article"})"
      "\n");
  auto records = parse_records(in, RecordFormat::jsonl);
  REQUIRE(records.size() == 1);
  CHECK(records[0].id == "p1");
  CHECK(records[0].countries == std::set<std::string>{"US"});
  CHECK(records[0].citations_by_year == std::map<int, long long>{{2019, 3}, {2020, 1}});
  CHECK(records[0].doc_type == DocType::article);
}

TEST_CASE("parse_records rejects duplicate ids naming the id") {
  std::string line =
      R"({"id":"p1","topic":"t","year":2015,"countries":["US"],"citations_by_year":{},"doc_type":"article"})";
  std::istringstream in(line + "\n" + line + "\n");
  CHECK_THROWS_WITH_AS(parse_records(in, RecordFormat::jsonl),
                       doctest::Contains("duplicate id 'p1'"), DataError);
}

TEST_CASE("parse_records rejects unknown jsonl fields") {
  std::istringstream in(
      R"({"id":"p1","topic":"t","year":2015,"countries":["US"],"citations_by_year":{},"doc_type":"article","extra":1})"
      "\n");
  CHECK_THROWS_WITH_AS(parse_records(in, RecordFormat::jsonl), doctest::Contains("unknown field"),
                       DataError);
}

TEST_CASE("parse_records rejects empty country set") {
  std::istringstream in(
      R"({"id":"p1","topic":"t","year":2015,"countries":[],"citations_by_year":{},"doc_type":"article"})"
      "\n");
  CHECK_THROWS_WITH_AS(parse_records(in, RecordFormat::jsonl),
                       doctest::Contains("empty country set"), DataError);
}

TEST_CASE("parse_records malformed line reports line number") {
  std::istringstream in("{\"id\":\n");
  CHECK_THROWS_WITH_AS(parse_records(in, RecordFormat::jsonl), doctest::Contains("line 1"),
                       DataError);
}

TEST_CASE("parse_records csv splits countries on semicolons") {
  std::istringstream in(
      "id,topic,year,countries,citations_total_or_byyear,doc_type\n"
      "p1,graphene,2015,US;CN;DE,2019:3|2020:1,article\n");
  auto records = parse_records(in, RecordFormat::csv);
  REQUIRE(records.size() == 1);
  CHECK(records[0].countries == std::set<std::string>{"US", "CN", "DE"});
  CHECK(records[0].citations_by_year == std::map<int, long long>{{2019, 3}, {2020, 1}});
}

TEST_CASE("parse_records csv bare total maps to configured year") {
  std::istringstream in(
      "id,topic,year,countries,citations_total_or_byyear,doc_type\n"
      "p1,graphene,2015,US,7,article\n");
  ParseOptions opts;
  opts.total_citation_year = 2019;
  auto records = parse_records(in, RecordFormat::csv, opts);
  REQUIRE(records.size() == 1);
  CHECK(records[0].citations_by_year == std::map<int, long long>{{2019, 7}});

  std::istringstream again(
      "id,topic,year,countries,citations_total_or_byyear,doc_type\n"
      "p1,graphene,2015,US,7,article\n");
  CHECK_THROWS_AS(parse_records(again, RecordFormat::csv), DataError);
}

TEST_CASE("window_citations sums in-window years only") {
  PublicationRecord rec = make_record("p1");
  WindowConfig window = fixtures::default_window();

  rec.citations_by_year = {{2018, 50}, {2019, 3}, {2022, 4}};
  CHECK(window_citations(rec, window) == 7);

  rec.citations_by_year = {};
  CHECK(window_citations(rec, window) == 0);

  rec.citations_by_year = {{2019, 1}, {2020, 1}, {2021, 1}, {2022, 1}};
  CHECK(window_citations(rec, window) == 4);
}

TEST_CASE("load drops non-articles with diagnostics") {
  std::vector<PublicationRecord> records = {make_record("a"), make_record("b"),
                                            make_record("c", "graphene", 2015, {"US"},
                                                        DocType::other)};
  Corpus corpus = load(records, fixtures::default_window());
  CHECK(corpus.records.size() == 2);
  CHECK(corpus.diagnostics.filtered_doctype == 1);
}

TEST_CASE("load applies the exclusion list") {
  std::vector<PublicationRecord> records = {make_record("a"), make_record("b")};
  Corpus corpus = load(records, fixtures::default_window(), {}, {"b"});
  CHECK(corpus.records.size() == 1);
  CHECK(corpus.diagnostics.filtered_excluded == 1);
}

TEST_CASE("load applies per-topic window overrides") {
  WindowConfig window = fixtures::default_window();
  window.topic_overrides["cancer"] = {2017, 2017};
  std::vector<PublicationRecord> records = {make_record("a", "cancer", 2015),
                                            make_record("b", "cancer", 2017)};
  Corpus corpus = load(records, window);
  REQUIRE(corpus.records.size() == 1);
  CHECK(corpus.records[0].id == "b");
  CHECK(corpus.diagnostics.filtered_window == 1);
}

TEST_CASE("load validates aggregates") {
  std::vector<PublicationRecord> records = {make_record("a")};
  CHECK_THROWS_AS(load(records, fixtures::default_window(), {{"EU", {"Germany"}}}), DataError);
  CHECK_THROWS_AS(load(records, fixtures::default_window(), {{"EU", {"DE"}}, {"EU", {"FR"}}}),
                  DataError);
  CHECK_THROWS_AS(load(records, fixtures::default_window(), {{"DE", {"DE"}}}), DataError);
  CHECK_THROWS_AS(load(records, fixtures::default_window(), {{"EU", {}}}), DataError);
}

TEST_CASE("record count identity: kept plus dropped equals input") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PublicationRecord> records;
    std::set<std::string> excluded;
    int n = 1 + static_cast<int>(gen() % 50);
    for (int i = 0; i < n; ++i) {
      auto rec = make_record("p" + std::to_string(i), "t", 2013 + static_cast<int>(gen() % 6));
      if (gen() % 5 == 0) rec.doc_type = DocType::other;
      if (gen() % 7 == 0) excluded.insert(rec.id);
      records.push_back(std::move(rec));
    }
    Corpus corpus = load(records, fixtures::default_window(), {}, excluded);
    CHECK(corpus.records.size() + corpus.diagnostics.total() == records.size());
  }
}

TEST_CASE("jsonl round trip preserves the record set") {
  std::mt19937 gen(11);
  std::vector<PublicationRecord> records;
  for (int i = 0; i < 40; ++i) {
    auto rec = make_record("p" + std::to_string(i), i % 2 ? "graphene" : "cancer",
                           2014 + static_cast<int>(gen() % 4));
    rec.citations_by_year = {{2019, static_cast<long long>(gen() % 100)},
                             {2021, static_cast<long long>(gen() % 10)}};
    if (i % 3 == 0) rec.countries = {"US", "CN"};
    records.push_back(std::move(rec));
  }
  std::ostringstream out;
  write_records_jsonl(out, records);
  std::istringstream in(out.str());
  auto reparsed = parse_records(in, RecordFormat::jsonl);
  CHECK(reparsed == records);
}

TEST_CASE("load is idempotent") {
  std::vector<PublicationRecord> records = {make_record("a"), make_record("b", "t", 2012),
                                            make_record("c", "t", 2015, {"US"}, DocType::other)};
  Corpus first = load(records, fixtures::default_window(), {}, {"a"});
  Corpus second = load(first.records, first.window, {}, first.excluded_ids);
  CHECK(second.records == first.records);
  CHECK(second.diagnostics.total() == 0);
}
