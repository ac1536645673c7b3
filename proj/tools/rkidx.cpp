#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rkidx/analyses.hpp"
#include "rkidx/corpus.hpp"
#include "rkidx/parse.hpp"
#include "rkidx/report.hpp"
#include "rkidx/simgen.hpp"

namespace fs = std::filesystem;
using namespace rkidx;

namespace {

struct SharedOpts {
  std::string corpus_path;
  std::string format = "jsonl";
  std::string window = "2014-2017";
  std::string citation_window = "2019-2022";
  std::vector<std::string> topic_windows;
  std::string aggregates_path;
  std::string exclusions_path;
  std::vector<std::string> entities;
  std::vector<std::string> topics;
  std::vector<std::string> selectors = {"domestic"};
  std::vector<double> levels = {5, 15, 25};
  std::string out_dir = ".";
  std::string emit = "csv,md";
  bool precise = false;
};

YearRange parse_range(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos)
    throw UsageError("expected year range Y1-Y2, got '" + s + "'");
  YearRange r{std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
  if (!r.valid()) throw UsageError("empty year range '" + s + "'");
  return r;
}

WindowConfig build_window(const SharedOpts& opts) {
  WindowConfig window;
  window.publication_years = parse_range(opts.window);
  window.citation_years = parse_range(opts.citation_window);
  for (const auto& spec : opts.topic_windows) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw UsageError("expected TOPIC=Y1-Y2, got '" + spec + "'");
    window.topic_overrides[spec.substr(0, eq)] = parse_range(spec.substr(eq + 1));
  }
  return window;
}

std::vector<std::pair<std::string, std::set<std::string>>> read_aggregates(
    const std::string& path) {
  std::vector<std::pair<std::string, std::set<std::string>>> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw DataError("cannot open aggregates file '" + path + "'");
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("aggregates file: " + std::string(e.what()));
  }
  for (const auto& [name, codes] : obj.items()) {
    std::set<std::string> members;
    for (const auto& c : codes) members.insert(c.get<std::string>());
    out.emplace_back(name, members);
  }
  return out;
}

std::set<std::string> read_exclusions(const std::string& path) {
  std::set<std::string> ids;
  if (path.empty()) return ids;
  std::ifstream in(path);
  if (!in) throw DataError("cannot open exclusion file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) ids.insert(line);
  }
  return ids;
}

Corpus load_corpus(const SharedOpts& opts) {
  if (opts.corpus_path.empty()) throw UsageError("--corpus is required");
  std::ifstream in(opts.corpus_path);
  if (!in) throw DataError("cannot open corpus file '" + opts.corpus_path + "'");
  RecordFormat format;
  if (opts.format == "jsonl")
    format = RecordFormat::jsonl;
  else if (opts.format == "csv")
    format = RecordFormat::csv;
  else
    throw UsageError("--format must be jsonl or csv");
  WindowConfig window = build_window(opts);
  ParseOptions popts;
  popts.total_citation_year = window.citation_years.first;
  auto records = parse_records(in, format, popts);
  return load(std::move(records), window, read_aggregates(opts.aggregates_path),
              read_exclusions(opts.exclusions_path));
}

EntitySpec resolve_entity(const Corpus& corpus, const std::string& name) {
  if (auto it = corpus.aggregates.find(name); it != corpus.aggregates.end())
    return {name, it->second};
  if (is_country_code(name)) return {name, {name}};
  throw DataError("unknown entity '" + name + "' (not a country code or defined aggregate)");
}

SubsetSelector resolve_selector(const Corpus& corpus, const std::string& token) {
  if (token == "domestic" || token == "D") return {SelectorKind::domestic, std::nullopt};
  if (token == "collaborative" || token == "C") return {SelectorKind::collaborative, std::nullopt};
  if (token == "entity_all") return {SelectorKind::entity_all, std::nullopt};
  if (token == "world_excluding") return {SelectorKind::world_excluding, std::nullopt};
  if (token == "world_all") return {SelectorKind::world_all, std::nullopt};
  const std::string prefix = "collaborative_excluding:";
  if (token.rfind(prefix, 0) == 0)
    return {SelectorKind::collaborative_excluding, resolve_entity(corpus, token.substr(prefix.size()))};
  throw UsageError("unknown selector '" + token + "'");
}

std::vector<std::string> resolve_topics(const Corpus& corpus, const std::vector<std::string>& req) {
  if (!req.empty()) {
    for (const auto& t : req)
      if (!corpus.topics.contains(t)) throw DataError("unknown topic '" + t + "'");
    return req;
  }
  return {corpus.topics.begin(), corpus.topics.end()};
}

void write_reports(const SharedOpts& opts, const std::string& stem,
                   const std::function<void(std::ostream&, bool /*md*/)>& emit_fn) {
  bool want_csv = opts.emit.find("csv") != std::string::npos;
  bool want_md = opts.emit.find("md") != std::string::npos;
  if (!want_csv && !want_md) throw UsageError("--emit must include csv and/or md");
  fs::create_directories(opts.out_dir);
  if (want_csv) {
    std::ofstream out(fs::path(opts.out_dir) / (stem + ".csv"), std::ios::binary);
    emit_fn(out, false);
    std::cout << "wrote " << (fs::path(opts.out_dir) / (stem + ".csv")).string() << "\n";
  }
  if (want_md) {
    std::ofstream out(fs::path(opts.out_dir) / (stem + ".md"), std::ios::binary);
    emit_fn(out, true);
    std::cout << "wrote " << (fs::path(opts.out_dir) / (stem + ".md")).string() << "\n";
  }
}

int cmd_validate(const SharedOpts& opts) {
  if (opts.corpus_path.empty()) throw UsageError("--corpus is required");
  std::ifstream in(opts.corpus_path);
  if (!in) throw DataError("cannot open corpus file '" + opts.corpus_path + "'");
  RecordFormat format = opts.format == "csv" ? RecordFormat::csv : RecordFormat::jsonl;
  WindowConfig window = build_window(opts);
  ParseOptions popts;
  popts.total_citation_year = window.citation_years.first;
  std::vector<ParseIssue> issues;
  auto records = parse_records_collect(in, format, popts, issues);

  Corpus corpus = load(std::move(records), window, read_aggregates(opts.aggregates_path),
                       read_exclusions(opts.exclusions_path));
  std::cout << "records: " << corpus.records.size()
            << ", dropped: " << corpus.diagnostics.total() << "\n";
  std::cout << "  filtered_doctype: " << corpus.diagnostics.filtered_doctype << "\n";
  std::cout << "  filtered_excluded: " << corpus.diagnostics.filtered_excluded << "\n";
  std::cout << "  filtered_window: " << corpus.diagnostics.filtered_window << "\n";
  std::cout << "window: " << window.publication_years.first << "-"
            << window.publication_years.last << " (citations "
            << window.citation_years.first << "-" << window.citation_years.last << ")\n";
  for (const auto& [topic, range] : window.topic_overrides)
    std::cout << "  " << topic << ": " << range.first << "-" << range.last << "\n";
  std::cout << "topics:";
  for (const auto& t : corpus.topics) std::cout << " " << t;
  std::cout << "\n";
  if (!issues.empty()) {
    std::size_t shown = std::min<std::size_t>(issues.size(), 20);
    std::cerr << "errors (" << issues.size() << " total, showing " << shown << "):\n";
    for (std::size_t i = 0; i < shown; ++i) std::cerr << "  " << issues[i].reason << "\n";
    return 1;
  }
  return 0;
}

int cmd_table(const SharedOpts& opts) {
  if (opts.entities.empty()) throw UsageError("--entities is required");
  Corpus corpus = load_corpus(opts);
  std::vector<EntitySpec> entities;
  for (const auto& name : opts.entities) entities.push_back(resolve_entity(corpus, name));
  auto topics = resolve_topics(corpus, opts.topics);
  std::vector<SubsetSelector> selectors;
  for (const auto& tok : opts.selectors) selectors.push_back(resolve_selector(corpus, tok));

  auto table = batch_table(corpus, entities, topics, selectors);
  ReportOptions ropts{opts.precise};
  write_reports(opts, "table", [&](std::ostream& out, bool md) {
    md ? write_table_md(out, table, ropts) : write_table_csv(out, table, ropts);
  });

  bool has_d = false, has_c = false;
  for (const auto& s : selectors) {
    has_d |= s.kind == SelectorKind::domestic;
    has_c |= s.kind == SelectorKind::collaborative;
  }
  if (has_d && has_c) {
    auto ratios = ratio_report(table);
    write_reports(opts, "ratios", [&](std::ostream& out, bool md) {
      md ? write_ratios_md(out, ratios) : write_ratios_csv(out, ratios);
    });
  }
  return 0;
}

int cmd_thresholds(const SharedOpts& opts) {
  if (opts.entities.empty()) throw UsageError("--entities is required");
  Corpus corpus = load_corpus(opts);
  std::vector<EntitySpec> entities;
  for (const auto& name : opts.entities) entities.push_back(resolve_entity(corpus, name));
  auto topics = resolve_topics(corpus, opts.topics);
  std::vector<SubsetSelector> selectors;
  for (const auto& tok : opts.selectors) selectors.push_back(resolve_selector(corpus, tok));

  auto table = batch_table(corpus, entities, topics, selectors);
  auto summary = threshold_summary(table, opts.levels);
  write_reports(opts, "thresholds", [&](std::ostream& out, bool md) {
    md ? write_thresholds_md(out, summary) : write_thresholds_csv(out, summary);
  });
  return 0;
}

int cmd_counterfactual(const SharedOpts& opts, const std::string& entity_name,
                       const std::string& partner_name) {
  Corpus corpus = load_corpus(opts);
  EntitySpec entity = resolve_entity(corpus, entity_name);
  auto topics = resolve_topics(corpus, opts.topics);
  Analyzer analyzer(corpus);

  std::vector<AnalysisCell> table;
  if (!partner_name.empty()) {
    if (partner_name == entity_name) throw UsageError("partner must differ from entity");
    EntitySpec partner = resolve_entity(corpus, partner_name);
    for (const auto& topic : topics) {
      table.push_back(analyzer.analyze_cell(topic, entity, {SelectorKind::collaborative, {}}));
      table.push_back(
          analyzer.analyze_cell(topic, entity, {SelectorKind::collaborative_excluding, partner}));
    }
  } else {
    for (const auto& topic : topics) {
      auto [domestic, excluded] = analyzer.world_exclusion_compare(topic, entity);
      table.push_back(std::move(domestic));
      table.push_back(std::move(excluded));
      table.push_back(analyzer.analyze_cell(topic, entity, {SelectorKind::world_all, {}}));
    }
  }
  ReportOptions ropts{opts.precise};
  write_reports(opts, "counterfactual", [&](std::ostream& out, bool md) {
    md ? write_table_md(out, table, ropts) : write_table_csv(out, table, ropts);
  });
  return 0;
}

int cmd_simulate(const std::string& params_path, const std::string& out_path) {
  std::ifstream in(params_path);
  if (!in) throw DataError("cannot open params file '" + params_path + "'");
  SimParams params = parse_sim_params(in);
  Corpus corpus = generate(params);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus file '" + out_path + "'");
  write_records_jsonl(out, corpus.records);
  std::cout << "seed: " << params.seed << "\n";
  std::cout << "records: " << corpus.records.size() << "\n";
  std::cout << "topics: " << corpus.topics.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rk-index rank analysis over publication-citation corpora"};
  app.require_subcommand(1);
  SharedOpts opts;

  auto add_shared = [&](CLI::App* cmd, bool needs_corpus) {
    if (needs_corpus) cmd->add_option("--corpus", opts.corpus_path, "corpus file");
    cmd->add_option("--format", opts.format, "jsonl|csv");
    cmd->add_option("--window", opts.window, "publication window Y1-Y2");
    cmd->add_option("--citation-window", opts.citation_window, "citation window Y1-Y2");
    cmd->add_option("--topic-window", opts.topic_windows, "per-topic override TOPIC=Y1-Y2");
    cmd->add_option("--aggregates", opts.aggregates_path, "JSON map name -> [codes]");
    cmd->add_option("--exclude-ids", opts.exclusions_path, "one id per line");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--emit", opts.emit, "csv,md subset");
    cmd->add_flag("--precise", opts.precise, "full-precision rk_value column");
  };

  auto* validate = app.add_subcommand("validate", "check a corpus file and report diagnostics");
  add_shared(validate, true);

  auto* table = app.add_subcommand("table", "publication counts and Rk-indices per cell");
  add_shared(table, true);
  table->add_option("--entities", opts.entities, "country codes or aggregate names")->delimiter(',');
  table->add_option("--topics", opts.topics, "topics (default: all)")->delimiter(',');
  table->add_option("--selectors", opts.selectors, "selector kinds")->delimiter(',');

  auto* thresholds = app.add_subcommand("thresholds", "topics-above-threshold summary");
  add_shared(thresholds, true);
  thresholds->add_option("--entities", opts.entities)->delimiter(',');
  thresholds->add_option("--topics", opts.topics)->delimiter(',');
  thresholds->add_option("--selectors", opts.selectors)->delimiter(',');
  thresholds->add_option("--levels", opts.levels, "ascending Rk thresholds")->delimiter(',');

  std::string cf_entity, cf_partner;
  auto* counterfactual =
      app.add_subcommand("counterfactual", "partner-exclusion or world-exclusion comparison");
  add_shared(counterfactual, true);
  counterfactual->add_option("--entity", cf_entity, "entity under study")->required();
  counterfactual->add_option("--partner", cf_partner, "partner to exclude (collaboration-exclusion mode)");
  counterfactual->add_option("--topics", opts.topics)->delimiter(',');

  std::string params_path, sim_out;
  auto* simulate = app.add_subcommand("simulate", "generate a seeded synthetic corpus");
  simulate->add_option("--params", params_path, "params JSON file")->required();
  simulate->add_option("--out-corpus", sim_out, "output JSONL path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts);
    if (table->parsed()) return cmd_table(opts);
    if (thresholds->parsed()) return cmd_thresholds(opts);
    if (counterfactual->parsed()) return cmd_counterfactual(opts, cf_entity, cf_partner);
    if (simulate->parsed()) return cmd_simulate(params_path, sim_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
