#include "rkidx/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <random>

#include <json.hpp>

#include "rkidx/corpus.hpp"

namespace rkidx {

namespace {

using nlohmann::json;

// Draws built directly on mt19937_64 words; std::*_distribution output is
// implementation-defined, which would break byte-identical corpora.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;  // [0, 1)
  }

  double normal() {
    // Box-Muller; spare value intentionally discarded to keep the stream simple
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Number of failures before first success, success probability q.
  int geometric(double q, int cap) {
    if (q >= 1.0) return 0;
    double u = uniform01();
    int k = static_cast<int>(std::floor(std::log1p(-u) / std::log1p(-q)));
    return std::min(k, cap);
  }

  std::size_t weighted_index(const std::vector<double>& cumulative) {
    double u = uniform01() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
    return std::min(i, cumulative.size() - 1);
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(uniform01() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

std::vector<double> cumulative_weights(const std::vector<std::pair<std::string, double>>& ws) {
  std::vector<double> cum;
  double total = 0;
  for (const auto& [_, w] : ws) cum.push_back(total += w);
  return cum;
}

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw DataError("params." + field + ": " + why);
}

std::vector<std::pair<std::string, double>> parse_weights(const json& obj,
                                                          const std::string& field) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [key, value] : obj.items()) {
    double w = value.get<double>();
    if (!(w > 0)) bad_field(field, "weight for '" + key + "' must be positive");
    out.emplace_back(key, w);
  }
  // json object iteration is insertion-ordered in nlohmann; sort for a stable
  // draw order regardless of file layout
  std::sort(out.begin(), out.end());
  if (out.empty()) bad_field(field, "must be non-empty");
  return out;
}

}  // namespace

SimParams parse_sim_params(std::istream& in) {
  json obj;
  try {
    obj = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid params JSON: ") + e.what());
  }
  SimParams p;
  try {
    p.n_papers = obj.at("n_papers").get<int>();
    p.topic_weights = parse_weights(obj.at("topics"), "topics");
    p.country_weights = parse_weights(obj.at("country_weights"), "country_weights");
    p.p_international = obj.at("p_international").get<double>();
    if (obj.contains("collab_q")) p.collab_q = obj.at("collab_q").get<double>();
    if (obj.contains("collab_cap")) p.collab_cap = obj.at("collab_cap").get<int>();
    p.citation_mu = obj.at("citation_mu").get<double>();
    p.citation_sigma = obj.at("citation_sigma").get<double>();
    p.seed = obj.at("seed").get<std::uint64_t>();
    if (obj.contains("publication_years")) {
      auto arr = obj.at("publication_years");
      p.window.publication_years = {arr.at(0).get<int>(), arr.at(1).get<int>()};
    }
    if (obj.contains("citation_years")) {
      auto arr = obj.at("citation_years");
      p.window.citation_years = {arr.at(0).get<int>(), arr.at(1).get<int>()};
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("params: ") + e.what());
  }
  validate(p);
  return p;
}

void validate(const SimParams& p) {
  if (p.n_papers <= 0) bad_field("n_papers", "must be positive");
  if (p.p_international < 0 || p.p_international > 1)
    bad_field("p_international", "must be in [0, 1]");
  if (!(p.collab_q > 0) || p.collab_q > 1) bad_field("collab_q", "must be in (0, 1]");
  if (p.collab_cap < 0) bad_field("collab_cap", "must be non-negative");
  if (p.citation_sigma < 0) bad_field("citation_sigma", "must be non-negative");
  for (const auto& [code, _] : p.country_weights) {
    if (!is_country_code(code)) bad_field("country_weights", "invalid country code '" + code + "'");
  }
  // a paper needs a primary country plus up to 1 + cap extras
  int max_countries = 2 + p.collab_cap;
  if (p.p_international > 0 && max_countries > static_cast<int>(p.country_weights.size()))
    bad_field("collab_cap", "more distinct countries requested than available");
  if (!p.window.publication_years.valid() || !p.window.citation_years.valid())
    bad_field("window", "year ranges must be non-empty");
}

Corpus generate(const SimParams& params) {
  validate(params);
  Rng rng(params.seed);
  auto topic_cum = cumulative_weights(params.topic_weights);
  auto country_cum = cumulative_weights(params.country_weights);
  const int cite_year = params.window.citation_years.first;

  std::vector<PublicationRecord> records;
  records.reserve(params.n_papers);
  for (int i = 0; i < params.n_papers; ++i) {
    PublicationRecord rec;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%06d", i + 1);
    rec.id = buf;
    rec.topic = params.topic_weights[rng.weighted_index(topic_cum)].first;
    rec.year = rng.uniform_int(params.window.publication_years.first,
                               params.window.publication_years.last);
    rec.countries.insert(params.country_weights[rng.weighted_index(country_cum)].first);
    if (params.p_international > 0 && rng.uniform01() < params.p_international) {
      int extra = 1 + rng.geometric(params.collab_q, params.collab_cap);
      while (static_cast<int>(rec.countries.size()) < 1 + extra) {
        rec.countries.insert(params.country_weights[rng.weighted_index(country_cum)].first);
      }
    }
    double z = params.citation_sigma > 0 ? rng.normal() : 0.0;
    long long cites =
        static_cast<long long>(std::floor(std::exp(params.citation_mu + params.citation_sigma * z)));
    if (cites > 0) rec.citations_by_year[cite_year] = cites;
    rec.doc_type = DocType::article;
    records.push_back(std::move(rec));
  }
  return load(std::move(records), params.window);
}

}  // namespace rkidx
