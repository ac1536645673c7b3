// Compares the serial and OpenMP table paths on a generated corpus and
// verifies they produce identical output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "rkidx/analyses.hpp"
#include "rkidx/report.hpp"
#include "rkidx/simgen.hpp"

using namespace rkidx;

namespace {

double time_run(ExecMode mode, const Corpus& corpus, const std::vector<EntitySpec>& entities,
                const std::vector<std::string>& topics,
                const std::vector<SubsetSelector>& selectors, std::string& out_csv) {
  auto start = std::chrono::steady_clock::now();
  auto table = batch_table(corpus, entities, topics, selectors, mode);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream out;
  write_table_csv(out, table, {true});
  out_csv = out.str();
  return secs;
}

}  // namespace

int main(int argc, char** argv) {
  int n_papers = argc > 1 ? std::atoi(argv[1]) : 200000;

  SimParams params;
  params.n_papers = n_papers;
  params.topic_weights = {{"t1", 1}, {"t2", 1}, {"t3", 1}, {"t4", 1},
                          {"t5", 1}, {"t6", 1}, {"t7", 1}, {"t8", 1}};
  params.country_weights = {{"US", 5}, {"CN", 4}, {"DE", 2}, {"FR", 2}, {"GB", 2},
                            {"JP", 2}, {"KR", 1}, {"ES", 1}, {"IT", 1}, {"NL", 1}};
  params.p_international = 0.4;
  params.citation_mu = 1.5;
  params.citation_sigma = 1.4;
  params.seed = 1;

  std::printf("generating %d papers...\n", n_papers);
  Corpus corpus = generate(params);

  std::vector<EntitySpec> entities;
  for (const auto& [code, _] : params.country_weights) entities.push_back({code, {code}});
  std::vector<std::string> topics;
  for (const auto& [topic, _] : params.topic_weights) topics.push_back(topic);
  std::vector<SubsetSelector> selectors = {{SelectorKind::domestic, {}},
                                           {SelectorKind::collaborative, {}},
                                           {SelectorKind::entity_all, {}},
                                           {SelectorKind::world_excluding, {}}};

  std::string serial_csv, parallel_csv;
  double serial_s = time_run(ExecMode::serial, corpus, entities, topics, selectors, serial_csv);
  double parallel_s =
      time_run(ExecMode::parallel, corpus, entities, topics, selectors, parallel_csv);

  std::printf("cells: %zu\n", entities.size() * topics.size() * selectors.size());
  std::printf("serial:   %.3f s\n", serial_s);
  std::printf("parallel: %.3f s  (speedup %.2fx)\n", parallel_s, serial_s / parallel_s);
  if (serial_csv != parallel_csv) {
    std::printf("ERROR: serial and parallel outputs differ\n");
    return 1;
  }
  std::printf("outputs identical\n");
  return 0;
}
