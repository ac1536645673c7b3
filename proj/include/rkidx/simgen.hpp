#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rkidx/types.hpp"

namespace rkidx {

// Seeded synthetic corpus parameters. Stands in for proprietary bibliometric
// data; citation counts follow a discretized lognormal so the tail is heavy.
struct SimParams {
  int n_papers = 0;
  std::vector<std::pair<std::string, double>> topic_weights;
  std::vector<std::pair<std::string, double>> country_weights;
  double p_international = 0;   // probability a paper gains extra countries
  double collab_q = 0.5;        // geometric parameter for extra-country count
  int collab_cap = 5;           // at most this many extra countries
  double citation_mu = 1.0;     // lognormal location
  double citation_sigma = 1.0;  // lognormal scale, >= 0
  std::uint64_t seed = 0;
  WindowConfig window{{2014, 2017}, {2019, 2022}, {}};
};

// Reads params from a JSON stream. Throws DataError naming the offending field.
SimParams parse_sim_params(std::istream& in);
void validate(const SimParams& params);

// Deterministic function of (params, seed). Ids are "s000001"... sequential;
// all citations are folded into the first in-window citation year. The random
// draws are hand-rolled over mt19937_64 output so corpora are byte-identical
// across platforms.
Corpus generate(const SimParams& params);

}  // namespace rkidx
