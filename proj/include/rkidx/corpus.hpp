#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rkidx/types.hpp"

namespace rkidx {

// Filters parsed records into an immutable analysis corpus:
// drops non-articles, excluded ids, and records outside the (per-topic)
// publication window, counting each drop cause.
// Aggregates are validated here: names must be unique, must not look like
// country codes, and every member must be a syntactically valid code.
Corpus load(std::vector<PublicationRecord> records, WindowConfig window,
            const std::vector<std::pair<std::string, std::set<std::string>>>& aggregates = {},
            const std::set<std::string>& excluded_ids = {});

}  // namespace rkidx
