#pragma once

#include <iosfwd>
#include <vector>

#include "rkidx/analyses.hpp"

namespace rkidx {

// Report emitters shared by the CLI and tests. Markdown mirrors the CSV values
// exactly; render_rk is the only number formatter unless precise is set, in
// which case rk_value carries full precision for oracle comparisons.
struct ReportOptions {
  bool precise = false;
};

// entity,topic,selector,n,rk_value,rk_rendered,padded_slots
void write_table_csv(std::ostream& out, const std::vector<AnalysisCell>& table,
                     const ReportOptions& opts = {});
void write_table_md(std::ostream& out, const std::vector<AnalysisCell>& table,
                    const ReportOptions& opts = {});

// level,entity,count
void write_thresholds_csv(std::ostream& out, const std::vector<ThresholdEntry>& summary);
void write_thresholds_md(std::ostream& out, const std::vector<ThresholdEntry>& summary);

// entity,topic,ratio_or_NA
void write_ratios_csv(std::ostream& out, const std::vector<RatioEntry>& ratios);
void write_ratios_md(std::ostream& out, const std::vector<RatioEntry>& ratios);

}  // namespace rkidx
