#include "rkidx/report.hpp"

#include <cstdio>
#include <ostream>

namespace rkidx {

namespace {

std::string rk_value_text(const AnalysisCell& cell, const ReportOptions& opts) {
  if (!cell.rk) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), opts.precise ? "%.12g" : "%.2f", cell.rk->value);
  return buf;
}

std::string rendered_text(const AnalysisCell& cell) {
  return cell.rk ? cell.rk->rendered : "—";  // em dash for empty cells
}

std::string ratio_text(const RatioEntry& entry) {
  if (!entry.ratio) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *entry.ratio);
  return buf;
}

}  // namespace

void write_table_csv(std::ostream& out, const std::vector<AnalysisCell>& table,
                     const ReportOptions& opts) {
  out << "entity,topic,selector,n,rk_value,rk_rendered,padded_slots\n";
  for (const auto& cell : table) {
    out << cell.entity << ',' << cell.topic << ',' << selector_label(cell.selector) << ','
        << cell.n << ',' << rk_value_text(cell, opts) << ',' << rendered_text(cell) << ','
        << (cell.rk ? std::to_string(cell.rk->padded_slots) : "") << '\n';
  }
}

void write_table_md(std::ostream& out, const std::vector<AnalysisCell>& table,
                    const ReportOptions& opts) {
  out << "| entity | topic | selector | n | rk_value | rk_rendered | padded_slots |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& cell : table) {
    out << "| " << cell.entity << " | " << cell.topic << " | " << selector_label(cell.selector)
        << " | " << cell.n << " | " << rk_value_text(cell, opts) << " | " << rendered_text(cell)
        << " | " << (cell.rk ? std::to_string(cell.rk->padded_slots) : "") << " |\n";
  }
}

void write_thresholds_csv(std::ostream& out, const std::vector<ThresholdEntry>& summary) {
  out << "level,entity,count\n";
  for (const auto& entry : summary) {
    char level[32];
    std::snprintf(level, sizeof(level), "%g", entry.level);
    out << level << ',' << entry.entity << ',' << entry.count << '\n';
  }
}

void write_thresholds_md(std::ostream& out, const std::vector<ThresholdEntry>& summary) {
  out << "| level | entity | count |\n|---|---|---|\n";
  for (const auto& entry : summary) {
    char level[32];
    std::snprintf(level, sizeof(level), "%g", entry.level);
    out << "| " << level << " | " << entry.entity << " | " << entry.count << " |\n";
  }
}

void write_ratios_csv(std::ostream& out, const std::vector<RatioEntry>& ratios) {
  out << "entity,topic,ratio_or_NA\n";
  for (const auto& entry : ratios)
    out << entry.entity << ',' << entry.topic << ',' << ratio_text(entry) << '\n';
}

void write_ratios_md(std::ostream& out, const std::vector<RatioEntry>& ratios) {
  out << "| entity | topic | ratio |\n|---|---|---|\n";
  for (const auto& entry : ratios)
    out << "| " << entry.entity << " | " << entry.topic << " | " << ratio_text(entry) << " |\n";
}

}  // namespace rkidx
