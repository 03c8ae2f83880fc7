#include <algorithm>
#include <cstdio>
#include <string>

#include "rsvplan/experiments/csv.hpp"

namespace rsvplan::experiments {

namespace {

std::string six(double v) {
  if (v == 0.0) v = 0.0;  // never print -0.000000
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void banner(std::string& out, const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) out += "# " + line + "\n";
}

}  // namespace

std::string to_csv(const SweepSeries& series) {
  std::string out;
  banner(out, series.metadata);
  out += series.grid_label + ",stage1,stage2_expected,total";
  for (const auto& label : series.extra_labels) out += "," + label;
  out += "\n";
  for (const auto& p : series.points) {
    out += six(p.grid) + "," + six(p.stage1) + "," + six(p.stage2_expected) +
           "," + six(p.total);
    for (double e : p.extras) out += "," + six(e);
    out += "\n";
  }
  return out;
}

std::string to_csv(const CompareSeries& series) {
  std::string out;
  banner(out, series.metadata);
  std::string seed_line = "seeds=";
  for (std::size_t i = 0; i < series.seeds.size(); ++i)
    seed_line += (i ? "," : "") + std::to_string(series.seeds[i]);
  out += "# " + seed_line + "\n";
  out += "multiplier,sip_total,evf_total,random_min,random_mean,random_max\n";
  for (const auto& p : series.points) {
    const auto [lo, hi] =
        std::minmax_element(p.random_totals.begin(), p.random_totals.end());
    double mean = 0.0;
    for (double t : p.random_totals) mean += t;
    mean /= static_cast<double>(p.random_totals.size());
    out += six(p.multiplier) + "," + six(p.sip_total) + "," +
           six(p.evf_total) + "," + six(*lo) + "," + six(mean) + "," +
           six(*hi) + "\n";
  }
  return out;
}

}  // namespace rsvplan::experiments
