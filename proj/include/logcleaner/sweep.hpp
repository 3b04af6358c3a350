#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "logcleaner/fsm.hpp"
#include "logcleaner/noise.hpp"
#include "logcleaner/pipeline.hpp"

namespace logcleaner {

struct SweepConfig {
  std::vector<double> nr_values;
  int repetitions = 10;
  std::uint64_t seed = 0;
  TraceGenConfig gen{};  // per-cell seeds are derived from `seed`
  int n_templates = 5;
  PipelineOptions pipeline{};
};

struct SweepCell {
  double nr = 0.0;
  int repetition = 0;
  std::optional<double> recall;
  std::optional<double> specificity;
};

struct SweepAggregate {
  double nr = 0.0;
  double mean_recall = 0.0;
  double sd_recall = 0.0;
  double mean_specificity = 0.0;
  double sd_specificity = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // nr-major, repetition-minor
  std::vector<SweepAggregate> aggregates;
};

// generate -> inject -> clean -> score, once per (nr, repetition). Cells are
// independent, carry derived seeds, and may run in parallel; the result is
// identical for any schedule.
SweepResult nr_sweep(const FsmModel& model, const SweepConfig& config);

// header: nr,repetition,recall,specificity
void write_cells_csv(const SweepResult& result, std::ostream& out);

// header: nr,mean_recall,sd_recall,mean_specificity,sd_specificity
void write_aggregates_csv(const SweepResult& result, std::ostream& out);

}  // namespace logcleaner
