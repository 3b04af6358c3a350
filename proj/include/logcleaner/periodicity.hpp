#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logcleaner/log.hpp"

namespace logcleaner {

struct PeriodicityConfig {
  double delta = 0.2;  // deviation threshold, in timestamp units
};

// Per-log evidence for one template. mad/atd and the three conditions are
// only defined once the template occurs at least three times in the log.
struct LogPeriodicity {
  std::string log;
  std::size_t count = 0;
  std::optional<double> mad;
  std::optional<double> atd;
  std::optional<bool> cond1;  // mad of occurrence gaps <= delta
  std::optional<bool> cond2;  // first occurrence within atd of the log start
  std::optional<bool> cond3;  // last occurrence within atd of the log end
  bool verdict = false;
};

struct PeriodicityDiagnostics {
  TemplateId template_id;
  std::vector<LogPeriodicity> per_log;

  bool globally_periodic() const;  // verdict holds in every log
};

// Mean absolute deviation around the arithmetic mean.
double mad(std::span<const double> values);

// Mean of consecutive differences of a non-decreasing sequence; equals
// (last - first) / (count - 1).
double atd(std::span<const double> timestamps);

std::pair<bool, LogPeriodicity> is_periodic_begin_to_end(const TemplateId& t,
                                                         const Log& l,
                                                         double delta);

struct PeriodicityResult {
  std::set<TemplateId> globally_periodic;
  LogSet cleaned;
  std::vector<PeriodicityDiagnostics> diagnostics;  // one per template, sorted
};

// A template is removed only when the per-log check passes in every log of
// the set; per-template checks run in parallel.
PeriodicityResult periodicity_analysis(const LogSet& set, const PeriodicityConfig& config);

}  // namespace logcleaner
