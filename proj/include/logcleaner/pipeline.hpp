#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "logcleaner/log.hpp"
#include "logcleaner/periodicity.hpp"
#include "logcleaner/segmentation.hpp"

namespace logcleaner {

struct PipelineOptions {
  double delta = 0.2;
  std::optional<double> bandwidth;  // empty: derive from the score spread
  bool skip_periodicity = false;
  bool skip_dependency = false;
};

// Throws ConfigError on bad values or an empty pipeline.
void validate(const PipelineOptions& options);

enum class Classification { globally_periodic, operational, transactional };

std::string_view classification_name(Classification c);  // "globally-periodic", ...
std::string_view stage_name(Classification c);           // periodicity / dependency / none

struct TemplateVerdict {
  TemplateId template_id;
  Classification classification = Classification::transactional;
  std::optional<double> mscore;  // absent when removed before scoring
  std::optional<PeriodicityDiagnostics> periodicity;
};

struct CleaningReport {
  std::vector<TemplateVerdict> templates;  // sorted by template id
  std::size_t entries_before = 0;
  std::size_t entries_removed = 0;
  std::size_t entries_after = 0;
  double delta = 0.2;
  bool periodicity_ran = false;
  bool dependency_ran = false;
  std::optional<SegmentationResult> segmentation;

  std::set<TemplateId> removed_templates() const;  // periodic + operational
};

struct CleanOutcome {
  LogSet cleaned;
  CleaningReport report;
};

// Periodicity analysis followed by dependency analysis on its output. When
// fewer than two templates survive to the dependency stage it is skipped and
// the report carries dependency_ran = false.
CleanOutcome clean_log_set(const LogSet& set, const PipelineOptions& options);

nlohmann::json to_json(const CleaningReport& report);

}  // namespace logcleaner
