#include "logcleaner/pipeline.hpp"

#include <map>
#include <utility>

#include "logcleaner/errors.hpp"

namespace logcleaner {

void validate(const PipelineOptions& options) {
  if (options.skip_periodicity && options.skip_dependency)
    throw ConfigError("nothing to do: both pipeline stages are skipped");
  if (options.delta < 0) throw ConfigError("delta must be >= 0");
  if (options.bandwidth && !(*options.bandwidth > 0))
    throw ConfigError("bandwidth must be positive");
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::globally_periodic: return "globally-periodic";
    case Classification::operational: return "operational";
    case Classification::transactional: return "transactional";
  }
  return "?";
}

std::string_view stage_name(Classification c) {
  switch (c) {
    case Classification::globally_periodic: return "periodicity";
    case Classification::operational: return "dependency";
    case Classification::transactional: return "none";
  }
  return "?";
}

std::set<TemplateId> CleaningReport::removed_templates() const {
  std::set<TemplateId> removed;
  for (const auto& v : templates)
    if (v.classification != Classification::transactional) removed.insert(v.template_id);
  return removed;
}

CleanOutcome clean_log_set(const LogSet& set, const PipelineOptions& options) {
  validate(options);

  CleanOutcome outcome;
  auto& report = outcome.report;
  report.delta = options.delta;
  report.entries_before = set.total_entries();

  std::map<TemplateId, TemplateVerdict> verdicts;
  for (const auto& t : set.templates) verdicts[t].template_id = t;

  LogSet current = set;

  if (!options.skip_periodicity) {
    report.periodicity_ran = true;
    auto periodic = periodicity_analysis(current, PeriodicityConfig{options.delta});
    for (auto& diag : periodic.diagnostics) {
      auto& verdict = verdicts[diag.template_id];
      if (periodic.globally_periodic.contains(diag.template_id))
        verdict.classification = Classification::globally_periodic;
      verdict.periodicity = std::move(diag);
    }
    current = std::move(periodic.cleaned);
  }

  if (!options.skip_dependency) {
    if (current.templates.size() >= 2) {
      report.dependency_ran = true;
      auto analysis = dependency_analysis(current, options.bandwidth);
      for (const auto& [t, score] : analysis.scores) verdicts[t].mscore = score;
      for (const auto& t : analysis.operational)
        verdicts[t].classification = Classification::operational;
      report.segmentation = std::move(analysis.segmentation);
      current = std::move(analysis.cleaned);
    }
    // Fewer than two templates leave nothing to separate; the report keeps
    // dependency_ran = false so callers can tell the stage did not run.
  }

  report.entries_after = current.total_entries();
  report.entries_removed = report.entries_before - report.entries_after;
  report.templates.reserve(verdicts.size());
  for (auto& [t, verdict] : verdicts) report.templates.push_back(std::move(verdict));
  outcome.cleaned = std::move(current);
  return outcome;
}

nlohmann::json to_json(const CleaningReport& report) {
  using nlohmann::json;

  json doc;
  doc["delta"] = report.delta;
  doc["stages_run"] = {{"periodicity", report.periodicity_ran},
                       {"dependency", report.dependency_ran}};

  json templates = json::array();
  for (const auto& v : report.templates) {
    json jt;
    jt["template"] = v.template_id;
    jt["classification"] = std::string(classification_name(v.classification));
    jt["stage"] = std::string(stage_name(v.classification));
    jt["mScore"] = v.mscore ? json(*v.mscore) : json(nullptr);
    if (v.periodicity) {
      json per_log = json::array();
      for (const auto& rec : v.periodicity->per_log) {
        json jr;
        jr["log"] = rec.log;
        jr["count"] = rec.count;
        jr["mad"] = rec.mad ? json(*rec.mad) : json(nullptr);
        jr["atd"] = rec.atd ? json(*rec.atd) : json(nullptr);
        jr["cond1"] = rec.cond1 ? json(*rec.cond1) : json(nullptr);
        jr["cond2"] = rec.cond2 ? json(*rec.cond2) : json(nullptr);
        jr["cond3"] = rec.cond3 ? json(*rec.cond3) : json(nullptr);
        jr["verdict"] = rec.verdict;
        per_log.push_back(jr);
      }
      jt["periodicity"] = {{"per_log", per_log}};
    } else {
      jt["periodicity"] = nullptr;
    }
    templates.push_back(jt);
  }
  doc["templates"] = templates;

  doc["counts"] = {{"entries_before", report.entries_before},
                   {"entries_removed", report.entries_removed},
                   {"entries_after", report.entries_after}};

  if (report.segmentation) {
    json clusters = json::array();
    for (const auto& c : report.segmentation->clusters) {
      clusters.push_back({{"members", c.members},
                          {"center", c.center},
                          {"representative_score", c.representative_score}});
    }
    doc["segmentation"] = {{"bandwidth", report.segmentation->bandwidth},
                           {"degenerate", report.segmentation->degenerate},
                           {"clusters", clusters},
                           {"operational", report.segmentation->operational}};
  } else {
    doc["segmentation"] = nullptr;
  }
  return doc;
}

}  // namespace logcleaner
