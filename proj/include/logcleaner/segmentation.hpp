#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "logcleaner/dependency.hpp"
#include "logcleaner/log.hpp"

namespace logcleaner {

struct Cluster {
  std::set<TemplateId> members;
  double center = 0.0;                // converged mode
  double representative_score = 0.0;  // mean mScore of the members
};

struct SegmentationResult {
  std::vector<Cluster> clusters;  // ascending representative score
  std::set<TemplateId> operational;
  bool degenerate = false;  // single cluster: nothing is removed
  double bandwidth = 0.0;
};

// Flat-kernel mean shift over the score values: each point moves to the mean
// of the values within +-bandwidth of its position until the shift drops
// below 1e-6 (or 500 iterations). Modes closer than bandwidth/2 collapse
// into one cluster. Deterministic and independent of input iteration order.
std::vector<Cluster> mean_shift_1d(const std::map<TemplateId, double>& values,
                                   double bandwidth);

// Members of the cluster with the smallest representative score, or the
// degenerate flag when there is only one cluster. Ties go to the cluster
// with the lexicographically smallest member.
std::pair<std::set<TemplateId>, bool> select_operational(const std::vector<Cluster>& clusters);

// max(0.02, 0.3 * mean absolute deviation of the scores)
double auto_bandwidth(const std::map<TemplateId, double>& values);

struct DependencyAnalysis {
  std::set<TemplateId> operational;
  LogSet cleaned;
  ScoreMap scores;
  SegmentationResult segmentation;
};

// compute_mscore -> mean_shift_1d -> select_operational -> removal.
DependencyAnalysis dependency_analysis(const LogSet& set,
                                       std::optional<double> bandwidth = std::nullopt);

}  // namespace logcleaner
