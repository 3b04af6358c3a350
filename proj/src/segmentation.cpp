#include "logcleaner/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "logcleaner/periodicity.hpp"

namespace logcleaner {
namespace {

constexpr double kShiftTolerance = 1e-6;
constexpr int kMaxIterations = 500;

}  // namespace

std::vector<Cluster> mean_shift_1d(const std::map<TemplateId, double>& values, double bandwidth) {
  if (values.empty()) throw std::invalid_argument("mean_shift_1d: empty input");
  if (!(bandwidth > 0)) throw std::invalid_argument("mean_shift_1d: bandwidth must be positive");

  // Fixed (score, id) sample ordered by value; copies of the scores shift
  // while the sample itself stays put.
  std::vector<std::pair<double, TemplateId>> points;
  points.reserve(values.size());
  for (const auto& [t, v] : values) points.emplace_back(v, t);
  std::sort(points.begin(), points.end());

  std::vector<double> data(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) data[i] = points[i].first;

  std::vector<double> modes(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    double pos = data[i];
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      double sum = 0.0;
      std::size_t count = 0;
      for (double v : data) {
        if (std::abs(v - pos) <= bandwidth) {
          sum += v;
          ++count;
        }
      }
      if (count == 0) break;
      const double next = sum / static_cast<double>(count);
      const double shift = std::abs(next - pos);
      pos = next;
      if (shift < kShiftTolerance) break;
    }
    modes[i] = pos;
  }

  // Single-linkage merge of the converged modes.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (modes[a] != modes[b]) return modes[a] < modes[b];
    return points[a].second < points[b].second;
  });

  struct Group {
    std::set<TemplateId> members;
    double mode_sum = 0.0;
    double score_sum = 0.0;
  };
  std::vector<Group> groups;
  double previous_mode = 0.0;
  for (std::size_t idx : order) {
    if (groups.empty() || modes[idx] - previous_mode >= bandwidth / 2) groups.emplace_back();
    groups.back().members.insert(points[idx].second);
    groups.back().mode_sum += modes[idx];
    groups.back().score_sum += points[idx].first;
    previous_mode = modes[idx];
  }

  std::vector<Cluster> clusters;
  clusters.reserve(groups.size());
  for (const auto& g : groups) {
    const auto n = static_cast<double>(g.members.size());
    clusters.push_back({g.members, g.mode_sum / n, g.score_sum / n});
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.representative_score != b.representative_score)
      return a.representative_score < b.representative_score;
    return *a.members.begin() < *b.members.begin();
  });
  return clusters;
}

std::pair<std::set<TemplateId>, bool> select_operational(const std::vector<Cluster>& clusters) {
  if (clusters.empty()) throw std::invalid_argument("select_operational: no clusters");
  if (clusters.size() == 1) return {{}, true};
  const auto smallest =
      std::min_element(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
        if (a.representative_score != b.representative_score)
          return a.representative_score < b.representative_score;
        return *a.members.begin() < *b.members.begin();
      });
  return {smallest->members, false};
}

double auto_bandwidth(const std::map<TemplateId, double>& values) {
  if (values.empty()) throw std::invalid_argument("auto_bandwidth: empty input");
  std::vector<double> scores;
  scores.reserve(values.size());
  for (const auto& [t, v] : values) scores.push_back(v);
  return std::max(0.02, 0.3 * mad(scores));
}

DependencyAnalysis dependency_analysis(const LogSet& set, std::optional<double> bandwidth) {
  DependencyAnalysis result;
  result.scores = compute_mscore(set);

  const double bw = bandwidth ? *bandwidth : auto_bandwidth(result.scores);
  result.segmentation.bandwidth = bw;
  result.segmentation.clusters = mean_shift_1d(result.scores, bw);

  auto [operational, degenerate] = select_operational(result.segmentation.clusters);
  result.segmentation.operational = operational;
  result.segmentation.degenerate = degenerate;
  result.operational = std::move(operational);
  result.cleaned = remove_messages_of(result.operational, set);
  return result;
}

}  // namespace logcleaner
