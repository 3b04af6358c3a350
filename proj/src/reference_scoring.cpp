#include "logcleaner/reference_scoring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace logcleaner::reference {
namespace {

Log reversed_copy(const Log& log) {
  Log out;
  out.name = log.name;
  out.entries.assign(log.entries.rbegin(), log.entries.rend());
  return out;
}

double forward_over_logs(const TemplateId& x, const TemplateId& y, const std::vector<Log>& logs) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& log : logs) {
    const auto& es = log.entries;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i].tpl != x) continue;
      ++n;
      std::size_t window_end = es.size();
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (es[j].tpl == x) {
          window_end = j;
          break;
        }
      }
      for (std::size_t j = i + 1; j < window_end; ++j) {
        if (es[j].tpl == y) {
          sum += 1.0 / static_cast<double>(j - i);
          break;
        }
      }
    }
  }
  if (n == 0) throw std::invalid_argument("reference dscore: x never occurs");
  return sum / static_cast<double>(n);
}

}  // namespace

double dscore_forward(const TemplateId& x, const TemplateId& y, const LogSet& set) {
  if (x == y) throw std::invalid_argument("reference dscore: x and y must differ");
  return forward_over_logs(x, y, set.logs);
}

double dscore_backward(const TemplateId& x, const TemplateId& y, const LogSet& set) {
  if (x == y) throw std::invalid_argument("reference dscore: x and y must differ");
  std::vector<Log> reversed;
  reversed.reserve(set.logs.size());
  for (const auto& log : set.logs) reversed.push_back(reversed_copy(log));
  return forward_over_logs(x, y, reversed);
}

double dscore_calc(const TemplateId& x, const TemplateId& y, const LogSet& set) {
  return std::max(dscore_forward(x, y, set), dscore_backward(x, y, set));
}

std::map<TemplateId, double> compute_mscore(const LogSet& set) {
  std::set<TemplateId> seen;
  for (const auto& log : set.logs)
    for (const auto& e : log.entries) seen.insert(e.tpl);
  if (seen.size() < 2)
    throw std::invalid_argument("reference mscore: need at least two templates");

  std::map<TemplateId, double> scores;
  for (const auto& x : seen) {
    double best = 0.0;
    for (const auto& y : seen) {
      if (x == y) continue;
      best = std::max(best, dscore_calc(x, y, set));
    }
    scores[x] = best;
  }
  return scores;
}

}  // namespace logcleaner::reference
