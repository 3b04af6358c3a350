#include "logcleaner/log.hpp"

#include <algorithm>

namespace logcleaner {

std::size_t LogSet::total_entries() const {
  std::size_t n = 0;
  for (const auto& log : logs) n += log.entries.size();
  return n;
}

void LogSet::rebuild_templates() {
  templates.clear();
  for (const auto& log : logs)
    for (const auto& e : log.entries) templates.insert(e.tpl);
}

LogSet make_log_set(std::vector<Log> logs) {
  LogSet set;
  set.logs = std::move(logs);
  for (auto& log : set.logs) {
    std::stable_sort(log.entries.begin(), log.entries.end(),
                     [](const LogEntry& a, const LogEntry& b) { return a.ts < b.ts; });
  }
  set.rebuild_templates();
  return set;
}

Log reverse(const Log& log) {
  Log out;
  out.name = log.name;
  out.entries.assign(log.entries.rbegin(), log.entries.rend());
  return out;
}

LogSet reverse(const LogSet& set) {
  LogSet out;
  out.logs.reserve(set.logs.size());
  for (const auto& log : set.logs) out.logs.push_back(reverse(log));
  out.templates = set.templates;
  return out;
}

LogSet remove_messages_of(const std::set<TemplateId>& templates, const LogSet& set) {
  LogSet out;
  out.logs.reserve(set.logs.size());
  for (const auto& log : set.logs) {
    Log kept;
    kept.name = log.name;
    for (const auto& e : log.entries)
      if (!templates.contains(e.tpl)) kept.entries.push_back(e);
    out.logs.push_back(std::move(kept));
  }
  out.rebuild_templates();
  return out;
}

}  // namespace logcleaner
