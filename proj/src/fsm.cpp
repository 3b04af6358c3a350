#include "logcleaner/fsm.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "logcleaner/errors.hpp"
#include "logcleaner/rng.hpp"

namespace logcleaner {

FsmModel load_fsm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path.string());

  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("invalid model JSON in " + path.string() + ": " + e.what());
  }

  FsmModel model;
  try {
    model.states = j.at("states").get<std::vector<std::string>>();
    model.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    model.initial = j.at("initial").get<std::string>();
    if (j.contains("accepting")) {
      const auto accepting = j["accepting"].get<std::vector<std::string>>();
      model.accepting.insert(accepting.begin(), accepting.end());
    }
    for (const auto& jt : j.at("transitions")) {
      model.transitions.push_back({jt.at("from").get<std::string>(),
                                   jt.at("symbol").get<std::string>(),
                                   jt.at("to").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed model " + path.string() + ": " + e.what());
  }
  validate(model);
  return model;
}

void validate(const FsmModel& model) {
  if (model.states.empty()) throw DataError("model has no states");
  const std::set<std::string> states(model.states.begin(), model.states.end());
  if (states.size() != model.states.size()) throw DataError("duplicate state ids");
  const std::set<TemplateId> alphabet(model.alphabet.begin(), model.alphabet.end());
  if (alphabet.size() != model.alphabet.size()) throw DataError("duplicate alphabet symbols");
  for (const auto& s : model.alphabet)
    if (s.empty()) throw DataError("empty alphabet symbol");
  if (!states.contains(model.initial))
    throw DataError("initial state \"" + model.initial + "\" is not a state");
  for (const auto& s : model.accepting)
    if (!states.contains(s)) throw DataError("accepting state \"" + s + "\" is not a state");
  for (const auto& tr : model.transitions) {
    if (!states.contains(tr.from))
      throw DataError("transition from unknown state \"" + tr.from + "\"");
    if (!states.contains(tr.to))
      throw DataError("transition to unknown state \"" + tr.to + "\"");
    if (!alphabet.contains(tr.symbol))
      throw DataError("transition symbol \"" + tr.symbol + "\" is not in the alphabet");
  }
}

double ediv_score(const FsmModel& model, const TemplateId& sigma) {
  if (std::find(model.alphabet.begin(), model.alphabet.end(), sigma) == model.alphabet.end())
    throw std::invalid_argument("ediv_score: symbol \"" + sigma + "\" is not in the alphabet");

  std::set<std::string> reached;
  for (const auto& tr : model.transitions)
    if (tr.symbol == sigma) reached.insert(tr.to);

  std::set<TemplateId> successors;
  for (const auto& tr : model.transitions)
    if (reached.contains(tr.from)) successors.insert(tr.symbol);

  return static_cast<double>(successors.size()) / static_cast<double>(model.alphabet.size());
}

double sdiv_score(const FsmModel& model) {
  if (model.alphabet.empty()) throw std::invalid_argument("sdiv_score: empty alphabet");
  double sum = 0.0;
  for (const auto& sigma : model.alphabet) sum += ediv_score(model, sigma);
  return sum / static_cast<double>(model.alphabet.size());
}

bool can_replay(const FsmModel& model, const std::vector<TemplateId>& symbols) {
  // The model may be nondeterministic, so track the whole reachable set.
  std::set<std::string> current{model.initial};
  for (const auto& symbol : symbols) {
    std::set<std::string> next;
    for (const auto& tr : model.transitions)
      if (tr.symbol == symbol && current.contains(tr.from)) next.insert(tr.to);
    if (next.empty()) return false;
    current = std::move(next);
  }
  return true;
}

LogSet generate_traces(const FsmModel& model, const TraceGenConfig& config) {
  validate(model);
  if (config.visits_per_state < 1) throw ConfigError("visits_per_state must be >= 1");
  if (config.min_logs < 1) throw ConfigError("min_logs must be >= 1");
  if (config.max_len < 1) throw ConfigError("max_len must be >= 1");
  if (config.accept_stop_prob < 0 || config.accept_stop_prob > 1)
    throw ConfigError("accept_stop_prob must be in [0, 1]");

  std::map<std::string, std::vector<const Transition*>> adjacency;
  for (const auto& s : model.states) adjacency[s];
  for (const auto& tr : model.transitions) adjacency[tr.from].push_back(&tr);

  if (adjacency.at(model.initial).empty())
    throw DataError("initial state has no outgoing transitions");

  // Coverage pre-check: every state must be reachable within max_len steps.
  std::map<std::string, std::size_t> depth;
  std::deque<std::string> queue{model.initial};
  depth[model.initial] = 0;
  while (!queue.empty()) {
    const auto state = queue.front();
    queue.pop_front();
    for (const auto* tr : adjacency.at(state)) {
      if (depth.contains(tr->to)) continue;
      depth[tr->to] = depth[state] + 1;
      queue.push_back(tr->to);
    }
  }
  for (const auto& s : model.states) {
    const auto it = depth.find(s);
    if (it == depth.end())
      throw DataError("state \"" + s + "\" is unreachable from the initial state");
    if (it->second > static_cast<std::size_t>(config.max_len))
      throw DataError("state \"" + s + "\" cannot be reached within max_len steps");
  }

  Rng rng(config.seed);
  std::map<std::string, std::size_t> visits;
  for (const auto& s : model.states) visits[s] = 0;

  const auto covered = [&] {
    for (const auto& [state, count] : visits)
      if (count < static_cast<std::size_t>(config.visits_per_state)) return false;
    return true;
  };

  std::vector<Log> logs;
  const std::size_t walk_cap =
      std::max<std::size_t>(100000, static_cast<std::size_t>(config.min_logs) * 1000);
  std::size_t walks = 0;
  while (logs.size() < static_cast<std::size_t>(config.min_logs) || !covered()) {
    if (++walks > walk_cap)
      throw DataError("state coverage not reached after " + std::to_string(walk_cap) + " walks");

    Log log;
    std::ostringstream name;
    name << "trace_" << std::setw(5) << std::setfill('0') << logs.size();
    log.name = name.str();

    std::string state = model.initial;
    ++visits[state];
    while (true) {
      const auto& outgoing = adjacency.at(state);
      if (outgoing.empty()) break;
      if (!log.entries.empty() && model.accepting.contains(state) &&
          rng.chance(config.accept_stop_prob))
        break;
      if (log.entries.size() >= static_cast<std::size_t>(config.max_len)) break;

      const auto* tr = outgoing[rng.below(outgoing.size())];
      LogEntry entry;
      entry.ts = static_cast<double>(log.entries.size());
      entry.tpl = tr->symbol;
      log.entries.push_back(std::move(entry));
      state = tr->to;
      ++visits[state];
    }
    logs.push_back(std::move(log));
  }
  return make_log_set(std::move(logs));
}

}  // namespace logcleaner
