#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "logcleaner/log.hpp"

namespace logcleaner {

struct Transition {
  std::string from;
  TemplateId symbol;
  std::string to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Possibly nondeterministic finite state machine; accepting states are
// optional and only influence trace generation stops.
struct FsmModel {
  std::vector<std::string> states;
  std::vector<TemplateId> alphabet;
  std::string initial;
  std::set<std::string> accepting;
  std::vector<Transition> transitions;
};

FsmModel load_fsm(const std::filesystem::path& path);

// Throws DataError on structural problems (unknown endpoints, duplicate ids,
// initial state missing).
void validate(const FsmModel& model);

// Share of the alphabet that can occur right after `sigma`: unique symbols on
// the outgoing transitions of every state reachable by a sigma-transition,
// over the alphabet size.
double ediv_score(const FsmModel& model, const TemplateId& sigma);

// Mean ediv_score over the whole alphabet.
double sdiv_score(const FsmModel& model);

// True when the symbol sequence is a path of the model from the initial state.
bool can_replay(const FsmModel& model, const std::vector<TemplateId>& symbols);

struct TraceGenConfig {
  int visits_per_state = 4;
  int min_logs = 1000;
  int max_len = 50;
  double accept_stop_prob = 0.2;
  std::uint64_t seed = 0;
};

// Uniform random walks from the initial state until every state has been
// visited visits_per_state times across the corpus and at least min_logs
// logs exist. A walk ends at a state without outgoing transitions, at an
// accepting state with probability accept_stop_prob, or at max_len entries.
// Entry timestamps are the entry indexes. Deterministic given the seed.
LogSet generate_traces(const FsmModel& model, const TraceGenConfig& config);

}  // namespace logcleaner
