// Compares the production pair scorer against the direct-definition serial
// scan on synthetic corpora and checks that they agree.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "logcleaner/dependency.hpp"
#include "logcleaner/log.hpp"
#include "logcleaner/reference_scoring.hpp"
#include "logcleaner/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace logcleaner;

namespace {

LogSet synthetic_corpus(std::size_t n_logs, std::size_t entries_per_log,
                        std::size_t n_templates, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Log> logs;
  logs.reserve(n_logs);
  for (std::size_t i = 0; i < n_logs; ++i) {
    Log log;
    std::ostringstream name;
    name << "bench_" << std::setw(5) << std::setfill('0') << i;
    log.name = name.str();
    for (std::size_t j = 0; j < entries_per_log; ++j) {
      LogEntry entry;
      entry.ts = static_cast<double>(j);
      entry.tpl = "t" + std::to_string(rng.below(n_templates));
      log.entries.push_back(std::move(entry));
    }
    logs.push_back(std::move(log));
  }
  return make_log_set(std::move(logs));
}

template <typename F>
double best_of_ms(int repeat, F&& f) {
  double best = 0.0;
  for (int r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dependency scoring benchmark: optimized kernel vs direct-definition scan"};
  std::size_t n_logs = 50;
  std::size_t entries = 200;
  std::size_t templates = 10;
  int repeat = 3;
  std::uint64_t seed = 1;
  app.add_option("--logs", n_logs, "number of logs")->capture_default_str();
  app.add_option("--entries", entries, "entries per log")->capture_default_str();
  app.add_option("--templates", templates, "number of templates")->capture_default_str();
  app.add_option("--repeat", repeat, "timing repetitions (best of)")->capture_default_str();
  app.add_option("--seed", seed, "corpus seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const LogSet corpus = synthetic_corpus(n_logs, entries, templates, seed);
  std::cout << "corpus: " << corpus.logs.size() << " logs, " << corpus.total_entries()
            << " entries, " << corpus.templates.size() << " templates";
#ifdef _OPENMP
  std::cout << ", " << omp_get_max_threads() << " threads";
#else
  std::cout << ", no OpenMP";
#endif
  std::cout << '\n';

  ScoreMap optimized;
  std::map<TemplateId, double> naive;
  const double optimized_ms = best_of_ms(repeat, [&] { optimized = compute_mscore(corpus); });
  const double naive_ms = best_of_ms(repeat, [&] { naive = reference::compute_mscore(corpus); });

  double max_diff = 0.0;
  for (const auto& [t, s] : optimized)
    max_diff = std::max(max_diff, std::abs(s - naive.at(t)));

  std::cout << std::fixed << std::setprecision(3);
  std::cout << "direct-definition scan: " << naive_ms << " ms\n";
  std::cout << "optimized kernel:       " << optimized_ms << " ms\n";
  std::cout << "speedup:                " << naive_ms / optimized_ms << "x\n";
  std::cout << std::scientific << std::setprecision(3)
            << "max |difference|:       " << max_diff << '\n';

  if (max_diff > 1e-12) {
    std::cerr << "scorers disagree beyond 1e-12\n";
    return 1;
  }
  return 0;
}
