#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logcleaner/errors.hpp"
#include "logcleaner/fsm.hpp"
#include "logcleaner/log_io.hpp"
#include "logcleaner/noise.hpp"
#include "logcleaner/pipeline.hpp"
#include "logcleaner/sweep.hpp"

namespace fs = std::filesystem;
using namespace logcleaner;

namespace {

std::optional<double> parse_bandwidth(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument("trailing characters");
    if (!(value > 0)) throw ConfigError("bandwidth must be positive");
    return value;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("bandwidth must be a positive number or \"auto\"");
  }
}

// Stage everything in a sibling temp directory, then move into place, so a
// failure never leaves a partially written output directory.
void write_logs_atomically(const LogSet& set, const fs::path& out_dir) {
  const fs::path parent = out_dir.has_parent_path() ? out_dir.parent_path() : fs::path(".");
  fs::create_directories(parent);
  const fs::path staging = parent / (out_dir.filename().string() + ".staging");
  fs::remove_all(staging);
  write_log_set(set, staging);
  if (!fs::exists(out_dir)) {
    fs::rename(staging, out_dir);
  } else {
    for (const auto& de : fs::directory_iterator(staging))
      fs::rename(de.path(), out_dir / de.path().filename());
    fs::remove_all(staging);
  }
}

void write_report_file(const CleaningReport& report, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report " + path.string());
  out << to_json(report).dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void print_score_table(const ScoreMap& scores) {
  std::cout << nlohmann::json(scores).dump() << '\n';

  std::vector<std::pair<TemplateId, double>> rows(scores.begin(), scores.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::size_t width = std::string("template").size();
  for (const auto& [t, s] : rows) width = std::max(width, t.size());
  std::cout << std::left << std::setw(static_cast<int>(width)) << "template" << "  mScore\n";
  std::cout << std::fixed << std::setprecision(6);
  for (const auto& [t, s] : rows)
    std::cout << std::left << std::setw(static_cast<int>(width)) << t << "  " << s << '\n';
}

fs::path aggregate_csv_path(const fs::path& cells_path) {
  fs::path agg = cells_path;
  const auto ext = agg.extension();
  agg.replace_extension();
  agg += ".agg";
  agg += ext;
  return agg;
}

int run(int argc, char** argv) {
  CLI::App app{"logcleaner: removes operational (noise) messages from structured execution logs"};
  app.require_subcommand(1);

  // clean
  auto* clean = app.add_subcommand("clean", "run the cleaning pipeline on a log directory");
  std::string clean_in, clean_out, clean_report;
  double clean_delta = 0.2;
  std::string clean_bandwidth = "auto";
  bool skip_periodicity = false, skip_dependency = false;
  std::uint64_t clean_seed = 0;
  clean->add_option("--in", clean_in, "input log directory")->required();
  clean->add_option("--out", clean_out, "output directory for cleaned logs")->required();
  clean->add_option("--report", clean_report, "path of the cleaning report (JSON)")->required();
  clean->add_option("--delta", clean_delta, "periodicity deviation threshold")
      ->capture_default_str();
  clean->add_option("--bandwidth", clean_bandwidth, "mean-shift bandwidth, or \"auto\"")
      ->capture_default_str();
  clean->add_flag("--skip-periodicity", skip_periodicity, "skip the periodicity stage");
  clean->add_flag("--skip-dependency", skip_dependency, "skip the dependency stage");
  clean->add_option("--seed", clean_seed,
                    "accepted for interface stability; the pipeline is deterministic");
  clean->callback([&] {
    PipelineOptions options;
    options.delta = clean_delta;
    options.bandwidth = parse_bandwidth(clean_bandwidth);
    options.skip_periodicity = skip_periodicity;
    options.skip_dependency = skip_dependency;
    validate(options);

    const LogSet set = load_log_set(clean_in);
    const CleanOutcome outcome = clean_log_set(set, options);
    write_logs_atomically(outcome.cleaned, clean_out);
    write_report_file(outcome.report, clean_report);

    std::set<TemplateId> periodic, operational;
    for (const auto& v : outcome.report.templates) {
      if (v.classification == Classification::globally_periodic) periodic.insert(v.template_id);
      if (v.classification == Classification::operational) operational.insert(v.template_id);
    }
    const auto join = [](const std::set<TemplateId>& ts) {
      std::string s;
      for (const auto& t : ts) s += (s.empty() ? "" : ", ") + t;
      return s.empty() ? std::string("-") : s;
    };
    std::cout << "globally periodic: " << join(periodic) << '\n';
    std::cout << "operational:       " << join(operational) << '\n';
    if (outcome.report.segmentation && outcome.report.segmentation->degenerate)
      std::cout << "segmentation degenerate: single cluster, nothing removed\n";
    std::cout << "entries: " << outcome.report.entries_before << " -> "
              << outcome.report.entries_after << " ("
              << outcome.report.entries_removed << " removed)\n";
  });

  // score
  auto* score = app.add_subcommand("score", "print the per-template dependency scores");
  std::string score_in;
  score->add_option("--in", score_in, "input log directory")->required();
  score->callback([&] {
    const LogSet set = load_log_set(score_in);
    print_score_table(compute_mscore(set));
  });

  // gen
  auto* gen = app.add_subcommand("gen", "generate random traces from an FSM model");
  std::string gen_model, gen_out;
  TraceGenConfig gen_config;
  gen->add_option("--model", gen_model, "FSM model file (JSON)")->required();
  gen->add_option("--out", gen_out, "output log directory")->required();
  gen->add_option("--visits", gen_config.visits_per_state, "visits required per state")
      ->capture_default_str();
  gen->add_option("--min-logs", gen_config.min_logs, "minimum number of logs")
      ->capture_default_str();
  gen->add_option("--max-len", gen_config.max_len, "maximum walk length")
      ->capture_default_str();
  gen->add_option("--seed", gen_config.seed, "random seed")->capture_default_str();
  gen->callback([&] {
    const FsmModel model = load_fsm(gen_model);
    const LogSet set = generate_traces(model, gen_config);
    write_log_set(set, gen_out);
    std::cout << "generated " << set.logs.size() << " logs, " << set.total_entries()
              << " entries\n";
  });

  // inject
  auto* inject = app.add_subcommand("inject", "inject operational noise into a log directory");
  std::string inject_in, inject_out, inject_truth;
  NoiseSpec noise;
  inject->add_option("--in", inject_in, "input log directory")->required();
  inject->add_option("--out", inject_out, "output log directory")->required();
  inject->add_option("--truth", inject_truth, "ground truth output file (JSON)")->required();
  inject->add_option("--nr", noise.nr, "target noise rate in (0,1)")->required();
  inject->add_option("--n-templates", noise.n_templates, "number of operational templates")
      ->capture_default_str();
  inject->add_option("--seed", noise.seed, "random seed")->capture_default_str();
  inject->callback([&] {
    const LogSet set = load_log_set(inject_in);
    const InjectionResult result = inject_noise(set, noise);
    write_log_set(result.logs, inject_out);

    if (fs::path(inject_truth).has_parent_path())
      fs::create_directories(fs::path(inject_truth).parent_path());
    std::ofstream out(inject_truth);
    if (!out) throw IoError("cannot write truth file " + inject_truth);
    nlohmann::json truth;
    truth["operational"] = result.truth.operational;
    truth["transactional"] = result.truth.transactional;
    out << truth.dump(2) << '\n';

    const auto total = result.logs.total_entries();
    std::cout << "injected " << result.injected_entries << " entries, achieved NR "
              << std::fixed << std::setprecision(6)
              << static_cast<double>(result.injected_entries) / static_cast<double>(total)
              << '\n';
  });

  // eval
  auto* eval = app.add_subcommand("eval", "noise-rate sweep: generate, inject, clean, score");
  std::string eval_model, eval_out;
  SweepConfig sweep;
  sweep.nr_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  sweep.repetitions = 30;
  sweep.gen.min_logs = 100;
  double eval_delta = 0.2;
  std::string eval_bandwidth = "auto";
  eval->add_option("--model", eval_model, "FSM model file (JSON)")->required();
  eval->add_option("--out", eval_out, "per-repetition CSV output path")->required();
  eval->add_option("--nr", sweep.nr_values, "comma-separated noise rates")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--reps", sweep.repetitions, "repetitions per noise rate")
      ->capture_default_str();
  eval->add_option("--seed", sweep.seed, "random seed")->capture_default_str();
  eval->add_option("--visits", sweep.gen.visits_per_state, "visits required per state")
      ->capture_default_str();
  eval->add_option("--min-logs", sweep.gen.min_logs, "minimum number of logs per run")
      ->capture_default_str();
  eval->add_option("--max-len", sweep.gen.max_len, "maximum walk length")
      ->capture_default_str();
  eval->add_option("--n-templates", sweep.n_templates, "number of operational templates")
      ->capture_default_str();
  eval->add_option("--delta", eval_delta, "periodicity deviation threshold")
      ->capture_default_str();
  eval->add_option("--bandwidth", eval_bandwidth, "mean-shift bandwidth, or \"auto\"")
      ->capture_default_str();
  eval->callback([&] {
    sweep.pipeline.delta = eval_delta;
    sweep.pipeline.bandwidth = parse_bandwidth(eval_bandwidth);
    const FsmModel model = load_fsm(eval_model);
    const SweepResult result = nr_sweep(model, sweep);

    if (fs::path(eval_out).has_parent_path())
      fs::create_directories(fs::path(eval_out).parent_path());
    std::ofstream cells(eval_out);
    if (!cells) throw IoError("cannot write " + eval_out);
    write_cells_csv(result, cells);

    const fs::path agg_path = aggregate_csv_path(eval_out);
    std::ofstream agg(agg_path);
    if (!agg) throw IoError("cannot write " + agg_path.string());
    write_aggregates_csv(result, agg);

    write_aggregates_csv(result, std::cout);
  });

  // divscore
  auto* divscore = app.add_subcommand("divscore", "print the diversity scores of an FSM model");
  std::string div_model;
  divscore->add_option("--model", div_model, "FSM model file (JSON)")->required();
  divscore->callback([&] {
    const FsmModel model = load_fsm(div_model);
    std::size_t width = std::string("symbol").size();
    for (const auto& sigma : model.alphabet) width = std::max(width, sigma.size());
    std::cout << std::left << std::setw(static_cast<int>(width)) << "symbol" << "  eDiv\n";
    std::cout << std::fixed << std::setprecision(6);
    for (const auto& sigma : model.alphabet)
      std::cout << std::left << std::setw(static_cast<int>(width)) << sigma << "  "
                << ediv_score(model, sigma) << '\n';
    std::cout << "sDiv-Score: " << sdiv_score(model) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
