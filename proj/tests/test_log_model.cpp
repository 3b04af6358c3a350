#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "logcleaner/errors.hpp"
#include "logcleaner/log.hpp"
#include "logcleaner/log_io.hpp"

using namespace logcleaner;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("logcleaner_model_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("loading the running example directory") {
  const LogSet set = load_log_set(fs::path(TEST_DATA_DIR) / "fig1");
  CHECK(set.logs.size() == 1);
  CHECK(set.logs[0].name == "running_example");
  CHECK(set.logs[0].entries.size() == 18);
  CHECK(set.templates == std::set<TemplateId>{"send", "check", "ping", "memory"});
  CHECK(set == fixtures::running_example_set());
}

TEST_CASE("tsv and jsonl fixtures load identically") {
  const LogSet jsonl = load_log_set(fs::path(TEST_DATA_DIR) / "fig1");
  const LogSet tsv = load_log_set(fs::path(TEST_DATA_DIR) / "fig1_tsv");
  CHECK(jsonl == tsv);
}

TEST_CASE("loading an empty directory fails") {
  const auto dir = temp_dir("empty");
  CHECK_THROWS_WITH_AS(load_log_set(dir), doctest::Contains("no logs found"), IoError);
  CHECK_THROWS_AS(load_log_set(dir / "missing"), IoError);
}

TEST_CASE("malformed lines report file and line number") {
  const auto dir = temp_dir("malformed");

  SUBCASE("invalid json") {
    std::ofstream(dir / "bad.jsonl") << "{\"ts\": 1, \"tpl\": \"a\"}\nnot json\n";
    CHECK_THROWS_WITH_AS(load_log_set(dir), doctest::Contains("bad.jsonl:2"), ParseError);
  }
  SUBCASE("negative timestamp") {
    std::ofstream(dir / "bad.jsonl") << "{\"ts\": -5, \"tpl\": \"a\"}\n";
    CHECK_THROWS_WITH_AS(load_log_set(dir), doctest::Contains("negative"), ParseError);
  }
  SUBCASE("missing template") {
    std::ofstream(dir / "bad.jsonl") << "{\"ts\": 1}\n";
    CHECK_THROWS_AS(load_log_set(dir), ParseError);
  }
  SUBCASE("empty template") {
    std::ofstream(dir / "bad.jsonl") << "{\"ts\": 1, \"tpl\": \"\"}\n";
    CHECK_THROWS_AS(load_log_set(dir), ParseError);
  }
  SUBCASE("tsv junk timestamp") {
    std::ofstream(dir / "bad.tsv") << "abc\tping\n";
    CHECK_THROWS_WITH_AS(load_log_set(dir), doctest::Contains("bad.tsv:1"), ParseError);
  }
  SUBCASE("tsv non-finite timestamp") {
    std::ofstream(dir / "bad.tsv") << "inf\tping\n";
    CHECK_THROWS_WITH_AS(load_log_set(dir), doctest::Contains("not finite"), ParseError);
  }
}

TEST_CASE("loader sorts shuffled lines") {
  // Unique timestamps so the sorted order is unambiguous.
  fixtures::Rng rng(7001);
  Log log;
  log.name = "shuffled";
  for (std::size_t i = 0; i < 40; ++i)
    log.entries.push_back(fixtures::entry(static_cast<double>(i),
                                          "t" + std::to_string(rng.below(4))));
  std::vector<LogEntry> permuted = log.entries;
  for (std::size_t i = permuted.size(); i > 1; --i)
    std::swap(permuted[i - 1], permuted[rng.below(i)]);

  const auto dir = temp_dir("shuffled");
  {
    Log scrambled;
    scrambled.name = "shuffled";
    scrambled.entries = permuted;
    std::ofstream out(dir / "shuffled.jsonl");
    write_log(scrambled, out);
  }
  const LogSet loaded = load_log_set(dir);
  CHECK(loaded == make_log_set({log}));
}

TEST_CASE("reverse") {
  SUBCASE("empty log") {
    const Log empty{"e", {}};
    CHECK(reverse(empty) == empty);
  }
  SUBCASE("intermediate example reverses to e9'..e1'") {
    const Log inter = fixtures::intermediate_log();
    const Log rev = reverse(inter);
    REQUIRE(rev.entries.size() == 9);
    CHECK(rev.entries.front() == inter.entries.back());
    CHECK(rev.entries.back() == inter.entries.front());
    CHECK(rev.entries[1].tpl == "check");  // e8'
    CHECK(rev.entries[1].ts == 7);
  }
  SUBCASE("involution on random logs") {
    fixtures::Rng rng(7002);
    for (int i = 0; i < 50; ++i) {
      const LogSet set = fixtures::random_log_set(rng, 4, 30, 5);
      CHECK(reverse(reverse(set)) == set);
      for (std::size_t li = 0; li < set.logs.size(); ++li) {
        auto sorted_orig = set.logs[li].entries;
        auto sorted_rev = reverse(set.logs[li]).entries;
        std::stable_sort(sorted_orig.begin(), sorted_orig.end(),
                         [](const LogEntry& a, const LogEntry& b) { return a.tpl < b.tpl; });
        std::stable_sort(sorted_rev.begin(), sorted_rev.end(),
                         [](const LogEntry& a, const LogEntry& b) { return a.tpl < b.tpl; });
        CHECK(std::is_permutation(sorted_orig.begin(), sorted_orig.end(), sorted_rev.begin()));
      }
    }
  }
}

TEST_CASE("remove_messages_of") {
  const LogSet original = fixtures::running_example_set();

  SUBCASE("removing ping yields the intermediate example") {
    const LogSet cleaned = remove_messages_of({"ping"}, original);
    CHECK(cleaned == fixtures::intermediate_set());
  }
  SUBCASE("empty removal set is identity") {
    CHECK(remove_messages_of({}, original) == original);
  }
  SUBCASE("removing ping and memory leaves 2 send + 3 check") {
    const LogSet cleaned = remove_messages_of({"ping", "memory"}, original);
    CHECK(cleaned.total_entries() == 5);
    std::size_t send = 0, check = 0;
    for (const auto& e : cleaned.logs[0].entries) {
      if (e.tpl == "send") ++send;
      if (e.tpl == "check") ++check;
    }
    CHECK(send == 2);
    CHECK(check == 3);
    CHECK(cleaned.templates == std::set<TemplateId>{"send", "check"});
  }
  SUBCASE("unknown templates are ignored, emptied logs are retained") {
    const LogSet cleaned = remove_messages_of({"nope"}, original);
    CHECK(cleaned == original);
    const LogSet emptied =
        remove_messages_of({"send", "check", "ping", "memory"}, original);
    CHECK(emptied.logs.size() == 1);
    CHECK(emptied.logs[0].entries.empty());
    CHECK(emptied.templates.empty());
  }
}

TEST_CASE("removal is an order-preserving idempotent subsequence filter") {
  fixtures::Rng rng(7003);
  for (int i = 0; i < 100; ++i) {
    const LogSet set = fixtures::random_log_set(rng, 4, 40, 6);
    std::set<TemplateId> to_remove;
    for (const auto& t : set.templates)
      if (rng.chance(0.4)) to_remove.insert(t);

    const LogSet once = remove_messages_of(to_remove, set);
    for (std::size_t li = 0; li < set.logs.size(); ++li)
      CHECK(fixtures::is_subsequence(once.logs[li].entries, set.logs[li].entries));
    CHECK(remove_messages_of(to_remove, once) == once);
  }
}

TEST_CASE("write then load is identity") {
  fixtures::Rng rng(7004);
  for (int i = 0; i < 20; ++i) {
    LogSet set = fixtures::random_log_set(rng, 3, 30, 5);
    // sprinkle params on some entries
    for (auto& log : set.logs)
      for (auto& e : log.entries)
        if (rng.chance(0.3)) e.params = {{"k", "v" + std::to_string(rng.below(3))}};

    const auto dir = temp_dir("roundtrip");
    write_log_set(set, dir);
    CHECK(load_log_set(dir) == set);
  }
}
