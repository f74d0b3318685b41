#include "racg/search.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "racg/constructions.hpp"
#include "racg/formats.hpp"
#include "racg/generators.hpp"
#include "test_support.hpp"

using namespace racg;
namespace fs = std::filesystem;

namespace {

struct Run {
  SearchStats stats;
  std::string jsonl;
  std::vector<MalformedRecord> malformed;
};

Run scan_text(const std::string& text, SearchOptions opts = {}) {
  std::istringstream in(text);
  Run run;
  opts.on_malformed = [&](const MalformedRecord& m) { run.malformed.push_back(m); };
  run.stats = scan_stream(in, opts, [&](const CounterexampleRecord& r) { run.jsonl += record_json(r).dump() + "\n"; });
  return run;
}

std::string corpus_text(int from, int to) {
  std::string text;
  for (int n = from; n <= to; ++n) text += testing::read_file(testing::test_data("graphs_n" + std::to_string(n) + ".g6"));
  return text;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("racg_search_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("C5 alone yields nothing") {
  auto run = scan_text(write_graph6(gen_cycle(5)) + "\n");
  CHECK(run.stats.graphs_seen == 1);
  CHECK(run.stats.failed_filter == 1);
  CHECK(run.stats.counterexamples == 0);
  CHECK(run.jsonl.empty());
}

TEST_CASE("the example graph produces records at x") {
  Graph lambda = parse_edge_list(testing::read_file(testing::graph_data("lambda.edges")));
  const std::string x = std::to_string(lambda.index_of("x"));
  auto run = scan_text(write_graph6(lambda) + "\n");
  CHECK(run.stats.passed_filter == 1);
  CHECK(run.stats.doubles_tested == lambda.order());
  REQUIRE(run.stats.counterexamples >= 1);

  std::istringstream lines(run.jsonl);
  bool saw_x = false;
  for (std::string line; std::getline(lines, line);) {
    auto j = Json::parse(line);
    CHECK(j["base"]["graph6"] == write_graph6(lambda));
    CHECK(j["schema"] == kRecordSchemaVersion);
    CHECK(reverify_record(j) == "");
    saw_x = saw_x || j["x"] == x;
  }
  CHECK(saw_x);
}

TEST_CASE("all graphs on at most 6 vertices: frozen baseline") {
  // Produced once by a full run; the order-by-order counts of isomorphism
  // classes (1, 2, 4, 11, 34, 156) fix graphs_seen.
  auto run = scan_text(corpus_text(1, 6));
  CHECK(run.stats.graphs_seen == 208);
  CHECK(run.stats.passed_filter == 201);
  CHECK(run.stats.failed_filter == 7);
  CHECK(run.stats.malformed == 0);
  CHECK(run.stats.counterexamples == 0);
  CHECK(run.stats.graphs_seen == run.stats.passed_filter + run.stats.failed_filter + run.stats.malformed);
}

TEST_CASE("all graphs on 8 vertices: frozen baseline and re-verification") {
  SearchOptions opts;
  opts.workers = 4;
  auto run = scan_text(corpus_text(8, 8), opts);
  CHECK(run.stats.graphs_seen == 12346);
  CHECK(run.stats.passed_filter == 11622);
  CHECK(run.stats.counterexamples == 10);
  std::istringstream lines(run.jsonl);
  std::size_t checked = 0;
  for (std::string line; std::getline(lines, line); ++checked) CHECK(reverify_record(Json::parse(line)) == "");
  CHECK(checked == 10);
}

TEST_CASE("malformed records are skipped, counted and located") {
  std::string text = "D?{\n\nD? \nC~\n~\n";
  auto run = scan_text(text);
  CHECK(run.stats.graphs_seen == 4);  // blank line is not a record
  CHECK(run.stats.malformed == 2);
  REQUIRE(run.malformed.size() == 2);
  CHECK(run.malformed[0].record_index == 1);
  CHECK(run.malformed[0].byte_offset == 7);  // record "D? " starts at byte 5; the data is one byte short
  CHECK(run.malformed[1].record_index == 3);
  CHECK(run.malformed[1].byte_offset == 13);
  CHECK(run.stats.graphs_seen == run.stats.passed_filter + run.stats.failed_filter + run.stats.malformed);
}

TEST_CASE("output is independent of worker count and batch size") {
  std::string text = corpus_text(8, 8);
  SearchOptions one;
  one.workers = 1;
  SearchOptions many;
  many.workers = 8;
  many.batch_size = 37;
  auto a = scan_text(text, one);
  auto b = scan_text(text, many);
  CHECK(a.stats == b.stats);
  CHECK(a.jsonl == b.jsonl);
  CHECK_FALSE(a.jsonl.empty());
}

TEST_CASE("vertex policy restricts the doubled vertices") {
  Graph lambda = parse_edge_list(testing::read_file(testing::graph_data("lambda.edges")));
  SearchOptions opts;
  opts.vertices = {std::to_string(lambda.index_of("x"))};
  auto run = scan_text(write_graph6(lambda) + "\n", opts);
  CHECK(run.stats.doubles_tested == 1);
  CHECK(run.stats.counterexamples == 1);
}

TEST_CASE("checkpoint resume reproduces an uninterrupted run") {
  auto dir = scratch_dir("resume");
  auto input = dir / "in.g6";
  {
    std::ofstream out(input);
    out << corpus_text(8, 8);
  }
  const std::string expected = [&] {
    std::ifstream in(input);
    std::string s;
    scan_stream(in, SearchOptions{}, [&](const CounterexampleRecord& r) { s += record_json(r).dump() + "\n"; });
    return s;
  }();

  for (std::size_t stop : {1, 500, 4097, 12345}) {
    auto cp = dir / ("cp" + std::to_string(stop) + ".json");
    std::string collected;
    SearchOptions opts;
    opts.checkpoint = cp;
    opts.input_identity = identify_file(input);
    opts.batch_size = 300;
    opts.workers = 3;
    opts.flush_output = [&] { return static_cast<std::uint64_t>(collected.size()); };
    auto sink = [&](const CounterexampleRecord& r) { collected += record_json(r).dump() + "\n"; };

    opts.max_records = stop;
    {
      std::ifstream in(input);
      scan_stream(in, opts, sink);
    }
    auto saved = load_checkpoint(cp);
    REQUIRE(saved);
    CHECK(saved->next_record_index == stop);
    CHECK(saved->output_bytes == collected.size());

    opts.max_records = 0;
    SearchStats final_stats;
    {
      std::ifstream in(input);
      final_stats = scan_stream(in, opts, sink);
    }
    CHECK(collected == expected);
    CHECK(final_stats.graphs_seen == 12346);
    CHECK(final_stats.counterexamples == 10);
  }
}

TEST_CASE("checkpoint mismatches are fatal") {
  auto dir = scratch_dir("mismatch");
  auto input = dir / "in.g6";
  {
    std::ofstream out(input);
    out << "D?{\nD?{\n";
  }
  auto cp = dir / "cp.json";
  SearchOptions opts;
  opts.checkpoint = cp;
  opts.input_identity = identify_file(input);
  {
    std::ifstream in(input);
    scan_stream(in, opts, [](const CounterexampleRecord&) {});
  }

  SearchOptions other = opts;
  other.input_identity->hash = "fnv1a64:0000000000000000";
  {
    std::ifstream in(input);
    CHECK_THROWS_AS(scan_stream(in, other, [](const CounterexampleRecord&) {}), CheckpointError);
  }

  auto j = Json::parse(testing::read_file(cp.string()));
  j["schema_version"] = 99;
  {
    std::ofstream out(cp);
    out << j.dump();
  }
  CHECK_THROWS_AS(load_checkpoint(cp), CheckpointError);
  {
    std::ofstream out(cp);
    out << "{not json";
  }
  CHECK_THROWS_AS(load_checkpoint(cp), CheckpointError);
  CHECK_FALSE(load_checkpoint(dir / "absent.json").has_value());

  SearchOptions no_identity;
  no_identity.checkpoint = cp;
  std::istringstream in("D?{\n");
  CHECK_THROWS_AS(scan_stream(in, no_identity, [](const CounterexampleRecord&) {}), std::invalid_argument);
}

TEST_CASE("stats line format") {
  SearchStats s{5, 3, 1, 1, 12, 2};
  CHECK(format_stats(s) ==
        "graphs_seen=5 passed_filter=3 failed_filter=1 malformed=1 doubles_tested=12 counterexamples=2");
}

TEST_CASE("re-verification rejects doctored records") {
  Graph lambda = parse_edge_list(testing::read_file(testing::graph_data("lambda.edges")));
  auto run = scan_text(write_graph6(lambda) + "\n");
  auto good = Json::parse(run.jsonl.substr(0, run.jsonl.find('\n')));
  REQUIRE(reverify_record(good) == "");

  auto bad_base = good;
  bad_base["base"]["graph6"] = write_graph6(gen_cycle(5));
  CHECK(reverify_record(bad_base) != "");

  auto bad_cycle = good;
  bad_cycle["non_burst_cycle"] = Json::array({"a", "p#1", "c1", "p#2"});
  CHECK(reverify_record(bad_cycle) != "");

  auto bad_order = good;
  bad_order["double_order"] = 99;
  CHECK(reverify_record(bad_order) != "");
}

TEST_CASE("verdict annotations") {
  auto c5 = annotate_verdict(check_tran_condition(gen_cycle(5)));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].find("Corollary 1.12") != std::string::npos);
  CHECK(annotate_verdict(check_tran_condition(gen_complete(4))).empty());

  Graph lambda = parse_edge_list(testing::read_file(testing::graph_data("lambda.edges")));
  auto v = check_tran_condition(lambda);
  CHECK(v.all_burst);
  CHECK(annotate_verdict(v).empty());

  TranOptions bounded;
  bounded.max_len = 5;
  CHECK(annotate_verdict(check_tran_condition(gen_cycle(6), bounded)).empty());
}
