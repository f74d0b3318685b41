// racg: command-line front end for the graph checks, doubles and search.
//
// Exit status: 0 when the condition holds or the command succeeded, 1 when
// Tran's condition fails (or could not be established under --max-len), 2 on
// usage or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "racg/constructions.hpp"
#include "racg/cycles.hpp"
#include "racg/formats.hpp"
#include "racg/generators.hpp"
#include "racg/report.hpp"
#include "racg/search.hpp"

namespace {

using namespace racg;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

// Raised for errors the user can fix; reported on stderr with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string format = "auto";
  std::string output;
  std::size_t min_len = 4;
  std::optional<std::size_t> max_len;
  std::size_t witness_cap = 16;
  std::vector<std::string> vertices;
  bool check = false;
  std::optional<std::size_t> depth;
  unsigned workers = 0;
  std::optional<std::string> checkpoint;
  std::optional<std::string> jsonl;
  std::size_t batch_size = 512;
  std::size_t max_records = 0;
  std::vector<std::string> gen_args;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const Config& cfg) {
  const std::string content = read_input(cfg.input);
  GraphFormat format = parse_format_name(cfg.format);
  if (format == GraphFormat::auto_detect) format = detect_format(cfg.input == "-" ? "" : cfg.input, content);
  return read_graph(content, format);
}

unsigned worker_count(const Config& cfg) {
  if (cfg.workers != 0) return cfg.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

TranOptions tran_options(const Config& cfg) {
  TranOptions opts;
  opts.max_len = cfg.max_len;
  opts.witness_cap = cfg.witness_cap;
  return opts;
}

Vertex require_vertex(const Graph& g, const std::string& label) {
  if (auto v = g.find(label)) return *v;
  throw UsageError("no vertex labelled '" + label + "'");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json check_report(const Graph& g, const TranVerdict& v) {
  Json j = verdict_json(g, v);
  j["annotations"] = annotate_verdict(v);
  return j;
}

void print_check_text(std::ostream& out, const Graph& g, const TranVerdict& v) {
  if (v.all_burst) {
    out << "holds: every induced cycle of length >= 4 is burst\n";
  } else if (v.non_burst_total > 0) {
    out << "fails: " << v.non_burst_total << " non-burst induced cycle(s)\n";
  } else {
    out << "unknown: no non-burst cycle up to length " << v.max_len << ", longer cycles not examined\n";
  }
  for (const auto& [len, count] : v.counts) out << "  length " << len << ": " << count << "\n";
  for (const auto& c : v.non_burst_cycles) {
    out << "  non-burst:";
    for (const auto& label : cycle_labels(g, c)) out << " " << label;
    out << "\n";
  }
  for (const auto& note : annotate_verdict(v)) out << "note: " << note << "\n";
}

int verdict_status(const TranVerdict& v) { return v.all_burst ? kExitHolds : kExitFails; }

void write_graph(std::ostream& out, const Graph& g, const std::string& mode) {
  if (mode == "graph6") {
    out << write_graph6(g) << "\n";
  } else if (mode == "edges") {
    out << write_edge_list(g);
  } else if (mode == "dot") {
    out << write_dot(g);
  } else if (mode == "json") {
    out << graph_json(g).dump(2) << "\n";
  } else {
    throw UsageError("unsupported output '" + mode + "'");
  }
}

int cmd_check(const Config& cfg) {
  Graph g = load_graph(cfg);
  TranVerdict v = check_tran_condition(g, tran_options(cfg));
  if (cfg.output == "text") {
    print_check_text(std::cout, g, v);
  } else if (cfg.output.empty() || cfg.output == "json") {
    print_json(check_report(g, v));
  } else {
    throw UsageError("check supports --output json or text");
  }
  return verdict_status(v);
}

int cmd_cycles(const Config& cfg) {
  Graph g = load_graph(cfg);
  const std::size_t max_len = cfg.max_len.value_or(std::max<std::size_t>(g.order(), cfg.min_len));
  if (cfg.min_len < 3 || cfg.min_len > max_len) throw UsageError("need 3 <= --min-len <= --max-len");
  Json j = cycles_json(g, cfg.min_len, max_len);
  if (cfg.output == "text") {
    for (const auto& c : j["cycles"]) {
      std::cout << (c["burst"].get<bool>() ? "burst    " : "nonburst ");
      for (const auto& label : c["vertices"]) std::cout << " " << label.get<std::string>();
      std::cout << "\n";
    }
    std::cout << "total " << j["total"] << ", burst " << j["burst"] << "\n";
  } else if (cfg.output.empty() || cfg.output == "json") {
    print_json(j);
  } else {
    throw UsageError("cycles supports --output json or text");
  }
  return kExitHolds;
}

int cmd_double_iterate(const Config& cfg, const Graph& g) {
  IterateOptions opts;
  opts.depth = *cfg.depth;
  opts.vertices = cfg.vertices;
  opts.tran = tran_options(cfg);
  opts.workers = worker_count(cfg);
  if (opts.depth < 1) throw UsageError("--depth must be at least 1");
  if (!cfg.output.empty() && cfg.output != "json") throw UsageError("double --depth supports --output json only");
  print_json(iterate_json(iterate_doubles(g, opts)));
  return kExitHolds;
}

int cmd_double(const Config& cfg) {
  Graph g = load_graph(cfg);
  if (cfg.depth) return cmd_double_iterate(cfg, g);
  if (cfg.vertices.size() != 1) throw UsageError("double needs exactly one --vertex (or --depth)");
  DoubleResult d = star_double_minus(g, require_vertex(g, cfg.vertices[0]));
  verify_star_double(g, d);

  std::optional<TranVerdict> verdict;
  if (cfg.check) verdict = check_tran_condition(d.graph, tran_options(cfg));

  const std::string mode = cfg.output.empty() ? "json" : cfg.output;
  if (mode == "json") {
    Json j = double_json(g, d);
    if (verdict) j["check"] = check_report(d.graph, *verdict);
    print_json(j);
  } else if (mode == "text") {
    std::cout << "double of " << g.label(*d.center) << ": " << d.graph.order() << " vertices, " << d.graph.size()
              << " edges\n";
    for (Vertex v = 0; v < d.graph.order(); ++v) {
      std::cout << "  " << d.graph.label(v) << " <- " << copy_name(d.origin[v].copy) << " "
                << g.label(d.origin[v].original) << "\n";
    }
    if (verdict) print_check_text(std::cout, d.graph, *verdict);
  } else {
    const char* comment = mode == "dot" ? "// " : "# ";
    if (mode != "graph6") {
      std::cout << comment << "star double of " << g.label(*d.center) << "\n";
      for (Vertex v = 0; v < d.graph.order(); ++v) {
        std::cout << comment << "origin " << d.graph.label(v) << " " << copy_name(d.origin[v].copy) << " "
                  << g.label(d.origin[v].original) << "\n";
      }
    }
    write_graph(std::cout, d.graph, mode);
    // Keep stdout a clean graph; the check goes to stderr.
    if (verdict) print_check_text(std::cerr, d.graph, *verdict);
  }
  return verdict ? verdict_status(*verdict) : kExitHolds;
}

int cmd_search(const Config& cfg) {
  SearchOptions opts;
  opts.max_len = cfg.max_len;
  opts.vertices = cfg.vertices;
  opts.workers = worker_count(cfg);
  opts.batch_size = cfg.batch_size;
  opts.max_records = cfg.max_records;
  opts.input_name = cfg.input;
  opts.on_malformed = [](const MalformedRecord& m) {
    std::cerr << "malformed record " << m.record_index << " at byte " << m.byte_offset << ": " << m.message << "\n";
  };

  std::ifstream file;
  std::istream* in = &std::cin;
  if (cfg.input != "-") {
    file.open(cfg.input, std::ios::binary);
    if (!file) throw UsageError("cannot open " + cfg.input);
    in = &file;
  }

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (cfg.checkpoint) {
    if (cfg.input == "-") throw UsageError("--checkpoint needs a file input");
    if (!cfg.jsonl) throw UsageError("--checkpoint needs --jsonl");
    opts.checkpoint = *cfg.checkpoint;
    opts.input_identity = identify_file(cfg.input);
  }
  if (cfg.jsonl) {
    std::uint64_t keep = 0;
    if (opts.checkpoint) {
      if (auto cp = load_checkpoint(*opts.checkpoint)) {
        if (cp->input != *opts.input_identity) throw CheckpointError("checkpoint belongs to a different input");
        keep = cp->output_bytes;
      }
    }
    // Output written after the last checkpoint is discarded and regenerated.
    if (keep > 0 && std::filesystem::exists(*cfg.jsonl)) {
      if (std::filesystem::file_size(*cfg.jsonl) < keep) throw CheckpointError("output shorter than checkpoint");
      std::filesystem::resize_file(*cfg.jsonl, keep);
      out_file.open(*cfg.jsonl, std::ios::binary | std::ios::app);
    } else {
      if (keep > 0) throw CheckpointError("output file missing for checkpoint");
      out_file.open(*cfg.jsonl, std::ios::binary | std::ios::trunc);
    }
    if (!out_file) throw UsageError("cannot write " + *cfg.jsonl);
    out = &out_file;
  }
  opts.flush_output = [&] {
    out->flush();
    if (!*out) throw std::runtime_error("write failed");
    return out_file.is_open() ? static_cast<std::uint64_t>(out_file.tellp()) : 0;
  };

  SearchStats stats = scan_stream(*in, opts, [&](const CounterexampleRecord& r) { *out << record_json(r).dump() << "\n"; });
  out->flush();
  if (!*out) throw std::runtime_error("write failed");
  std::cerr << format_stats(stats) << "\n";
  return kExitHolds;
}

std::size_t gen_size(const std::vector<std::string>& args, std::size_t i) {
  if (i >= args.size()) throw UsageError("missing generator argument");
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(args[i], &pos);
    if (pos != args[i].size()) throw std::invalid_argument(args[i]);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad generator argument '" + args[i] + "'");
  }
}

int cmd_gen(const Config& cfg) {
  const auto& a = cfg.gen_args;
  if (a.empty()) throw UsageError("gen needs a family: cycle N, path N, complete N, hypercube D, random N P SEED, tree N SEED");
  const std::string& family = a[0];
  Graph g;
  std::size_t expected = 2;
  if (family == "cycle") {
    g = gen_cycle(gen_size(a, 1));
  } else if (family == "path") {
    g = gen_path(gen_size(a, 1));
  } else if (family == "complete") {
    g = gen_complete(gen_size(a, 1));
  } else if (family == "hypercube") {
    g = gen_hypercube(gen_size(a, 1));
  } else if (family == "random") {
    if (a.size() < 4) throw UsageError("gen random N P SEED");
    double p = 0;
    try {
      p = std::stod(a[2]);
    } catch (const std::logic_error&) {
      throw UsageError("bad probability '" + a[2] + "'");
    }
    g = gen_random(gen_size(a, 1), p, gen_size(a, 3));
    expected = 4;
  } else if (family == "tree") {
    g = gen_random_tree(gen_size(a, 1), gen_size(a, 2));
    expected = 3;
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (a.size() != expected) throw UsageError("too many arguments for " + family);
  write_graph(std::cout, g, cfg.output.empty() ? "graph6" : cfg.output);
  return kExitHolds;
}

int cmd_convert(const Config& cfg) {
  if (cfg.output.empty()) throw UsageError("convert needs --output graph6, edges, dot or json");
  write_graph(std::cout, load_graph(cfg), cfg.output);
  return kExitHolds;
}

void add_input(CLI::App* cmd, Config& cfg) {
  cmd->add_option("input", cfg.input, "Graph file, or - for standard input")->capture_default_str();
  cmd->add_option("--format", cfg.format, "Input format: graph6, edges or auto")
      ->check(CLI::IsMember({"graph6", "g6", "edges", "edgelist", "auto"}))
      ->capture_default_str();
}

void add_bounds(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--max-len", cfg.max_len, "Longest cycle length examined")->check(CLI::PositiveNumber);
  cmd->add_option("--witness-cap", cfg.witness_cap, "Non-burst cycles listed at most")->capture_default_str();
}

void add_output(CLI::App* cmd, Config& cfg, std::vector<std::string> modes) {
  cmd->add_option("--output", cfg.output, "Output mode")->check(CLI::IsMember(std::move(modes)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled Coxeter group defining graphs: burst cycles, star doubles, search"};
  app.require_subcommand(1);
  Config cfg;

  auto* check = app.add_subcommand("check", "Test whether every induced cycle of length >= 4 is burst");
  add_input(check, cfg);
  add_bounds(check, cfg);
  add_output(check, cfg, {"json", "text"});

  auto* cycles = app.add_subcommand("cycles", "List induced cycles with burst witnesses");
  add_input(cycles, cfg);
  cycles->add_option("--min-len", cfg.min_len, "Shortest cycle length listed")->capture_default_str();
  cycles->add_option("--max-len", cfg.max_len, "Longest cycle length listed");
  add_output(cycles, cfg, {"json", "text"});

  auto* dbl = app.add_subcommand("double", "Double over the star of a vertex, then delete it");
  add_input(dbl, cfg);
  add_bounds(dbl, cfg);
  dbl->add_option("--vertex", cfg.vertices, "Vertex label (repeatable with --depth)");
  dbl->add_flag("--check", cfg.check, "Also check the result");
  dbl->add_option("--depth", cfg.depth, "Iterate doubles breadth-first to this depth");
  dbl->add_option("--workers", cfg.workers, "Worker threads (default: all cores)");
  add_output(dbl, cfg, {"json", "text", "dot", "graph6", "edges"});

  auto* search = app.add_subcommand("search", "Scan graph6 records for graphs whose star double breaks the condition");
  add_input(search, cfg);
  search->add_option("--max-len", cfg.max_len, "Longest cycle length examined")->check(CLI::PositiveNumber);
  search->add_option("--vertex", cfg.vertices, "Only double vertices with these labels");
  search->add_option("--workers", cfg.workers, "Worker threads (default: all cores)");
  search->add_option("--checkpoint", cfg.checkpoint, "Checkpoint file; resumes when present");
  search->add_option("--jsonl", cfg.jsonl, "Write records here instead of standard output");
  search->add_option("--batch-size", cfg.batch_size, "Records per batch")->check(CLI::PositiveNumber);
  search->add_option("--max-records", cfg.max_records, "Stop after this many records");

  auto* gen = app.add_subcommand("gen", "Generate a graph: cycle N, path N, complete N, hypercube D, random N P SEED, tree N SEED");
  gen->add_option("args", cfg.gen_args, "Family and parameters")->required();
  add_output(gen, cfg, {"graph6", "edges", "dot", "json"});

  auto* convert = app.add_subcommand("convert", "Convert between graph formats");
  add_input(convert, cfg);
  add_output(convert, cfg, {"graph6", "edges", "dot", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*cycles) return cmd_cycles(cfg);
    if (*dbl) return cmd_double(cfg);
    if (*search) return cmd_search(cfg);
    if (*gen) return cmd_gen(cfg);
    return cmd_convert(cfg);
  } catch (const std::exception& e) {
    std::cerr << "racg: error: " << e.what() << "\n";
    return kExitUsage;
  }
}
