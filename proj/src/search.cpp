#include "racg/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

#include "racg/constructions.hpp"
#include "racg/formats.hpp"

namespace racg {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json stats_json(const SearchStats& s) {
  return Json{{"graphs_seen", s.graphs_seen},       {"passed_filter", s.passed_filter},
              {"failed_filter", s.failed_filter},   {"malformed", s.malformed},
              {"doubles_tested", s.doubles_tested}, {"counterexamples", s.counterexamples}};
}

SearchStats stats_from_json(const Json& j) {
  SearchStats s;
  s.graphs_seen = j.at("graphs_seen").get<std::uint64_t>();
  s.passed_filter = j.at("passed_filter").get<std::uint64_t>();
  s.failed_filter = j.at("failed_filter").get<std::uint64_t>();
  s.malformed = j.at("malformed").get<std::uint64_t>();
  s.doubles_tested = j.at("doubles_tested").get<std::uint64_t>();
  s.counterexamples = j.at("counterexamples").get<std::uint64_t>();
  return s;
}

struct Line {
  std::size_t record_index;
  std::uint64_t offset;
  std::string text;
};

struct Outcome {
  enum class Kind { malformed, failed_filter, passed_filter } kind = Kind::malformed;
  std::optional<MalformedRecord> error;
  std::uint64_t doubles_tested = 0;
  std::vector<CounterexampleRecord> records;
};

Outcome process(const Line& line, const SearchOptions& opts) {
  Outcome out;
  Graph g;
  try {
    g = parse_graph6(line.text);
  } catch (const ParseError& e) {
    out.error = MalformedRecord{line.record_index, line.offset + e.position(), e.what()};
    return out;
  }

  TranOptions filter{opts.max_len, 1, true, 0};
  TranVerdict base = check_tran_condition(g, filter);
  if (!base.all_burst) {
    out.kind = Outcome::Kind::failed_filter;
    return out;
  }
  out.kind = Outcome::Kind::passed_filter;

  for (Vertex x = 0; x < g.order(); ++x) {
    if (!opts.vertices.empty() &&
        std::find(opts.vertices.begin(), opts.vertices.end(), g.label(x)) == opts.vertices.end()) {
      continue;
    }
    DoubleResult d = star_double_minus(g, x);
    ++out.doubles_tested;
    TranVerdict dv = check_tran_condition(d.graph, filter);
    if (dv.non_burst_cycles.empty()) continue;
    CounterexampleRecord r;
    r.record_index = line.record_index;
    r.source = GraphSource{GraphSource::Kind::file, opts.input_name, line.record_index, {}};
    r.base = g;
    r.x = g.label(x);
    r.double_order = d.graph.order();
    r.non_burst_cycle = cycle_labels(d.graph, dv.non_burst_cycles.front());
    r.base_counts = base.counts;
    r.double_counts = dv.counts;
    out.records.push_back(std::move(r));
  }
  return out;
}

std::string trim_cr(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

}  // namespace

Json source_json(const GraphSource& s) {
  switch (s.kind) {
    case GraphSource::Kind::file:
      return Json{{"kind", "file"}, {"path", s.name}, {"index", s.index}};
    case GraphSource::Kind::generator:
      return Json{{"kind", "generator"}, {"name", s.name}, {"params", s.params}};
    case GraphSource::Kind::inline_literal:
      return Json{{"kind", "inline"}, {"literal", s.name}};
  }
  return Json{};
}

Json record_json(const CounterexampleRecord& r) {
  return Json{{"schema", kRecordSchemaVersion},
              {"record_index", r.record_index},
              {"source", source_json(r.source)},
              {"base", Json{{"graph6", write_graph6(r.base)}, {"order", r.base.order()}, {"size", r.base.size()}}},
              {"x", r.x},
              {"double_order", r.double_order},
              {"non_burst_cycle", r.non_burst_cycle},
              {"verdict_summary", Json{{"base_counts", counts_json(r.base_counts)},
                                       {"double_counts", counts_json(r.double_counts)}}}};
}

std::string reverify_record(const Json& record) {
  try {
    if (record.at("schema").get<int>() != kRecordSchemaVersion) return "schema version mismatch";
    Graph base = parse_graph6(record.at("base").at("graph6").get<std::string>());
    if (!check_tran_condition(base).all_burst) return "base graph fails Tran's condition";
    auto x = base.find(record.at("x").get<std::string>());
    if (!x) return "vertex x not in base graph";
    DoubleResult d = star_double_minus(base, *x);
    verify_star_double(base, d);
    if (d.graph.order() != record.at("double_order").get<std::size_t>()) return "double order mismatch";
    std::vector<Vertex> cyc;
    for (const auto& label : record.at("non_burst_cycle")) {
      auto v = d.graph.find(label.get<std::string>());
      if (!v) return "cycle vertex " + label.get<std::string>() + " not in double";
      cyc.push_back(*v);
    }
    if (cyc.size() < 4) return "cycle shorter than 4";
    InducedCycle c = canonical_cycle(cyc);
    validate_cycle(d.graph, c);
    if (is_burst(d.graph, c)) return "cycle is burst";
    if (check_tran_condition(d.graph).all_burst) return "double satisfies Tran's condition";
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

std::string format_stats(const SearchStats& s) {
  std::ostringstream os;
  os << "graphs_seen=" << s.graphs_seen << " passed_filter=" << s.passed_filter
     << " failed_filter=" << s.failed_filter << " malformed=" << s.malformed
     << " doubles_tested=" << s.doubles_tested << " counterexamples=" << s.counterexamples;
  return os.str();
}

InputIdentity identify_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint64_t h = kFnvOffset;
  std::uint64_t size = 0;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    auto got = static_cast<std::size_t>(in.gcount());
    for (std::size_t i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= kFnvPrime;
    }
    size += got;
  }
  return {path.string(), "fnv1a64:" + hex64(h), size};
}

std::optional<SearchCheckpoint> load_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw CheckpointError("unreadable checkpoint " + path.string() + ": " + e.what());
  }
  try {
    SearchCheckpoint cp;
    cp.schema_version = j.at("schema_version").get<int>();
    if (cp.schema_version != kCheckpointSchemaVersion) {
      throw CheckpointError("checkpoint schema version " + std::to_string(cp.schema_version) + ", expected " +
                            std::to_string(kCheckpointSchemaVersion));
    }
    const auto& input = j.at("input");
    cp.input = {input.at("path").get<std::string>(), input.at("hash").get<std::string>(),
                input.at("size").get<std::uint64_t>()};
    cp.next_record_index = j.at("next_record_index").get<std::size_t>();
    cp.next_byte_offset = j.at("next_byte_offset").get<std::uint64_t>();
    cp.output_bytes = j.at("output_bytes").get<std::uint64_t>();
    cp.stats = stats_from_json(j.at("stats"));
    return cp;
  } catch (const CheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointError("malformed checkpoint " + path.string() + ": " + e.what());
  }
}

void save_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp) {
  Json j{{"schema_version", cp.schema_version},
         {"input", Json{{"path", cp.input.path}, {"hash", cp.input.hash}, {"size", cp.input.size}}},
         {"next_record_index", cp.next_record_index},
         {"next_byte_offset", cp.next_byte_offset},
         {"output_bytes", cp.output_bytes},
         {"stats", stats_json(cp.stats)}};
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SearchStats scan_stream(std::istream& in, const SearchOptions& opts, const RecordSink& sink) {
  SearchStats stats;
  std::size_t record_index = 0;
  std::uint64_t offset = 0;

  if (opts.checkpoint) {
    if (!opts.input_identity) throw std::invalid_argument("checkpointing needs the input identity");
    if (auto cp = load_checkpoint(*opts.checkpoint)) {
      if (!(cp->input == *opts.input_identity)) {
        throw CheckpointError("checkpoint was written for input " + cp->input.path + " (" + cp->input.hash +
                              "), not " + opts.input_identity->path + " (" + opts.input_identity->hash + ")");
      }
      stats = cp->stats;
      record_index = cp->next_record_index;
      offset = cp->next_byte_offset;
      in.seekg(static_cast<std::streamoff>(offset));
      if (!in) throw CheckpointError("cannot seek input to checkpoint offset " + std::to_string(offset));
    }
  }

  const unsigned workers = std::max(1U, opts.workers);
  const std::size_t batch_size = std::max<std::size_t>(1, opts.batch_size);
  std::size_t processed_here = 0;
  bool eof = false;

  while (!eof) {
    std::vector<Line> batch;
    while (batch.size() < batch_size) {
      if (opts.max_records != 0 && processed_here + batch.size() >= opts.max_records) break;
      std::string text;
      if (!std::getline(in, text)) {
        eof = true;
        break;
      }
      const std::uint64_t start = offset;
      offset += text.size() + (in.eof() ? 0 : 1);
      text = trim_cr(std::move(text));
      if (text.empty()) continue;
      batch.push_back({record_index++, start, std::move(text)});
    }
    if (batch.empty()) break;

    std::vector<Outcome> outcomes(batch.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < batch.size();) outcomes[k] = process(batch[k], opts);
    };
    {
      std::vector<std::jthread> pool;
      const unsigned n_threads = std::min<unsigned>(workers, static_cast<unsigned>(batch.size()));
      for (unsigned w = 1; w < n_threads; ++w) pool.emplace_back(work);
      work();
    }

    for (auto& o : outcomes) {
      ++stats.graphs_seen;
      switch (o.kind) {
        case Outcome::Kind::malformed:
          ++stats.malformed;
          if (opts.on_malformed) opts.on_malformed(*o.error);
          break;
        case Outcome::Kind::failed_filter:
          ++stats.failed_filter;
          break;
        case Outcome::Kind::passed_filter:
          ++stats.passed_filter;
          break;
      }
      stats.doubles_tested += o.doubles_tested;
      for (const auto& r : o.records) {
        ++stats.counterexamples;
        sink(r);
      }
    }
    processed_here += batch.size();

    if (opts.checkpoint) {
      SearchCheckpoint cp;
      cp.input = *opts.input_identity;
      cp.next_record_index = record_index;
      cp.next_byte_offset = offset;
      cp.output_bytes = opts.flush_output ? opts.flush_output() : 0;
      cp.stats = stats;
      save_checkpoint(*opts.checkpoint, cp);
    }
    if (opts.max_records != 0 && processed_here >= opts.max_records) break;
  }
  return stats;
}

std::vector<std::string> annotate_verdict(const TranVerdict& v) {
  if (v.non_burst_cycles.empty()) return {};
  return {"non-burst induced cycle present: the Morse boundary of the right-angled Coxeter group "
          "on this graph contains an embedded circle (Tran, Corollary 1.12)"};
}

}  // namespace racg
