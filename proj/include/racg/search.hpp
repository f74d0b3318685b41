#pragma once

// Streaming counterexample search over graph6 corpora.
//
// Each record G is first filtered by Tran's condition; for every G that
// passes, each selected vertex x is star-doubled and the result is checked
// again. A double containing a non-burst induced cycle yields a
// CounterexampleRecord. Records are processed in batches by a worker pool and
// emitted in input order, so output does not depend on the worker count.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "racg/cycles.hpp"
#include "racg/graph.hpp"
#include "racg/report.hpp"

namespace racg {

inline constexpr int kRecordSchemaVersion = 1;
inline constexpr int kCheckpointSchemaVersion = 1;

struct GraphSource {
  enum class Kind { file, generator, inline_literal };
  Kind kind = Kind::file;
  std::string name;  // path, generator name, or the literal itself
  std::size_t index = 0;  // record index within a file
  std::string params;     // generator parameters

  friend bool operator==(const GraphSource&, const GraphSource&) = default;
};

Json source_json(const GraphSource& s);

struct CounterexampleRecord {
  std::size_t record_index = 0;
  GraphSource source;
  Graph base;
  std::string x;  // label of the doubled vertex in base
  std::size_t double_order = 0;
  std::vector<std::string> non_burst_cycle;  // labels in the double
  std::map<std::size_t, std::size_t> base_counts;
  std::map<std::size_t, std::size_t> double_counts;  // cycles examined up to the witness
};

Json record_json(const CounterexampleRecord& r);

/// Re-derives everything from the serialized record: parses the base graph,
/// checks it satisfies Tran's condition, rebuilds the star double at x and
/// confirms the listed cycle is an induced, non-burst cycle there. Returns an
/// empty string on success, otherwise the first failed check.
std::string reverify_record(const Json& record);

struct SearchStats {
  std::uint64_t graphs_seen = 0;
  std::uint64_t passed_filter = 0;
  std::uint64_t failed_filter = 0;
  std::uint64_t malformed = 0;
  std::uint64_t doubles_tested = 0;
  std::uint64_t counterexamples = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Fixed key=value line, e.g. "graphs_seen=34 passed_filter=... counterexamples=0".
std::string format_stats(const SearchStats& s);

struct MalformedRecord {
  std::size_t record_index;
  std::uint64_t byte_offset;  // offset of the offending byte in the input
  std::string message;
};

struct InputIdentity {
  std::string path;
  std::string hash;  // "fnv1a64:<hex>" over the whole input
  std::uint64_t size = 0;

  friend bool operator==(const InputIdentity&, const InputIdentity&) = default;
};

InputIdentity identify_file(const std::filesystem::path& path);

struct SearchCheckpoint {
  int schema_version = kCheckpointSchemaVersion;
  InputIdentity input;
  std::size_t next_record_index = 0;
  std::uint64_t next_byte_offset = 0;
  std::uint64_t output_bytes = 0;
  SearchStats stats;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// nullopt if the file does not exist; throws CheckpointError on a schema
/// mismatch or unreadable content.
std::optional<SearchCheckpoint> load_checkpoint(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over path.
void save_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp);

struct SearchOptions {
  std::optional<std::size_t> max_len;
  std::vector<std::string> vertices;  // empty: every vertex
  unsigned workers = 1;
  std::size_t batch_size = 512;
  std::string input_name = "-";  // recorded in each GraphSource

  // Checkpointing requires a seekable input and its identity.
  std::optional<std::filesystem::path> checkpoint;
  std::optional<InputIdentity> input_identity;
  /// Called before each checkpoint write; must flush the sink's output and
  /// return its durable size in bytes.
  std::function<std::uint64_t()> flush_output;

  /// Stop after this many records in this invocation (0: no limit).
  std::size_t max_records = 0;

  std::function<void(const MalformedRecord&)> on_malformed;
};

using RecordSink = std::function<void(const CounterexampleRecord&)>;

/// Scans newline-separated graph6 records. Blank lines are skipped and are not
/// records. With opts.checkpoint set, an existing checkpoint for the same
/// input resumes the scan (the stream is seeked to the saved offset and
/// statistics are restored); a checkpoint is written after every batch.
SearchStats scan_stream(std::istream& in, const SearchOptions& opts, const RecordSink& sink);

/// Informational notes for a verdict. A found non-burst cycle carries the
/// citation that the Morse boundary contains an embedded circle; a verdict
/// with no such cycle carries no topological claim.
std::vector<std::string> annotate_verdict(const TranVerdict& v);

}  // namespace racg
