#pragma once

// Graph interchange: graph6 (read/write), a labelled edge-list text format
// (read/write) and DOT (write only).

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "racg/graph.hpp"

namespace racg {

/// Input error with the byte offset (graph6) or 1-based line number (edge list) where it was found.
class ParseError : public std::runtime_error {
 public:
  enum class Unit { byte, line };

  ParseError(const std::string& what, std::size_t position, Unit unit)
      : std::runtime_error(what + (unit == Unit::byte ? " at byte " : " at line ") + std::to_string(position)),
        position_(position),
        unit_(unit) {}

  std::size_t position() const { return position_; }
  Unit unit() const { return unit_; }

 private:
  std::size_t position_;
  Unit unit_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kGraph6MaxOrder = (std::size_t{1} << 36) - 1;

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Vertices are labelled "0".."n-1".
Graph parse_graph6(std::string_view record);

/// Encodes g by its current vertex order; labels are not stored.
std::string write_graph6(const Graph& g);

/// Parses "u v" edge lines, "vertex w" declarations, blank lines and "#"
/// comments. Vertices are numbered in order of first mention.
Graph parse_edge_list(std::string_view text);

/// Emits "vertex w" for every vertex, then one "u v" line per edge.
std::string write_edge_list(const Graph& g);

std::string write_dot(const Graph& g, std::string_view name = "G");

enum class GraphFormat { graph6, edges, auto_detect };

GraphFormat parse_format_name(std::string_view name);

/// Resolves auto_detect from the file extension, then by sniffing the content.
GraphFormat detect_format(std::string_view path, std::string_view content);

/// Reads exactly one graph from text in the given format.
Graph read_graph(std::string_view content, GraphFormat format);

}  // namespace racg
