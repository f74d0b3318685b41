#include "racg/formats.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace racg {

namespace {

constexpr unsigned char kMinByte = 63;
constexpr unsigned char kMaxByte = 126;

bool is_g6_byte(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= kMinByte && u <= kMaxByte;
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Reads the N(n) size prefix; returns n and advances pos.
std::size_t read_order(std::string_view s, std::size_t& pos, std::size_t base) {
  auto byte_at = [&](std::size_t i) -> std::size_t {
    if (i >= s.size()) throw ParseError("graph6: truncated size prefix", base + i, ParseError::Unit::byte);
    if (!is_g6_byte(s[i])) throw ParseError("graph6: byte outside 63..126", base + i, ParseError::Unit::byte);
    return static_cast<unsigned char>(s[i]) - kMinByte;
  };
  auto first = byte_at(pos);
  if (first < 63) {
    pos += 1;
    return first;
  }
  std::size_t width = 3;
  std::size_t start = pos + 1;
  if (byte_at(pos + 1) == 63) {
    width = 6;
    start = pos + 2;
  }
  std::size_t n = 0;
  for (std::size_t k = 0; k < width; ++k) n = (n << 6) | byte_at(start + k);
  bool canonical = width == 3 ? n >= 63 : n >= 258048;
  if (!canonical) throw ParseError("graph6: malformed size prefix (non-minimal encoding)", base + pos, ParseError::Unit::byte);
  pos = start + width;
  return n;
}

void write_order(std::string& out, std::size_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kMinByte));
    return;
  }
  std::size_t width = 3;
  out.push_back(static_cast<char>(kMaxByte));
  if (n >= 258048) {
    out.push_back(static_cast<char>(kMaxByte));
    width = 6;
  }
  for (std::size_t k = width; k-- > 0;) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + kMinByte));
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  std::size_t base = 0;
  if (record.starts_with(kGraph6Header)) {
    record.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  record = trim_line_end(record);
  if (record.empty()) throw ParseError("graph6: empty record", base, ParseError::Unit::byte);

  std::size_t pos = 0;
  std::size_t n = read_order(record, pos, base);
  std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t need = (bits + 5) / 6;
  for (std::size_t i = pos; i < record.size(); ++i) {
    if (!is_g6_byte(record[i])) throw ParseError("graph6: byte outside 63..126", base + i, ParseError::Unit::byte);
  }
  if (record.size() - pos < need) {
    throw ParseError("graph6: truncated bit stream (expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(record.size() - pos) + ")",
                     base + record.size(), ParseError::Unit::byte);
  }
  if (record.size() - pos > need) {
    throw ParseError("graph6: trailing bytes after bit stream", base + pos + need, ParseError::Unit::byte);
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned char>(record[pos + k / 6]) - kMinByte;
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    auto last = static_cast<unsigned char>(record[pos + k / 6]) - kMinByte;
    if ((last & ((1U << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6: non-zero padding bits", base + pos + k / 6, ParseError::Unit::byte);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::length_error("graph too large for graph6");
  std::string out;
  write_order(out, n);
  unsigned acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kMinByte));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kMinByte));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](std::string_view name) {
    auto [it, inserted] = index.emplace(std::string(name), labels.size());
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    // '#' opens a comment only at the start of a token, so labels such as
    // "v3#1" survive.
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    std::istringstream in{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(std::move(t));
    if (tok.size() == 2 && tok[0] == "vertex") {
      intern(tok[1]);
    } else if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw ParseError("edge list: self-loop on '" + tok[0] + "'", line_no, ParseError::Unit::line);
      auto u = intern(tok[0]);
      auto v = intern(tok[1]);
      edges.emplace_back(u, v);
    } else {
      throw ParseError("edge list: expected 'u v' or 'vertex w', got '" + std::string(line) + "'", line_no,
                       ParseError::Unit::line);
    }
    if (end == text.size()) break;
  }

  Graph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) out += "vertex " + g.label(v) + "\n";
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

std::string write_dot(const Graph& g, std::string_view name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q.push_back('\\');
      q.push_back(c);
    }
    return q + "\"";
  };
  std::string out = "graph " + quote(std::string(name)) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + quote(g.label(v)) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + quote(g.label(u)) + " -- " + quote(g.label(v)) + ";\n";
  return out + "}\n";
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::edges;
  if (name == "auto") return GraphFormat::auto_detect;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

GraphFormat detect_format(std::string_view path, std::string_view content) {
  if (path.ends_with(".g6") || path.ends_with(".graph6")) return GraphFormat::graph6;
  if (path.ends_with(".edges") || path.ends_with(".txt")) return GraphFormat::edges;
  if (content.starts_with(kGraph6Header)) return GraphFormat::graph6;
  // One token made only of graph6 bytes on the first non-empty line.
  std::size_t start = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = trim(content.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    bool g6 = std::all_of(line.begin(), line.end(), is_g6_byte) && line.find('#') == std::string_view::npos;
    return g6 ? GraphFormat::graph6 : GraphFormat::edges;
  }
  return GraphFormat::edges;
}

Graph read_graph(std::string_view content, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: {
      auto body = trim(content);
      if (body.find('\n') != std::string_view::npos) {
        throw ParseError("graph6: expected a single record", body.find('\n'), ParseError::Unit::byte);
      }
      return parse_graph6(body);
    }
    case GraphFormat::edges:
      return parse_edge_list(content);
    case GraphFormat::auto_detect:
      return read_graph(content, detect_format("", content));
  }
  throw std::logic_error("unreachable");
}

}  // namespace racg
