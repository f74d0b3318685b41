#pragma once

// Finite simple graphs with bit-row adjacency.
//
// Vertices are indices 0..n-1. Each vertex carries a unique string label used
// only for I/O; every algorithm works on indices. Adjacency is stored as one
// row of 64-bit words per vertex. For n <= 64 a row is a single word, which is
// the representation the hot paths (cycle enumeration, search) are tuned for.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace racg {

using Vertex = std::size_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// A subset of the vertices of a graph with a fixed universe size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}

  static VertexSet all(std::size_t universe);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);

  std::size_t universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool contains(Vertex v) const {
    return v < universe_ && (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> members() const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices labeled "0".."n-1".
  explicit Graph(std::size_t n);
  /// Edgeless graph with the given labels; throws std::invalid_argument on duplicates.
  explicit Graph(std::vector<std::string> labels);

  std::size_t order() const { return n_; }
  std::size_t size() const;  // edge count
  std::size_t row_words() const { return stride_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find, but throws std::out_of_range for an unknown label.
  Vertex index_of(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * stride_, stride_};
  }
  /// Single-word neighbourhood; only valid when order() <= 64.
  std::uint64_t row64(Vertex v) const { return bits_[v]; }

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for graph of order " +
                              std::to_string(n_));
    }
  }

  /// Adjacency and labels must match exactly.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
};

/// Same vertex count and identical adjacency by index; labels ignored.
bool same_adjacency(const Graph& a, const Graph& b);

/// Throws std::logic_error if adjacency is not symmetric or has a loop.
void validate(const Graph& g);

/// N(v) together with v.
VertexSet star(const Graph& g, Vertex v);
/// N(v).
VertexSet link(const Graph& g, Vertex v);

/// Subgraph induced on s, vertices kept in increasing index order with their labels.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertex(const Graph& g, Vertex v);

/// Disjoint union; labels of the second operand get `suffix` appended if they collide.
Graph disjoint_union(const Graph& a, const Graph& b, std::string_view suffix = "'");

/// Relabel by permutation: vertex v of g becomes vertex perm[v] of the result.
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace racg
