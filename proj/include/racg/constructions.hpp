#pragma once

// Doubling a graph along an induced subgraph, and the star double: double
// over st(x), then delete x. At the level of right-angled Coxeter groups the
// star double presents an index-2 reflection subgroup; here only the graphs
// are built.

#include <optional>
#include <string>
#include <vector>

#include "racg/cycles.hpp"
#include "racg/graph.hpp"

namespace racg {

enum class Copy { shared, copy1, copy2 };

std::string_view copy_name(Copy c);

struct VertexOrigin {
  Copy copy;
  Vertex original;
  friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

struct DoubleResult {
  Graph graph;
  std::vector<VertexOrigin> origin;  // indexed by result vertex
  std::optional<Vertex> center;      // deleted vertex of the original graph, if any

  /// Vertex map exchanging each copy-1 vertex with its copy-2 twin.
  std::vector<Vertex> copy_swap() const;
};

/// Two copies of g glued along the subgraph induced on s. Result vertex order:
/// one pass over g emitting shared vertices (label kept) and copy-1 vertices
/// (label + "#1"), then the copy-2 vertices (label + "#2") in original order.
DoubleResult double_over(const Graph& g, const VertexSet& s);

/// double_over(g, star(g, x)) with x removed.
DoubleResult star_double_minus(const Graph& g, Vertex x);

/// Throws std::logic_error if any structural identity of a star double fails:
/// shared vertices are exactly link(x), the vertex and edge counts, origin-map
/// adjacency, and the copy swap being an automorphism.
void verify_star_double(const Graph& base, const DoubleResult& d);

struct DerivationStep {
  std::string vertex;  // label in the graph it was applied to
  std::size_t order;   // order of the resulting graph
};

struct DoubleNode {
  std::vector<DerivationStep> path;  // empty for the root
  Graph graph;
  std::optional<TranVerdict> verdict;      // absent when skipped
  std::optional<std::size_t> duplicate_of;  // index of an earlier isomorphic node
  std::optional<std::string> error;        // per-branch resource error
};

struct IterateOptions {
  std::size_t depth = 1;
  std::vector<std::string> vertices;  // empty: every vertex
  std::size_t max_order = 48;         // larger results are reported, not checked
  TranOptions tran;
  unsigned workers = 1;
};

/// Breadth-first star doubles up to opts.depth, checking Tran's condition at
/// every node (root included). Nodes come out in BFS order, children by
/// increasing vertex index. With order <= 12 a node isomorphic to an earlier
/// one is marked duplicate_of, reuses its verdict and is not expanded.
std::vector<DoubleNode> iterate_doubles(const Graph& g, const IterateOptions& opts);

}  // namespace racg
