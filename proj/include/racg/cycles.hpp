#pragma once

// Induced (chordless) cycles, square diagonals and burst cycles.
//
// An induced cycle is burst when two of its non-adjacent vertices are the
// diagonal of an induced 4-cycle of the ambient graph. The square may use
// vertices off the cycle. A graph satisfies Tran's condition when every
// induced cycle of length >= 4 is burst.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// Vertices of an induced cycle in canonical form: vertices[0] is the
/// smallest index and vertices[1] < vertices.back().
struct InducedCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  friend auto operator<=>(const InducedCycle&, const InducedCycle&) = default;
};

/// Rotates and reflects a cyclic vertex sequence into canonical form.
InducedCycle canonical_cycle(std::vector<Vertex> cyclic);

/// Throws std::logic_error unless c is a canonical induced cycle of g.
void validate_cycle(const Graph& g, const InducedCycle& c);

/// An induced 4-cycle u-a-w-b-u; (u, w) and (a, b) are its non-edges.
struct Square {
  Vertex u, a, w, b;
  friend bool operator==(const Square&, const Square&) = default;
};

/// The square with diagonal (u, w) whose (a, b) is lexicographically
/// smallest (a < b), or nullopt if u and w are adjacent or no such square exists.
std::optional<Square> is_square_diagonal(const Graph& g, Vertex u, Vertex w);

/// Every pair (u, w), u < w, that is the diagonal of some induced 4-cycle, sorted.
std::vector<std::pair<Vertex, Vertex>> square_diagonal_pairs(const Graph& g);

/// The relation of square_diagonal_pairs as a graph on the same vertex set.
Graph square_diagonal_graph(const Graph& g);

struct BurstWitness {
  Vertex u, w;  // on the cycle, non-adjacent
  Square square;
  friend bool operator==(const BurstWitness&, const BurstWitness&) = default;
};

/// First (by cycle position, i < j) non-adjacent pair on c that is a square
/// diagonal, with its square. Throws std::logic_error if c is not an induced
/// cycle of g.
std::optional<BurstWitness> is_burst(const Graph& g, const InducedCycle& c);

struct EnumerationStats {
  std::map<std::size_t, std::size_t> counts;  // cycle length -> cycles visited
  std::uint64_t steps = 0;                     // search-tree nodes expanded
  bool stopped_by_visitor = false;
  bool length_bound_hit = false;  // some induced path was cut off by max_len
  bool step_budget_hit = false;

  bool truncated() const { return length_bound_hit || step_budget_hit; }
};

/// Return false to stop the enumeration.
using CycleVisitor = std::function<bool(const InducedCycle&)>;

/// Visits each induced cycle with min_len <= length <= max_len exactly once,
/// canonical, in lexicographic order of vertex sequences. max_len is clamped
/// to the graph order. step_budget = 0 means unbounded.
/// Throws std::invalid_argument unless 3 <= min_len <= max_len.
EnumerationStats enumerate_induced_cycles(const Graph& g, std::size_t min_len, std::size_t max_len,
                                          const CycleVisitor& visit, std::uint64_t step_budget = 0);

inline constexpr std::size_t kBruteForceMaxOrder = 16;

/// Independent oracle: every vertex subset of size 3..max_len inducing a
/// connected 2-regular subgraph, canonicalized and sorted. Throws
/// std::length_error above kBruteForceMaxOrder vertices.
std::vector<InducedCycle> brute_force_induced_cycles(const Graph& g, std::size_t max_len);

struct TranOptions {
  std::optional<std::size_t> max_len;  // default: the graph order
  std::size_t witness_cap = 16;
  bool early_exit = false;
  std::uint64_t step_budget = 0;
};

struct TranVerdict {
  bool all_burst = true;
  bool truncated = false;
  std::map<std::size_t, std::size_t> counts;  // length -> induced cycles examined (length >= 4)
  std::vector<InducedCycle> non_burst_cycles;   // first witness_cap, in enumeration order
  std::size_t non_burst_total = 0;
  std::size_t max_len = 0;  // bound actually used

  friend bool operator==(const TranVerdict&, const TranVerdict&) = default;
};

/// Evaluates Tran's condition over induced cycles of length 4..max_len.
/// all_burst holds iff no non-burst cycle was found and the search was not
/// truncated by max_len or the step budget.
TranVerdict check_tran_condition(const Graph& g, const TranOptions& opts = {});

/// Number of non-adjacent vertex pairs on an induced cycle of length k.
constexpr std::size_t nonadjacent_pairs_on_cycle(std::size_t k) { return k * (k - 3) / 2; }

}  // namespace racg
