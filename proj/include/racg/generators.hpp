#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// C_n with vertices v1..vn in cyclic order. Throws std::invalid_argument for n < 3.
Graph gen_cycle(std::size_t n);
/// P_n with vertices v1..vn.
Graph gen_path(std::size_t n);
/// K_n with vertices v1..vn.
Graph gen_complete(std::size_t n);
/// 1-skeleton of the d-cube. Vertex i is labelled by its d-bit binary string,
/// most significant coordinate first; adjacent iff the strings differ in one place.
/// Q_0 is a single vertex labelled "e".
Graph gen_hypercube(std::size_t d);

/// G(n, p) with a fixed, platform-independent draw order (pairs (i, j), i < j,
/// row-major; one 64-bit mt19937_64 output per pair).
Graph gen_random(std::size_t n, double p, std::uint64_t seed);
/// Uniform labelled tree from a random Pruefer sequence; n >= 1.
Graph gen_random_tree(std::size_t n, std::uint64_t seed);

inline constexpr std::size_t kIsomorphismMaxOrder = 12;

/// Brute-force isomorphism test with degree-class pruning. Throws
/// std::length_error above kIsomorphismMaxOrder vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

/// An isomorphism g -> h as a vertex map, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

/// True if perm (a vertex map of g onto itself) preserves adjacency and non-adjacency.
bool is_automorphism(const Graph& g, std::span<const Vertex> perm);

}  // namespace racg
