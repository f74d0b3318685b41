#pragma once

// Helpers shared by the unit and acceptance suites. The oracles here are
// written from the definitions and deliberately share no code with the
// library routines they check.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string test_data(const std::string& name) { return std::string(RACG_TEST_DATA) + "/" + name; }
inline std::string graph_data(const std::string& name) { return std::string(RACG_GRAPH_DATA) + "/" + name; }

/// Non-empty lines of a graph6 corpus file.
inline std::vector<std::string> corpus_lines(int order) {
  std::ifstream in(test_data("graphs_n" + std::to_string(order) + ".g6"));
  if (!in) throw std::runtime_error("missing corpus for order " + std::to_string(order));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

/// Reference graph6 decoder for orders below 63: reads the data bytes into one
/// long bit string and walks the upper triangle column by column.
/// Returns the edge set as an n x n 0/1 matrix.
inline std::vector<std::vector<int>> reference_decode(const std::string& s) {
  int n = s.at(0) - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("reference decoder handles n <= 62 only");
  std::string bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((x >> b) & 1) ? '1' : '0');
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits.at(k++) == '1') m[i][j] = m[j][i] = 1;
    }
  }
  return m;
}

inline std::vector<std::vector<int>> matrix_of(const Graph& g) {
  std::vector<std::vector<int>> m(g.order(), std::vector<int>(g.order(), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

/// Graph with independent Bernoulli(p) edges from a seeded engine.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Oracle for square diagonals: tries every ordered 4-tuple (u, a, w, b).
inline bool brute_square_diagonal(const Graph& g, Vertex u, Vertex w) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (u == w || a == b || a == u || a == w || b == u || b == w) continue;
      bool cycle = g.adjacent(u, a) && g.adjacent(a, w) && g.adjacent(w, b) && g.adjacent(b, u);
      bool induced = !g.adjacent(u, w) && !g.adjacent(a, b);
      if (cycle && induced) return true;
    }
  }
  return false;
}

}  // namespace racg::testing
