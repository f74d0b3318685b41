#include "racg/generators.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <random>
#include <set>
#include <string>

namespace racg {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("gen_cycle needs n >= 3, got " + std::to_string(n));
  Graph g(numbered(n));
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph gen_path(std::size_t n) {
  Graph g(numbered(n));
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph gen_complete(std::size_t n) {
  Graph g(numbered(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph gen_hypercube(std::size_t d) {
  if (d >= 20) throw std::invalid_argument("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    for (std::size_t k = d; k-- > 0;) s.push_back(((i >> k) & 1U) ? '1' : '0');
    labels.push_back(d == 0 ? std::string("e") : s);
  }
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t j = i ^ (std::size_t{1} << k);
      if (i < j) g.add_edge(i, j);
    }
  }
  return g;
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // Compare raw draws against a threshold so the graph does not depend on
  // the standard library's distribution implementations.
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      std::uint64_t draw = rng();
      if (p >= 1.0 || static_cast<long double>(draw) < scaled) g.add_edge(i, j);
    }
  }
  return g;
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);
  std::vector<std::size_t> deg(n, 1);
  for (auto c : code) ++deg[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  for (auto c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, c);
    if (--deg[c] == 1) leaves.insert(c);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::size_t> g_class;
  std::vector<std::size_t> h_class;
  std::vector<Vertex> order;  // g vertices, most constrained first
  std::vector<Vertex> map;
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    Vertex u = order[depth];
    for (Vertex cand = 0; cand < h.order(); ++cand) {
      if (used[cand] || h_class[cand] != g_class[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        Vertex w = order[k];
        ok = g.adjacent(u, w) == h.adjacent(cand, map[w]);
      }
      if (!ok) continue;
      map[u] = cand;
      used[cand] = true;
      if (extend(depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  }
};

// Degree plus the sorted multiset of neighbour degrees, interned to an integer.
std::vector<std::size_t> vertex_classes(const Graph& g, std::map<std::vector<std::size_t>, std::size_t>& ids) {
  std::vector<std::size_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> key{g.degree(v)};
    std::vector<std::size_t> nd;
    for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    out[v] = ids.emplace(key, ids.size()).first->second;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder) {
    throw std::length_error("isomorphism test limited to " + std::to_string(kIsomorphismMaxOrder) + " vertices");
  }
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;

  std::map<std::vector<std::size_t>, std::size_t> ids;
  IsoSearch s{g, h, vertex_classes(g, ids), vertex_classes(h, ids), {}, std::vector<Vertex>(g.order()),
              std::vector<bool>(h.order(), false)};
  auto gc = s.g_class;
  auto hc = s.h_class;
  std::sort(gc.begin(), gc.end());
  std::sort(hc.begin(), hc.end());
  if (gc != hc) return std::nullopt;

  // Smallest classes first, then BFS-ish by adjacency to already ordered vertices.
  std::map<std::size_t, std::size_t> class_size;
  for (auto c : s.g_class) ++class_size[c];
  std::vector<bool> placed(g.order(), false);
  while (s.order.size() < g.order()) {
    Vertex best = g.order();
    std::tuple<std::size_t, std::size_t, Vertex> best_key{};
    for (Vertex v = 0; v < g.order(); ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex w : s.order) links += g.adjacent(v, w) ? 1 : 0;
      std::tuple<std::size_t, std::size_t, Vertex> key{g.order() - links, class_size[s.g_class[v]], v};
      if (best == g.order() || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    s.order.push_back(best);
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : perm) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    }
  }
  return true;
}

}  // namespace racg
