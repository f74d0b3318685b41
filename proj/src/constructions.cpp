#include "racg/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "racg/generators.hpp"

namespace racg {

std::string_view copy_name(Copy c) {
  switch (c) {
    case Copy::shared:
      return "shared";
    case Copy::copy1:
      return "copy1";
    case Copy::copy2:
      return "copy2";
  }
  return "?";
}

std::vector<Vertex> DoubleResult::copy_swap() const {
  std::vector<Vertex> perm(origin.size());
  std::map<std::pair<Copy, Vertex>, Vertex> where;
  for (Vertex v = 0; v < origin.size(); ++v) where[{origin[v].copy, origin[v].original}] = v;
  for (Vertex v = 0; v < origin.size(); ++v) {
    switch (origin[v].copy) {
      case Copy::shared:
        perm[v] = v;
        break;
      case Copy::copy1:
        perm[v] = where.at({Copy::copy2, origin[v].original});
        break;
      case Copy::copy2:
        perm[v] = where.at({Copy::copy1, origin[v].original});
        break;
    }
  }
  return perm;
}

DoubleResult double_over(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  std::vector<VertexOrigin> origin;
  std::vector<Vertex> first(n);   // result index of the shared or copy-1 vertex
  std::vector<Vertex> second(n);  // result index of the shared or copy-2 vertex
  for (Vertex v = 0; v < n; ++v) {
    first[v] = labels.size();
    if (s.contains(v)) {
      labels.push_back(g.label(v));
      origin.push_back({Copy::shared, v});
      second[v] = first[v];
    } else {
      labels.push_back(g.label(v) + "#1");
      origin.push_back({Copy::copy1, v});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    second[v] = labels.size();
    labels.push_back(g.label(v) + "#2");
    origin.push_back({Copy::copy2, v});
  }

  Graph out(std::move(labels));
  for (auto [u, v] : g.edges()) {
    out.add_edge(first[u], first[v]);
    out.add_edge(second[u], second[v]);  // no-op when both are shared
  }
  return {std::move(out), std::move(origin), std::nullopt};
}

DoubleResult star_double_minus(const Graph& g, Vertex x) {
  g.check_vertex(x);
  DoubleResult d = double_over(g, star(g, x));
  // x is shared, so it sits at the same index it had in g.
  Vertex at = x;
  for (Vertex v = 0; v < d.origin.size(); ++v) {
    if (d.origin[v].copy == Copy::shared && d.origin[v].original == x) at = v;
  }
  DoubleResult out{delete_vertex(d.graph, at), {}, x};
  out.origin = std::move(d.origin);
  out.origin.erase(out.origin.begin() + static_cast<std::ptrdiff_t>(at));
  return out;
}

void verify_star_double(const Graph& base, const DoubleResult& d) {
  if (!d.center) throw std::logic_error("star double without a center");
  const Vertex x = *d.center;
  const Graph& h = d.graph;
  auto fail = [](const std::string& what) { throw std::logic_error("star double: " + what); };

  if (d.origin.size() != h.order()) fail("origin map size mismatch");
  const VertexSet lk = link(base, x);
  VertexSet shared(base.order());
  for (const auto& o : d.origin) {
    if (o.original >= base.order() || o.original == x) fail("origin refers to an invalid vertex");
    if (o.copy == Copy::shared) shared.insert(o.original);
  }
  if (shared != lk) fail("shared vertices differ from link(x)");

  const std::size_t deg = base.degree(x);
  if (h.order() != 2 * base.order() - deg - 2) fail("vertex count identity violated");
  const std::size_t star_edges = induced_subgraph(base, star(base, x)).size();
  if (h.size() != 2 * base.size() - star_edges - deg) fail("edge count identity violated");

  for (Vertex u = 0; u < h.order(); ++u) {
    for (Vertex v = u + 1; v < h.order(); ++v) {
      const auto& ou = d.origin[u];
      const auto& ov = d.origin[v];
      bool opposite = (ou.copy == Copy::copy1 && ov.copy == Copy::copy2) ||
                      (ou.copy == Copy::copy2 && ov.copy == Copy::copy1);
      bool expect = !opposite && base.adjacent(ou.original, ov.original);
      if (h.adjacent(u, v) != expect) fail("adjacency of " + h.label(u) + " and " + h.label(v) + " disagrees with origins");
    }
  }
  if (!is_automorphism(h, d.copy_swap())) fail("copy swap is not an automorphism");
}

std::vector<DoubleNode> iterate_doubles(const Graph& g, const IterateOptions& opts) {
  if (opts.depth < 1) throw std::invalid_argument("iterate_doubles needs depth >= 1");

  std::vector<DoubleNode> nodes;
  nodes.push_back({{}, g, std::nullopt, std::nullopt, std::nullopt});
  std::vector<std::size_t> frontier{0};

  auto selected = [&](const Graph& h, Vertex v) {
    return opts.vertices.empty() ||
           std::find(opts.vertices.begin(), opts.vertices.end(), h.label(v)) != opts.vertices.end();
  };

  auto evaluate = [&](std::size_t first, std::size_t last) {
    // Duplicate detection is sequential; only verdicts run in parallel.
    std::vector<std::size_t> todo;
    for (std::size_t i = first; i < last; ++i) {
      auto& node = nodes[i];
      if (node.error) continue;
      if (node.graph.order() > opts.max_order) {
        node.error = "order " + std::to_string(node.graph.order()) + " exceeds limit " + std::to_string(opts.max_order);
        continue;
      }
      if (node.graph.order() <= kIsomorphismMaxOrder) {
        for (std::size_t j = 0; j < i; ++j) {
          const auto& other = nodes[j];
          if (other.duplicate_of || other.error || other.graph.order() != node.graph.order()) continue;
          if (are_isomorphic(other.graph, node.graph)) {
            node.duplicate_of = j;
            break;
          }
        }
        if (node.duplicate_of) continue;
      }
      todo.push_back(i);
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < todo.size();) {
        nodes[todo[k]].verdict = check_tran_condition(nodes[todo[k]].graph, opts.tran);
      }
    };
    unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(todo.size())));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    pool.clear();
    for (std::size_t i = first; i < last; ++i) {
      if (nodes[i].duplicate_of) nodes[i].verdict = nodes[*nodes[i].duplicate_of].verdict;
    }
  };

  evaluate(0, 1);
  for (std::size_t level = 1; level <= opts.depth; ++level) {
    const std::size_t begin = nodes.size();
    for (std::size_t parent : frontier) {
      if (nodes[parent].duplicate_of || nodes[parent].error) continue;
      const Graph pg = nodes[parent].graph;
      const auto parent_path = nodes[parent].path;
      for (Vertex v = 0; v < pg.order(); ++v) {
        if (!selected(pg, v)) continue;
        DoubleNode child;
        child.path = parent_path;
        const std::size_t order = 2 * pg.order() - pg.degree(v) - 2;
        child.path.push_back({pg.label(v), order});
        if (order > opts.max_order) {
          child.error = "order " + std::to_string(order) + " exceeds limit " + std::to_string(opts.max_order);
        } else {
          child.graph = star_double_minus(pg, v).graph;
        }
        nodes.push_back(std::move(child));
      }
    }
    evaluate(begin, nodes.size());
    frontier.clear();
    for (std::size_t i = begin; i < nodes.size(); ++i) frontier.push_back(i);
  }
  return nodes;
}

}  // namespace racg
