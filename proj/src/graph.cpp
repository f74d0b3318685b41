#include "racg/graph.hpp"

#include <algorithm>

namespace racg {

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside vertex set universe");
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

namespace {

template <typename Op>
VertexSet combine(const VertexSet& a, const VertexSet& b, Op op) {
  if (a.universe() != b.universe()) throw std::invalid_argument("vertex sets over different universes");
  VertexSet out(a.universe());
  for (Vertex v = 0; v < a.universe(); ++v) {
    if (op(a.contains(v), b.contains(v))) out.insert(v);
  }
  return out;
}

}  // namespace

VertexSet VertexSet::operator|(const VertexSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}
VertexSet VertexSet::operator&(const VertexSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}
VertexSet VertexSet::operator-(const VertexSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

Graph::Graph(std::size_t n) : n_(n), stride_(words_for(n)), bits_(n * words_for(n), 0) {
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels_.push_back(std::to_string(i));
    index_.emplace(labels_.back(), i);
  }
}

Graph::Graph(std::vector<std::string> labels)
    : n_(labels.size()), stride_(words_for(labels.size())), bits_(n_ * stride_, 0), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
    }
  }
}

std::size_t Graph::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c / 2;
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw std::out_of_range("unknown vertex '" + std::string(label) + "'");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex '" + labels_[u] + "'");
  bits_[u * stride_ + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  bits_[v * stride_ + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  bits_[u * stride_ + v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  bits_[v * stride_ + u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (auto w = r[i]; w != 0; w &= w - 1) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) { return a.labels_ == b.labels_ && a.bits_ == b.bits_; }

bool same_adjacency(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (Vertex v = 0; v < a.order(); ++v) {
    auto ra = a.row(v);
    auto rb = b.row(v);
    if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) return false;
  }
  return true;
}

void validate(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) throw std::logic_error("loop at vertex " + g.label(u));
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        throw std::logic_error("asymmetric adjacency between " + g.label(u) + " and " + g.label(v));
      }
    }
    // Padding bits past n must stay clear.
    auto r = g.row(u);
    if (g.order() % kWordBits != 0 && !r.empty() && (r.back() >> (g.order() % kWordBits)) != 0) {
      throw std::logic_error("stray adjacency bits beyond vertex range at " + g.label(u));
    }
  }
}

VertexSet star(const Graph& g, Vertex v) {
  VertexSet s = link(g, v);
  s.insert(v);
  return s;
}

VertexSet link(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet s(g.order());
  for (Vertex u : g.neighbors(v)) s.insert(u);
  return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  auto keep = s.members();
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(g.label(v));
  Graph h(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet s = VertexSet::all(g.order());
  s.erase(v);
  return induced_subgraph(g, s);
}

Graph disjoint_union(const Graph& a, const Graph& b, std::string_view suffix) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    std::string name = l;
    while (a.find(name) || std::find(labels.begin() + static_cast<std::ptrdiff_t>(a.order()), labels.end(), name) != labels.end()) {
      name += suffix;
    }
    labels.push_back(std::move(name));
  }
  Graph g(std::move(labels));
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::string> labels(g.order());
  std::vector<bool> seen(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (perm[v] >= g.order() || seen[perm[v]]) throw std::invalid_argument("not a permutation");
    seen[perm[v]] = true;
    labels[perm[v]] = g.label(v);
  }
  Graph h(std::move(labels));
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace racg
