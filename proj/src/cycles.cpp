#include "racg/cycles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace racg {

InducedCycle canonical_cycle(std::vector<Vertex> cyclic) {
  if (cyclic.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  auto min_it = std::min_element(cyclic.begin(), cyclic.end());
  std::rotate(cyclic.begin(), min_it, cyclic.end());
  if (cyclic[1] > cyclic.back()) std::reverse(cyclic.begin() + 1, cyclic.end());
  return InducedCycle{std::move(cyclic)};
}

void validate_cycle(const Graph& g, const InducedCycle& c) {
  const auto& vs = c.vertices;
  const std::size_t k = vs.size();
  if (k < 3) throw std::logic_error("cycle shorter than 3");
  for (Vertex v : vs) {
    if (v >= g.order()) throw std::logic_error("cycle vertex out of range");
  }
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::logic_error("cycle repeats a vertex");
  if (vs[0] != sorted[0] || vs[1] > vs[k - 1]) throw std::logic_error("cycle not in canonical form");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(vs[i], vs[j]) != consecutive) {
        throw std::logic_error(consecutive ? "cycle misses edge " + g.label(vs[i]) + "-" + g.label(vs[j])
                                           : "cycle has chord " + g.label(vs[i]) + "-" + g.label(vs[j]));
      }
    }
  }
}

std::optional<Square> is_square_diagonal(const Graph& g, Vertex u, Vertex w) {
  g.check_vertex(u);
  g.check_vertex(w);
  if (u == w) throw std::invalid_argument("square diagonal needs two distinct vertices");
  if (g.adjacent(u, w)) return std::nullopt;
  std::vector<Vertex> common;
  for (Vertex a : g.neighbors(u)) {
    if (g.adjacent(a, w)) common.push_back(a);
  }
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      if (!g.adjacent(common[i], common[j])) return Square{u, common[i], w, common[j]};
    }
  }
  return std::nullopt;
}

Graph square_diagonal_graph(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = g.row_words();
  Graph d(g.labels());
  std::vector<std::uint64_t> common(words);
  for (Vertex u = 0; u < n; ++u) {
    auto ru = g.row(u);
    for (Vertex w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      auto rw = g.row(w);
      bool any = false;
      for (std::size_t i = 0; i < words; ++i) {
        common[i] = ru[i] & rw[i];
        any = any || common[i] != 0;
      }
      if (!any) continue;
      // Look for a in common with a non-neighbour (other than itself) in common.
      bool found = false;
      for (std::size_t i = 0; i < words && !found; ++i) {
        for (auto bits = common[i]; bits != 0 && !found; bits &= bits - 1) {
          Vertex a = i * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          auto ra = g.row(a);
          for (std::size_t k = 0; k < words && !found; ++k) {
            auto rest = common[k] & ~ra[k];
            if (k == a / kWordBits) rest &= ~(std::uint64_t{1} << (a % kWordBits));
            found = rest != 0;
          }
        }
      }
      if (found) d.add_edge(u, w);
    }
  }
  return d;
}

std::vector<std::pair<Vertex, Vertex>> square_diagonal_pairs(const Graph& g) { return square_diagonal_graph(g).edges(); }

std::optional<BurstWitness> is_burst(const Graph& g, const InducedCycle& c) {
  validate_cycle(g, c);
  const auto& vs = c.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      if (auto sq = is_square_diagonal(g, vs[i], vs[j])) return BurstWitness{vs[i], vs[j], *sq};
    }
  }
  return std::nullopt;
}

namespace {

// Bit-row operations shared by the single-word and multi-word enumerators.
struct Bits64 {
  using Row = std::uint64_t;
  static Row empty(std::size_t) { return 0; }
  static Row from(std::span<const std::uint64_t> r) { return r[0]; }
  static bool has(const Row& r, Vertex v) { return (r >> v) & 1U; }
  static void set(Row& r, Vertex v) { r |= std::uint64_t{1} << v; }
  static Row or_(const Row& a, const Row& b) { return a | b; }
  static Row and_not(const Row& a, const Row& b) { return a & ~b; }
  static Row and_(const Row& a, const Row& b) { return a & b; }
  static bool none(const Row& r) { return r == 0; }
  template <typename F>
  static void for_each(Row r, F&& f) {
    for (; r != 0; r &= r - 1) {
      if (!f(static_cast<Vertex>(std::countr_zero(r)))) return;
    }
  }
};

struct BitsN {
  using Row = std::vector<std::uint64_t>;
  static Row empty(std::size_t n) { return Row(words_for(n), 0); }
  static Row from(std::span<const std::uint64_t> r) { return Row(r.begin(), r.end()); }
  static bool has(const Row& r, Vertex v) { return (r[v / kWordBits] >> (v % kWordBits)) & 1U; }
  static void set(Row& r, Vertex v) { r[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }
  template <typename Op>
  static Row zip(const Row& a, const Row& b, Op op) {
    Row out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
  }
  static Row or_(const Row& a, const Row& b) { return zip(a, b, [](auto x, auto y) { return x | y; }); }
  static Row and_not(const Row& a, const Row& b) { return zip(a, b, [](auto x, auto y) { return x & ~y; }); }
  static Row and_(const Row& a, const Row& b) { return zip(a, b, [](auto x, auto y) { return x & y; }); }
  static bool none(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](auto w) { return w == 0; });
  }
  template <typename F>
  static void for_each(const Row& r, F&& f) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (auto w = r[i]; w != 0; w &= w - 1) {
        if (!f(i * kWordBits + static_cast<Vertex>(std::countr_zero(w)))) return;
      }
    }
  }
};

// Backtracking over induced paths v0 < {v1, ..., vk}. `blocked` holds every
// vertex <= v0, every path vertex and the neighbourhoods of interior path
// vertices, so any unblocked neighbour of the path end keeps the path induced.
// A candidate adjacent to v0 closes a cycle and is never extended through.
template <typename B>
class InducedCycleSearch {
 public:
  using Row = typename B::Row;

  InducedCycleSearch(const Graph& g, std::size_t min_len, std::size_t max_len, const CycleVisitor& visit,
                     std::uint64_t budget)
      : g_(g), n_(g.order()), min_len_(min_len), max_len_(max_len), visit_(visit), budget_(budget) {
    rows_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) rows_.push_back(B::from(g.row(v)));
  }

  EnumerationStats run() {
    Row below = B::empty(n_);
    for (Vertex s = 0; s < n_ && !done_; ++s) {
      B::set(below, s);
      start_ = s;
      path_.assign(1, s);
      extend(s, below);
    }
    return std::move(stats_);
  }

 private:
  void extend(Vertex tail, const Row& blocked) {
    if (budget_ != 0 && stats_.steps >= budget_) {
      stats_.step_budget_hit = true;
      done_ = true;
      return;
    }
    ++stats_.steps;
    const std::size_t j = path_.size() - 1;  // index of tail
    const Row cand = B::and_not(rows_[tail], blocked);
    const Row& start_nbrs = rows_[start_];

    if (j == 0) {
      // Second vertex: any larger neighbour of the start.
      B::for_each(cand, [&](Vertex c) {
        Row next = blocked;
        B::set(next, c);
        path_.push_back(c);
        extend(c, next);
        path_.pop_back();
        return !done_;
      });
      return;
    }

    const std::size_t close_len = j + 2;
    Row interior_blocked = B::or_(blocked, rows_[tail]);
    B::for_each(cand, [&](Vertex c) {
      if (B::has(start_nbrs, c)) {
        if (close_len >= min_len_ && close_len <= max_len_ && path_[1] < c) emit(c);
      } else if (close_len < max_len_) {
        Row next = interior_blocked;
        B::set(next, c);
        path_.push_back(c);
        extend(c, next);
        path_.pop_back();
      } else if (close_len + 1 <= n_) {
        stats_.length_bound_hit = true;
      }
      return !done_;
    });
  }

  void emit(Vertex closing) {
    cycle_.vertices = path_;
    cycle_.vertices.push_back(closing);
    ++stats_.counts[cycle_.vertices.size()];
    if (!visit_(cycle_)) {
      stats_.stopped_by_visitor = true;
      done_ = true;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t min_len_;
  std::size_t max_len_;
  const CycleVisitor& visit_;
  std::uint64_t budget_;
  std::vector<Row> rows_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  InducedCycle cycle_;
  EnumerationStats stats_;
  bool done_ = false;
};

// Every induced cycle lies inside one biconnected block, so the largest block
// order bounds the cycle lengths that can occur.
std::size_t largest_block_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<Vertex> stack;
  std::size_t timer = 0, best = 0;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    disc[v] = low[v] = ++timer;
    stack.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (disc[w] == 0) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::size_t block = 1;
          for (Vertex top = n; top != w; ++block) {
            top = stack.back();
            stack.pop_back();
          }
          best = std::max(best, block);
        }
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] == 0) {
      dfs(dfs, v);
      stack.clear();
    }
  }
  return best;
}

}  // namespace

EnumerationStats enumerate_induced_cycles(const Graph& g, std::size_t min_len, std::size_t max_len,
                                          const CycleVisitor& visit, std::uint64_t step_budget) {
  if (min_len < 3 || min_len > max_len) {
    throw std::invalid_argument("cycle length bounds must satisfy 3 <= min_len <= max_len");
  }
  max_len = std::min(max_len, g.order());
  if (min_len > max_len) return {};
  EnumerationStats stats = g.order() <= kWordBits
                               ? InducedCycleSearch<Bits64>(g, min_len, max_len, visit, step_budget).run()
                               : InducedCycleSearch<BitsN>(g, min_len, max_len, visit, step_budget).run();
  if (stats.length_bound_hit && max_len >= largest_block_order(g)) stats.length_bound_hit = false;
  return stats;
}

std::vector<InducedCycle> brute_force_induced_cycles(const Graph& g, std::size_t max_len) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw std::length_error("brute-force cycle oracle limited to " + std::to_string(kBruteForceMaxOrder) + " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  std::vector<InducedCycle> out;
  for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
    auto k = static_cast<std::size_t>(std::popcount(subset));
    if (k < 3 || k > max_len) continue;
    bool two_regular = true;
    for (Vertex v = 0; v < n && two_regular; ++v) {
      if ((subset >> v) & 1U) two_regular = std::popcount(adj[v] & subset) == 2;
    }
    if (!two_regular) continue;
    // A 2-regular graph is a cycle iff it is connected: walk it once.
    auto first = static_cast<Vertex>(std::countr_zero(subset));
    std::vector<Vertex> walk{first};
    Vertex prev = first;
    Vertex cur = static_cast<Vertex>(std::countr_zero(adj[first] & subset));
    while (cur != first) {
      walk.push_back(cur);
      std::uint32_t next = adj[cur] & subset & ~(1U << prev);
      prev = cur;
      cur = static_cast<Vertex>(std::countr_zero(next));
    }
    if (walk.size() == k) out.push_back(canonical_cycle(std::move(walk)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TranVerdict check_tran_condition(const Graph& g, const TranOptions& opts) {
  TranVerdict verdict;
  const std::size_t n = g.order();
  const std::size_t bound = std::min(opts.max_len.value_or(n), n);
  verdict.max_len = bound;
  if (bound < 4) {
    verdict.truncated = largest_block_order(g) >= 4;
    verdict.all_burst = !verdict.truncated;
    return verdict;
  }

  const Graph diag = square_diagonal_graph(g);
  const std::size_t words = g.row_words();
  std::vector<std::uint64_t> mask(words);

  auto visit = [&](const InducedCycle& c) {
    std::fill(mask.begin(), mask.end(), 0);
    for (Vertex v : c.vertices) mask[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    // Diagonal pairs are never adjacent, so any diagonal inside the cycle is a
    // pair at cycle-distance >= 2.
    for (Vertex v : c.vertices) {
      auto r = diag.row(v);
      for (std::size_t i = 0; i < words; ++i) {
        if (r[i] & mask[i]) return true;
      }
    }
    ++verdict.non_burst_total;
    if (verdict.non_burst_cycles.size() < opts.witness_cap) verdict.non_burst_cycles.push_back(c);
    return !opts.early_exit;
  };

  auto stats = enumerate_induced_cycles(g, 4, bound, visit, opts.step_budget);
  verdict.counts = std::move(stats.counts);
  verdict.truncated = stats.truncated();
  verdict.all_burst = verdict.non_burst_total == 0 && !verdict.truncated;
  return verdict;
}

}  // namespace racg
