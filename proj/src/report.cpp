#include "racg/report.hpp"

#include "racg/formats.hpp"
#include "racg/generators.hpp"

namespace racg {

std::vector<std::string> cycle_labels(const Graph& g, const InducedCycle& c) {
  std::vector<std::string> out;
  out.reserve(c.length());
  for (Vertex v : c.vertices) out.push_back(g.label(v));
  return out;
}

Json counts_json(const std::map<std::size_t, std::size_t>& counts) {
  Json j = Json::object();
  for (auto [len, count] : counts) j[std::to_string(len)] = count;
  return j;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return Json{{"order", g.order()}, {"size", g.size()}, {"labels", g.labels()}, {"edges", std::move(edges)},
              {"graph6", write_graph6(g)}};
}

Json square_json(const Graph& g, const Square& s) {
  return Json::array({g.label(s.u), g.label(s.a), g.label(s.w), g.label(s.b)});
}

Json verdict_json(const Graph& g, const TranVerdict& v) {
  Json cycles = Json::array();
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < v.non_burst_cycles.size(); ++i) {
    const auto& c = v.non_burst_cycles[i];
    cycles.push_back(cycle_labels(g, c));
    witnesses.push_back(Json{{"cycle", i},
                             {"length", c.length()},
                             {"nonadjacent_pairs_checked", nonadjacent_pairs_on_cycle(c.length())}});
  }
  return Json{{"all_burst", v.all_burst},
              {"truncated", v.truncated},
              {"counts", counts_json(v.counts)},
              {"non_burst_cycles", std::move(cycles)},
              {"witnesses", std::move(witnesses)},
              {"non_burst_total", v.non_burst_total},
              {"max_len", v.max_len}};
}

Json cycles_json(const Graph& g, std::size_t min_len, std::size_t max_len) {
  Json list = Json::array();
  std::size_t burst = 0;
  auto stats = enumerate_induced_cycles(g, min_len, max_len, [&](const InducedCycle& c) {
    Json entry{{"length", c.length()}, {"vertices", cycle_labels(g, c)}};
    if (auto w = is_burst(g, c)) {
      ++burst;
      entry["burst"] = true;
      entry["witness"] = Json{{"pair", {g.label(w->u), g.label(w->w)}}, {"square", square_json(g, w->square)}};
    } else {
      entry["burst"] = false;
    }
    list.push_back(std::move(entry));
    return true;
  });
  return Json{{"min_len", min_len},
              {"max_len", std::min(max_len, g.order())},
              {"total", list.size()},
              {"burst", burst},
              {"counts", counts_json(stats.counts)},
              {"truncated", stats.truncated()},
              {"cycles", std::move(list)}};
}

Json double_json(const Graph& base, const DoubleResult& d) {
  Json origin = Json::object();
  for (Vertex v = 0; v < d.graph.order(); ++v) {
    origin[d.graph.label(v)] =
        Json{{"copy", std::string(copy_name(d.origin[v].copy))}, {"original", base.label(d.origin[v].original)}};
  }
  Json j = Json::object();
  if (d.center) j["center"] = base.label(*d.center);
  j["base_order"] = base.order();
  j["graph"] = graph_json(d.graph);
  j["origin"] = std::move(origin);
  return j;
}

Json iterate_json(const std::vector<DoubleNode>& nodes) {
  Json out = Json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    Json path = Json::array();
    for (const auto& step : node.path) path.push_back(Json{{"vertex", step.vertex}, {"order", step.order}});
    Json entry{{"index", i}, {"path", std::move(path)}};
    if (node.error) {
      entry["error"] = *node.error;
    } else {
      entry["order"] = node.graph.order();
      entry["size"] = node.graph.size();
      entry["graph6"] = write_graph6(node.graph);
      entry["isomorphism_dedup"] = node.graph.order() <= kIsomorphismMaxOrder;
      entry["duplicate_of"] = node.duplicate_of ? Json(*node.duplicate_of) : Json(nullptr);
      if (node.verdict) entry["verdict"] = verdict_json(node.graph, *node.verdict);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace racg
