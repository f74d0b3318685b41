#pragma once

// Stable JSON forms of graphs, cycles, verdicts and doubles. Field order is
// fixed (ordered_json) so equal inputs serialize to identical bytes.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "racg/constructions.hpp"
#include "racg/cycles.hpp"
#include "racg/graph.hpp"

namespace racg {

using Json = nlohmann::ordered_json;

std::vector<std::string> cycle_labels(const Graph& g, const InducedCycle& c);

Json counts_json(const std::map<std::size_t, std::size_t>& counts);

Json graph_json(const Graph& g);

Json square_json(const Graph& g, const Square& s);

/// {all_burst, truncated, counts, non_burst_cycles, witnesses, non_burst_total, max_len}.
/// Each witness certifies one listed non-burst cycle: the number of its
/// non-adjacent vertex pairs, none of which is a square diagonal.
Json verdict_json(const Graph& g, const TranVerdict& v);

/// Cycle listing with burst flags and witnesses, in enumeration order.
Json cycles_json(const Graph& g, std::size_t min_len, std::size_t max_len);

Json double_json(const Graph& base, const DoubleResult& d);

Json iterate_json(const std::vector<DoubleNode>& nodes);

}  // namespace racg
