#!/usr/bin/env python3
"""Write all non-isomorphic graphs on n vertices (n = 1..8) as graph6 files.

Orders up to 7 come straight from the networkx graph atlas. Order 8 is
built by adding one vertex to every order-7 graph in all possible ways and
keeping one representative per isomorphism class. Expected counts:
1, 2, 4, 11, 34, 156, 1044, 12346.
"""
import itertools
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def extend(classes):
    buckets = defaultdict(list)
    out = []
    for base in classes:
        n = base.number_of_nodes()
        for k in range(n + 1):
            for nbrs in itertools.combinations(range(n), k):
                g = base.copy()
                g.add_node(n)
                g.add_edges_from((n, v) for v in nbrs)
                key = (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())),
                       nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                if any(nx.is_isomorphic(g, h) for h in buckets[key]):
                    continue
                buckets[key].append(g)
                out.append(g)
    return out


def main(outdir):
    outdir = Path(outdir)
    by_order = defaultdict(list)
    for g in nx.graph_atlas_g()[1:]:
        by_order[g.number_of_nodes()].append(nx.convert_node_labels_to_integers(g))
    by_order[8] = extend(by_order[7])
    for n, graphs in sorted(by_order.items()):
        assert len(graphs) == EXPECTED[n], (n, len(graphs))
        (outdir / f"graphs_n{n}.g6").write_text("".join(g6(g) + "\n" for g in graphs))
        print(n, len(graphs))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
