#!/usr/bin/env python3
"""Regenerates data/corpus: every connected graph on at most five vertices plus a few named extras."""
import pathlib
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"

NAMED = {
    "k1": nx.complete_graph(1),
    "k2": nx.complete_graph(2),
    "k3": nx.complete_graph(3),
    "k4": nx.complete_graph(4),
    "k5": nx.complete_graph(5),
    "c4": nx.cycle_graph(4),
    "c5": nx.cycle_graph(5),
    "p3": nx.path_graph(3),
    "p4": nx.path_graph(4),
    "p5": nx.path_graph(5),
    "star4": nx.star_graph(3),
    "star5": nx.star_graph(4),
    "bowtie": nx.Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
    "k4_minus_edge": nx.Graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "paw": nx.Graph([(0, 1), (1, 2), (0, 2), (2, 3)]),
    "house": nx.Graph([(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
    "w4": nx.wheel_graph(5),
}


def write(path, n, edges, comment):
    lines = [f"# {comment}", f"n {n}"] + [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n")


def canonical_edges(g):
    return sorted(tuple(sorted(e)) for e in g.edges())


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.txt"):
        old.unlink()
    count = 0
    for index, g in enumerate(graph_atlas_g()):
        n = g.number_of_nodes()
        if n == 0 or n > 5 or not nx.is_connected(g):
            continue
        name = next((k for k, h in NAMED.items() if nx.is_isomorphic(g, h)), None)
        stem = f"atlas{index:04d}" + (f"_{name}" if name else "")
        write(OUT / f"{stem}.txt", n, canonical_edges(g), f"graph atlas #{index}")
        count += 1
    extra = OUT / "extra"
    extra.mkdir(exist_ok=True)
    for old in extra.glob("*.txt"):
        old.unlink()
    # Cycle edges listed as (0,1),(1,2),...,(0,n-1).
    for n in (6, 8):
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        write(extra / f"c{n}.txt", n, edges, f"cycle on {n} vertices")
    write(extra / "k5.txt", 5, canonical_edges(nx.complete_graph(5)), "complete graph on 5 vertices")
    write(extra / "bowtie.txt", 5, canonical_edges(NAMED["bowtie"]), "two triangles sharing a vertex")
    # Two triangles on a shared edge; the shared edge is listed last.
    write(extra / "k4e_ordered.txt", 4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], "two triangles sharing an edge")
    print(f"wrote {count} atlas graphs and 5 extras to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
