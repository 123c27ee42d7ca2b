"""JSON and DOT import/export for groups and colored structures.

Formats:

* group:      {"degree": n, "generators": [[[0,1],[2,3]], ...]} with each
              generator a list of cycles, cycles as integer lists;
* graph:      {"n": n, "colors": [...]} flat upper-triangular, row-major;
* digraph:    {"n": n, "colors": [...]} row-major n*n list whose diagonal
              slots carry the vertex colors (readers that only want arcs
              can ignore the diagonal);
* hypergraph: {"n": n, "colors": {"<bitmask>": color}} over nonempty
              subsets.

Round-tripping any of these through export/import yields an identical
object.
"""

from __future__ import annotations

import json

from .perm import DEFAULT_ORDER_CAP, Permutation, PermGroup, generate_group
from .structures import ColoredDigraph, ColoredGraph, ColoredHypergraph

_DOT_PALETTE = (
    "black", "red3", "blue3", "green4", "orange2", "purple3",
    "turquoise4", "magenta3", "gold3", "gray40", "brown", "deeppink4",
)


def perm_to_cycles(p: Permutation) -> list[list[int]]:
    return [list(c) for c in p.cycles()]


def perm_from_cycles(degree: int, cycles: list[list[int]]) -> Permutation:
    return Permutation.from_cycles(degree, [tuple(c) for c in cycles])


def group_to_json(group: PermGroup, compact: bool = False) -> dict:
    gens = group.small_generating_set() if compact else list(group.generators)
    return {
        "degree": group.degree,
        "generators": [perm_to_cycles(g) for g in gens],
    }


def group_from_json(data: dict, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    degree = int(data["degree"])
    gens = [perm_from_cycles(degree, cycles) for cycles in data["generators"]]
    return generate_group(degree, gens, order_cap)


def graph_to_json(graph: ColoredGraph) -> dict:
    return {"n": graph.n, "colors": list(graph.colors)}


def graph_from_json(data: dict) -> ColoredGraph:
    return ColoredGraph(int(data["n"]), data["colors"])


def digraph_to_json(digraph: ColoredDigraph) -> dict:
    n = digraph.n
    flat = []
    for v in range(n):
        for w in range(n):
            flat.append(digraph.vertex_colors[v] if v == w else digraph.color(v, w))
    return {"n": n, "colors": flat}


def digraph_from_json(data: dict) -> ColoredDigraph:
    n = int(data["n"])
    flat = data["colors"]
    if len(flat) != n * n:
        raise ValueError(f"expected {n * n} entries in digraph color list")
    arcs = [flat[v * n + w] for v in range(n) for w in range(n) if v != w]
    vertex_colors = [flat[v * n + v] for v in range(n)]
    return ColoredDigraph(n, arcs, vertex_colors)


def hypergraph_to_json(hypergraph: ColoredHypergraph) -> dict:
    return {
        "n": hypergraph.n,
        "colors": {str(mask): hypergraph.color(mask) for mask in hypergraph.subsets()},
    }


def hypergraph_from_json(data: dict) -> ColoredHypergraph:
    n = int(data["n"])
    colors = [-1] * (1 << n)
    for key, color in data["colors"].items():
        colors[int(key)] = int(color)
    if any(c == -1 for c in colors[1:]):
        raise ValueError("hypergraph color map must cover every nonempty subset")
    return ColoredHypergraph(n, colors)


def structure_to_json(structure) -> dict:
    if isinstance(structure, ColoredGraph):
        return graph_to_json(structure)
    if isinstance(structure, ColoredDigraph):
        return digraph_to_json(structure)
    return hypergraph_to_json(structure)


def structure_from_json(kind: str, data: dict):
    loader = {
        "graph": graph_from_json,
        "digraph": digraph_from_json,
        "hypergraph": hypergraph_from_json,
    }.get(kind)
    if loader is None:
        raise ValueError(f"unknown structure kind {kind!r}")
    return loader(data)


def _pen(color: int) -> str:
    return _DOT_PALETTE[color % len(_DOT_PALETTE)]


def graph_to_dot(graph: ColoredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        lines.append(f'  {v} [label="{v}"];')
    for v, w in graph.pairs():
        c = graph.color(v, w)
        lines.append(f'  {v} -- {w} [color="{_pen(c)}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(digraph: ColoredDigraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(digraph.n):
        lines.append(f'  {v} [label="{v}/{digraph.vertex_colors[v]}"];')
    for v, w in digraph.arcs():
        c = digraph.color(v, w)
        lines.append(f'  {v} -> {w} [color="{_pen(c)}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
