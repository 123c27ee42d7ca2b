"""Complete edge-colored graphs, digraphs, and colored hypergraphs.

A colored graph is total: every unordered pair of distinct vertices has
a color (color 0 can stand for non-edges of an ordinary graph).  The
digraph variant colors ordered pairs and additionally carries vertex
colors, which the orbital construction uses to retain orbit information
(loops are omitted).  Hypergraphs color every nonempty subset, encoded
as bitmasks.

Also here: the orbital constructions G*(A), G(A) and the orbit
hypergraph; composition (lexicographic product) and free composition;
subcoloring and color-equivalence tests.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

import numpy as np

from .aut import matrix_automorphisms
from .errors import CapExceededError
from .orbits import OrbitPartition, orbitals, orbits
from .perm import Permutation, PermGroup

HYPERGRAPH_CAP = 16


def _pair_index(v: int, w: int, n: int) -> int:
    # upper-triangular row-major position of {v, w}, v < w
    if v > w:
        v, w = w, v
    return v * (2 * n - v - 1) // 2 + (w - v - 1)


class ColoredGraph:
    """Total coloring of the unordered pairs of {0..n-1}."""

    __slots__ = ("n", "colors")

    def __init__(self, n: int, colors: Sequence[int]):
        if n < 2:
            raise ValueError("colored graphs need at least 2 vertices")
        colors = tuple(int(c) for c in colors)
        if len(colors) != n * (n - 1) // 2:
            raise ValueError(
                f"expected {n * (n - 1) // 2} pair colors, got {len(colors)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "colors", colors)

    def __setattr__(self, name, value):
        raise AttributeError("ColoredGraph is immutable")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], int]) -> "ColoredGraph":
        return cls(n, [fn(v, w) for v in range(n) for w in range(v + 1, n)])

    @classmethod
    def monochromatic(cls, n: int, color: int = 0) -> "ColoredGraph":
        return cls(n, [color] * (n * (n - 1) // 2))

    @classmethod
    def rainbow(cls, n: int) -> "ColoredGraph":
        return cls(n, range(n * (n - 1) // 2))

    def color(self, v: int, w: int) -> int:
        if v == w:
            raise ValueError("no loops in a colored graph")
        return self.colors[_pair_index(v, w, self.n)]

    def pairs(self) -> Iterable[tuple[int, int]]:
        return itertools.combinations(range(self.n), 2)

    def color_count(self) -> int:
        return len(set(self.colors))

    def recolor(self, mapping: Callable[[int], int]) -> "ColoredGraph":
        return ColoredGraph(self.n, [mapping(c) for c in self.colors])

    def relabel(self, sigma: Permutation) -> "ColoredGraph":
        """Transport the coloring along a vertex bijection."""
        if sigma.degree != self.n:
            raise ValueError("relabeling permutation has the wrong degree")
        inv = ~sigma
        return ColoredGraph.from_function(
            self.n, lambda v, w: self.color(inv(v), inv(w))
        )

    def with_edge(self, v: int, w: int, color: int) -> "ColoredGraph":
        """Copy with one pair recolored; used by the mutation harness."""
        colors = list(self.colors)
        colors[_pair_index(v, w, self.n)] = color
        return ColoredGraph(self.n, colors)

    def matrix(self) -> np.ndarray:
        m = np.full((self.n, self.n), -1, dtype=np.int64)
        for v, w in self.pairs():
            m[v, w] = m[w, v] = self.color(v, w)
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredGraph)
            and self.n == other.n
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.n, self.colors))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, colors={self.color_count()})"


class ColoredDigraph:
    """Total coloring of ordered pairs plus a vertex coloring."""

    __slots__ = ("n", "colors", "vertex_colors")

    def __init__(
        self,
        n: int,
        colors: Sequence[int],
        vertex_colors: Sequence[int] | None = None,
    ):
        if n < 2:
            raise ValueError("colored digraphs need at least 2 vertices")
        colors = tuple(int(c) for c in colors)
        if len(colors) != n * (n - 1):
            raise ValueError(f"expected {n * (n - 1)} arc colors, got {len(colors)}")
        vc = tuple(int(c) for c in vertex_colors) if vertex_colors else (0,) * n
        if len(vc) != n:
            raise ValueError("vertex color count mismatch")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "vertex_colors", vc)

    def __setattr__(self, name, value):
        raise AttributeError("ColoredDigraph is immutable")

    @classmethod
    def from_function(
        cls,
        n: int,
        fn: Callable[[int, int], int],
        vertex_colors: Sequence[int] | None = None,
    ) -> "ColoredDigraph":
        return cls(
            n,
            [fn(v, w) for v in range(n) for w in range(n) if v != w],
            vertex_colors,
        )

    def _arc_index(self, v: int, w: int) -> int:
        return v * (self.n - 1) + (w if w < v else w - 1)

    def color(self, v: int, w: int) -> int:
        if v == w:
            raise ValueError("no loops in a colored digraph")
        return self.colors[self._arc_index(v, w)]

    def arcs(self) -> Iterable[tuple[int, int]]:
        n = self.n
        return ((v, w) for v in range(n) for w in range(n) if v != w)

    def color_count(self) -> int:
        return len(set(self.colors))

    def reverse(self) -> "ColoredDigraph":
        return ColoredDigraph.from_function(
            self.n, lambda v, w: self.color(w, v), self.vertex_colors
        )

    def relabel(self, sigma: Permutation) -> "ColoredDigraph":
        if sigma.degree != self.n:
            raise ValueError("relabeling permutation has the wrong degree")
        inv = ~sigma
        return ColoredDigraph.from_function(
            self.n,
            lambda v, w: self.color(inv(v), inv(w)),
            [self.vertex_colors[inv(v)] for v in range(self.n)],
        )

    def matrix(self) -> np.ndarray:
        m = np.empty((self.n, self.n), dtype=np.int64)
        for v in range(self.n):
            m[v, v] = -1 - self.vertex_colors[v]  # negative: disjoint from arcs
        for v, w in self.arcs():
            m[v, w] = self.color(v, w)
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredDigraph)
            and self.n == other.n
            and self.colors == other.colors
            and self.vertex_colors == other.vertex_colors
        )

    def __hash__(self) -> int:
        return hash((self.n, self.colors, self.vertex_colors))

    def __repr__(self) -> str:
        return f"ColoredDigraph(n={self.n}, colors={self.color_count()})"


class ColoredHypergraph:
    """Total coloring of the nonempty subsets of {0..n-1}, as bitmasks."""

    __slots__ = ("n", "colors")

    def __init__(self, n: int, colors: Sequence[int]):
        if n < 2:
            raise ValueError("colored hypergraphs need at least 2 vertices")
        if n > HYPERGRAPH_CAP:
            raise CapExceededError(f"hypergraph on {n} vertices exceeds cap {HYPERGRAPH_CAP}")
        colors = tuple(int(c) for c in colors)
        if len(colors) == (1 << n) - 1:
            colors = (-1,) + colors  # allow callers to omit the empty set slot
        if len(colors) != (1 << n):
            raise ValueError(f"expected {(1 << n) - 1} subset colors")
        colors = (-1,) + colors[1:]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "colors", colors)

    def __setattr__(self, name, value):
        raise AttributeError("ColoredHypergraph is immutable")

    def color(self, mask: int) -> int:
        if not 0 < mask < (1 << self.n):
            raise ValueError("subset mask out of range")
        return self.colors[mask]

    def subsets(self) -> Iterable[int]:
        return range(1, 1 << self.n)

    def color_count(self) -> int:
        return len(set(self.colors[1:]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredHypergraph)
            and self.n == other.n
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.n, self.colors))

    def __repr__(self) -> str:
        return f"ColoredHypergraph(n={self.n}, colors={self.color_count()})"


ColoredStructure = ColoredGraph | ColoredDigraph | ColoredHypergraph


def orbital_graph(group: PermGroup) -> ColoredGraph:
    """G*(A): edges colored by the star orbitals of the group."""
    data = orbitals(group)
    return ColoredGraph.from_function(
        group.degree, lambda v, w: data.star_orbital_of[v][w]
    )


def orbital_digraph(group: PermGroup) -> ColoredDigraph:
    """G(A): arcs colored by nontrivial orbitals, vertices by orbits.

    Arc colors are renumbered contiguously in row-major first-occurrence
    order; the trivial orbitals turn into the vertex coloring.
    """
    data = orbitals(group)
    renumber: dict[int, int] = {}
    arc_colors = []
    n = group.degree
    for v in range(n):
        for w in range(n):
            if v == w:
                continue
            o = data.orbital_of[v][w]
            if o not in renumber:
                renumber[o] = len(renumber)
            arc_colors.append(renumber[o])
    return ColoredDigraph(n, arc_colors, data.orbit_partition.class_of)


def subset_image(mask: int, perm: Permutation) -> int:
    image = 0
    rest = mask
    while rest:
        low = rest & -rest
        image |= 1 << perm(low.bit_length() - 1)
        rest ^= low
    return image


def orbit_hypergraph(group: PermGroup, cap: int = HYPERGRAPH_CAP) -> ColoredHypergraph:
    """Subsets colored by their orbit under the group."""
    n = group.degree
    if n > cap:
        raise CapExceededError(f"orbit hypergraph needs degree <= {cap}, got {n}")
    total = 1 << n
    colors = [-1] * total
    next_color = 0
    for start in range(1, total):
        if colors[start] != -1:
            continue
        colors[start] = next_color
        frontier = [start]
        while frontier:
            new = []
            for mask in frontier:
                for g in group.generators:
                    image = subset_image(mask, g)
                    if colors[image] == -1:
                        colors[image] = next_color
                        new.append(image)
            frontier = new
        next_color += 1
    return ColoredHypergraph(n, colors)


def composition(g: ColoredGraph, h: ColoredGraph) -> ColoredGraph:
    """Lexicographic product: cross edges take g's colors, fibres h's.

    Vertices are pairs (w, v) with w from g and v from h, indexed
    row-major as w*|V(h)| + v.  Color-disjointness of the inputs is the
    caller's business (shift first when it matters).
    """
    nw, nv = g.n, h.n

    def color(x: int, y: int) -> int:
        w1, v1 = divmod(x, nv)
        w2, v2 = divmod(y, nv)
        if w1 != w2:
            return g.color(w1, w2)
        return h.color(v1, v2)

    return ColoredGraph.from_function(nw * nv, color)


def _point_orbits_from_images(images: Sequence[tuple[int, ...]], n: int) -> OrbitPartition:
    class_of = [-1] * n
    classes = []
    for start in range(n):
        if class_of[start] != -1:
            continue
        index = len(classes)
        members = [start]
        class_of[start] = index
        frontier = [start]
        while frontier:
            new = []
            for x in frontier:
                for sigma in images:
                    y = sigma[x]
                    if class_of[y] == -1:
                        class_of[y] = index
                        members.append(y)
                        new.append(y)
            frontier = new
        classes.append(tuple(sorted(members)))
    return OrbitPartition(tuple(classes), tuple(class_of))


def _coerce_partition(part, n: int) -> OrbitPartition:
    if isinstance(part, OrbitPartition):
        return part
    classes = [tuple(sorted(c)) for c in part]
    class_of = [-1] * n
    for i, c in enumerate(classes):
        for x in c:
            class_of[x] = i
    if -1 in class_of:
        raise ValueError("orbit classes do not cover the vertex set")
    return OrbitPartition(tuple(classes), tuple(class_of))


def _decorated_pair_orbits(
    base_images: Sequence[tuple[int, ...]], nw: int, label_count: int
) -> dict[frozenset, int]:
    """Orbits of the base action on unordered label-decorated vertex pairs.

    A decorated pair {(w1, i), (w2, j)} carries one fibre label at each
    base vertex; the base action moves the vertices and carries the
    labels along.  Ids are assigned in first-occurrence order over a
    deterministic enumeration.
    """
    orbit_id: dict[frozenset, int] = {}
    next_id = 0
    for w1 in range(nw):
        for w2 in range(w1 + 1, nw):
            for i in range(label_count):
                for j in range(label_count):
                    start = frozenset(((w1, i), (w2, j)))
                    if start in orbit_id:
                        continue
                    orbit_id[start] = next_id
                    frontier = [start]
                    while frontier:
                        new = []
                        for pair in frontier:
                            (x1, l1), (x2, l2) = tuple(pair)
                            for sigma in base_images:
                                image = frozenset(
                                    ((sigma[x1], l1), (sigma[x2], l2))
                                )
                                if image not in orbit_id:
                                    orbit_id[image] = next_id
                                    new.append(image)
                        frontier = new
                    next_id += 1
    return orbit_id


def free_composition(
    g: ColoredGraph,
    h: ColoredGraph,
    base_group=None,
    g_orbits: OrbitPartition | Iterable[Iterable[int]] | None = None,
    h_orbits: OrbitPartition | Iterable[Iterable[int]] | None = None,
) -> ColoredGraph:
    """Composition refined by fibre-orbit decorations on both sides.

    A fibre edge inside column w is colored by the pair (orbit of w,
    color of {v1, v2} in h).  A cross edge {(w1, v1), (w2, v2)} is
    colored by the orbit, under the base action, of the decorated pair
    {(w1, orbit of v1), (w2, orbit of v2)}; decorated-pair orbits refine
    g's edge colors, and for an orbital graph of a base group they
    reproduce exactly the orbitals of the wreath product over it.  The
    base action and both orbit partitions default to the automorphism
    groups of g and h; callers holding the groups the graphs came from
    should pass them (the automorphism group of an orbital graph can be
    strictly larger than the group, which matters exactly for trivial
    fibre groups and reflection-free bases).  Fibre and cross colors
    occupy disjoint integer ranges.
    """
    nw, nv = g.n, h.n
    if base_group is not None:
        if base_group.degree != nw:
            raise ValueError("base group degree must match g's vertex count")
        base_images = [p.images for p in base_group.generators] or [
            tuple(range(nw))
        ]
        base_point_orbits = _point_orbits_from_images(base_images, nw)
    else:
        base_images = list(matrix_automorphisms(g.matrix()))
        base_point_orbits = _point_orbits_from_images(base_images, nw)
    if g_orbits is None:
        g_orbits = base_point_orbits
    else:
        g_orbits = _coerce_partition(g_orbits, nw)
    if h_orbits is None:
        h_orbits = _point_orbits_from_images(matrix_automorphisms(h.matrix()), nv)
    else:
        h_orbits = _coerce_partition(h_orbits, nv)

    cross_orbit = _decorated_pair_orbits(base_images, nw, len(h_orbits.classes))
    flat: dict[tuple, int] = {}

    def color(x: int, y: int) -> int:
        w1, v1 = divmod(x, nv)
        w2, v2 = divmod(y, nv)
        if w1 != w2:
            decorated = frozenset(
                ((w1, h_orbits.class_of[v1]), (w2, h_orbits.class_of[v2]))
            )
            key = ("x", cross_orbit[decorated], g.color(w1, w2))
        else:
            key = ("f", g_orbits.class_of[w1], h.color(v1, v2))
        if key not in flat:
            flat[key] = len(flat)
        return flat[key]

    return ColoredGraph.from_function(nw * nv, color)


def _domain_colors(structure: ColoredStructure) -> tuple[int, ...]:
    if isinstance(structure, ColoredGraph):
        return structure.colors
    if isinstance(structure, ColoredDigraph):
        return structure.colors + structure.vertex_colors
    return structure.colors[1:]


def color_equivalent(s1: ColoredStructure, s2: ColoredStructure) -> bool:
    """Same color partition of the same domain, up to renaming colors.

    The vertex identification is fixed (supplied by the construction);
    only color names may differ.
    """
    if type(s1) is not type(s2):
        raise ValueError("cannot compare colored structures of different kinds")
    if s1.n != s2.n:
        raise ValueError("cannot compare structures on different vertex counts")
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for c1, c2 in zip(_domain_colors(s1), _domain_colors(s2)):
        if forward.setdefault(c1, c2) != c2 or backward.setdefault(c2, c1) != c1:
            return False
    return True


def is_subcoloring(h: ColoredStructure, g: ColoredStructure) -> bool:
    """True iff h's color classes refine g's (h was split out of g)."""
    if type(h) is not type(g):
        raise ValueError("cannot compare colored structures of different kinds")
    if h.n != g.n:
        raise ValueError("cannot compare structures on different vertex counts")
    seen: dict[int, int] = {}
    for ch, cg in zip(_domain_colors(h), _domain_colors(g)):
        if seen.setdefault(ch, cg) != cg:
            return False
    return True


def normalized(structure: ColoredStructure) -> ColoredStructure:
    """Renumber colors by first occurrence."""
    mapping: dict[int, int] = {}

    def rename(c: int) -> int:
        if c not in mapping:
            mapping[c] = len(mapping)
        return mapping[c]

    if isinstance(structure, ColoredGraph):
        return ColoredGraph(structure.n, [rename(c) for c in structure.colors])
    if isinstance(structure, ColoredDigraph):
        arc = [rename(c) for c in structure.colors]
        vmapping: dict[int, int] = {}

        def vrename(c: int) -> int:
            if c not in vmapping:
                vmapping[c] = len(vmapping)
            return vmapping[c]

        return ColoredDigraph(structure.n, arc, [vrename(c) for c in structure.vertex_colors])
    return ColoredHypergraph(structure.n, [-1] + [rename(c) for c in structure.colors[1:]])
