"""Automorphism groups of colored structures and the three closures.

``closure(A, kind)`` computes Aut of the orbital graph, the orbital
digraph (with orbit vertex colors), or the orbit hypergraph of A; a
group is in GR / DGR / BGR exactly when it equals the corresponding
closure.  Negative membership verdicts always come with a witness
permutation that lies in the closure but outside the group, and the
witness is re-verified against the structure before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import aut
from .catalog import is_trivial_degree_two
from .errors import CapExceededError
from .orbits import transposing_permutation
from .perm import Permutation, PermGroup, group_from_elements
from .structures import (
    ColoredDigraph,
    ColoredGraph,
    ColoredHypergraph,
    ColoredStructure,
    orbit_hypergraph,
    orbital_digraph,
    orbital_graph,
    subset_image,
)

GRAPH_VERTEX_CAP = 128
KINDS = ("gr", "dgr", "bgr")


def _structure_images(
    structure: ColoredStructure, timeout: float | None
) -> tuple[tuple[int, ...], ...]:
    if isinstance(structure, (ColoredGraph, ColoredDigraph)):
        if structure.n > GRAPH_VERTEX_CAP:
            raise CapExceededError(
                f"automorphism search capped at {GRAPH_VERTEX_CAP} vertices"
            )
        return aut.matrix_automorphisms(structure.matrix(), timeout=timeout)
    return aut.hypergraph_automorphisms(structure.colors, structure.n, timeout=timeout)


def automorphism_group(
    structure: ColoredStructure, timeout: float | None = None
) -> PermGroup:
    """The full group of color-preserving vertex permutations."""
    images = _structure_images(structure, timeout)
    elements = [Permutation(t) for t in images]
    return group_from_elements(structure.n, elements)


def automorphism_group_brute(structure: ColoredStructure) -> PermGroup:
    """Exhaustive-scan oracle (n <= 8); cross-checks the backtracking."""
    if isinstance(structure, (ColoredGraph, ColoredDigraph)):
        images = aut.brute_matrix_automorphisms(structure.matrix())
    else:
        images = aut.brute_hypergraph_automorphisms(structure.colors, structure.n)
    return group_from_elements(structure.n, [Permutation(t) for t in images])


def preserves(structure: ColoredStructure, perm: Permutation) -> bool:
    """Does the permutation preserve the structure's coloring exactly?"""
    if perm.degree != structure.n:
        return False
    if isinstance(structure, ColoredGraph):
        return all(
            structure.color(perm(v), perm(w)) == structure.color(v, w)
            for v, w in structure.pairs()
        )
    if isinstance(structure, ColoredDigraph):
        if any(
            structure.vertex_colors[perm(v)] != structure.vertex_colors[v]
            for v in range(structure.n)
        ):
            return False
        return all(
            structure.color(perm(v), perm(w)) == structure.color(v, w)
            for v, w in structure.arcs()
        )
    return all(
        structure.color(subset_image(mask, perm)) == structure.color(mask)
        for mask in structure.subsets()
    )


def closure_structure(group: PermGroup, kind: str) -> ColoredStructure:
    if kind == "gr":
        return orbital_graph(group)
    if kind == "dgr":
        return orbital_digraph(group)
    if kind == "bgr":
        return orbit_hypergraph(group)
    raise ValueError(f"unknown closure kind {kind!r}")


def closure(group: PermGroup, kind: str, timeout: float | None = None) -> PermGroup:
    """The GR / DGR / BGR closure of the group; always contains it."""
    structure = closure_structure(group, kind)
    closed = automorphism_group(structure, timeout=timeout)
    assert group.elements <= closed.elements, "closure must contain the group"
    return closed


def aut_equals_perm_group(
    structure: ColoredStructure, group: PermGroup, timeout: float | None = None
) -> tuple[bool, Permutation | None]:
    """Decide Aut(structure) == group, with an outside witness if not.

    When the group does not even preserve the structure the answer is
    (False, None).  Otherwise the walk stops at the first automorphism
    outside the group, so far-from-closed inputs are rejected cheaply.
    """
    if not all(preserves(structure, gen) for gen in group.generators):
        return False, None
    group_images = frozenset(p.images for p in group.elements)
    if isinstance(structure, (ColoredGraph, ColoredDigraph)):
        if structure.n > GRAPH_VERTEX_CAP:
            raise CapExceededError(
                f"automorphism search capped at {GRAPH_VERTEX_CAP} vertices"
            )
        equal, outsider = aut.matrix_aut_equals(
            structure.matrix(), group_images, timeout=timeout
        )
    else:
        equal, outsider = aut.hypergraph_aut_equals(
            structure.colors, structure.n, group_images, timeout=timeout
        )
    if equal:
        return True, None
    witness = Permutation(outsider)
    assert preserves(structure, witness) and witness not in group
    return False, witness


def closure_equals_group(
    group: PermGroup, kind: str, timeout: float | None = None
) -> tuple[bool, Permutation | None]:
    """Is the group its own GR / DGR / BGR closure?  Witness when not."""
    structure = closure_structure(group, kind)
    equal, witness = aut_equals_perm_group(structure, group, timeout=timeout)
    assert equal or witness is not None, "a group always preserves its own orbitals"
    return equal, witness


@dataclass(frozen=True)
class ClassReport:
    """Membership verdicts for one group, with verifiable certificates.

    ``witnesses`` holds, for every negative flag, a permutation that
    preserves the relevant colored structure but lies outside the group.
    ``in_bgr`` is None when the degree exceeds the hypergraph cap and the
    flag was skipped.  DGR+ additionally records the transposing
    permutation (if any): a group is in DGR+ when it is 2-closed and
    either has no orbital-transposing permutation or already lies in
    GR or equals I_2.
    """

    group: PermGroup
    in_gr: bool
    in_dgr: bool
    in_bgr: bool | None
    in_dgr_plus: bool
    closures: dict
    witnesses: dict
    transposing: Permutation | None

    def verify(self) -> bool:
        """Re-check every stored certificate from scratch."""
        for kind, witness in self.witnesses.items():
            if witness is None:
                continue
            structure = closure_structure(self.group, kind)
            if not preserves(structure, witness) or witness in self.group:
                return False
        if self.in_gr and not self.in_dgr:
            return False
        return True


def classify(
    group: PermGroup,
    bgr_cap: int = 16,
    timeout: float | None = None,
) -> ClassReport:
    """GR / DGR / BGR / DGR+ membership with closures and witnesses."""
    closures: dict = {}
    witnesses: dict = {}
    flags: dict = {}
    for kind in ("gr", "dgr"):
        closures[kind] = closure(group, kind, timeout=timeout)
        flags[kind] = closures[kind].elements == group.elements
        if not flags[kind]:
            witnesses[kind] = min(closures[kind].elements - group.elements)
    if group.degree <= bgr_cap:
        closures["bgr"] = closure(group, "bgr", timeout=timeout)
        flags["bgr"] = closures["bgr"].elements == group.elements
        if not flags["bgr"]:
            witnesses["bgr"] = min(closures["bgr"].elements - group.elements)
    else:
        flags["bgr"] = None
    transposing = transposing_permutation(group)
    in_dgr_plus = flags["dgr"] and (
        transposing is None or flags["gr"] or is_trivial_degree_two(group)
    )
    return ClassReport(
        group=group,
        in_gr=flags["gr"],
        in_dgr=flags["dgr"],
        in_bgr=flags["bgr"],
        in_dgr_plus=in_dgr_plus,
        closures=closures,
        witnesses=witnesses,
        transposing=transposing,
    )


def in_dgr_plus(group: PermGroup, report: ClassReport | None = None) -> bool:
    report = report if report is not None else classify(group)
    return report.in_dgr_plus


def uncolored_hypergraph_representable(
    group: PermGroup,
    degree_cap: int = 12,
    union_cap: int = 2**18,
) -> list[int] | None:
    """A family of subsets with Aut equal to the group, or None.

    Only unions of the group's subset orbits can be invariant, so trying
    every union is a complete search.  A family is tested by computing
    the automorphisms of its two-colored hypergraph (member or not); the
    first family whose automorphisms are exactly the group is returned
    as a sorted list of bitmasks.  The empty family is excluded (a
    hypergraph has at least one edge).
    """
    n = group.degree
    if n > degree_cap:
        raise CapExceededError(f"uncolored search capped at degree {degree_cap}")
    hyper = orbit_hypergraph(group)
    orbit_count = hyper.color_count()
    if (1 << orbit_count) - 1 > union_cap:
        raise CapExceededError(
            f"{orbit_count} subset orbits give too many unions (cap {union_cap})"
        )
    orbit_masks: list[list[int]] = [[] for _ in range(orbit_count)]
    for mask in hyper.subsets():
        orbit_masks[hyper.color(mask)].append(mask)
    group_images = frozenset(p.images for p in group.elements)
    total = 1 << n
    for selection in range(1, 1 << orbit_count):
        member = [0] * total
        family: list[int] = []
        for o in range(orbit_count):
            if selection >> o & 1:
                for mask in orbit_masks[o]:
                    member[mask] = 1
                family.extend(orbit_masks[o])
        equal, _ = aut.hypergraph_aut_equals(member, n, group_images)
        if equal:
            return sorted(family)
    return None
