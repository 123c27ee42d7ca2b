"""Permutations of {0..n-1} and fully enumerated permutation groups.

Permutations act on the right: ``v * p`` style application is spelled
``p(v)`` here, and ``compose(p, q)`` applies ``p`` first, then ``q``.
Groups are materialized as explicit element sets (BFS closure of the
generators) because everything downstream quantifies over all elements;
the sizes in play are tiny by design and guarded by ``order_cap``.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import GroupTooLargeError

DEFAULT_ORDER_CAP = 10**6


class Permutation:
    """An immutable bijection of {0..degree-1}, stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for v in images:
            if not 0 <= v < n or seen[v]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
            seen[v] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        # fast path for internal construction of images known to be bijective
        self = object.__new__(cls)
        object.__setattr__(self, "images", images)
        return self

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; points not mentioned are fixed."""
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            for x in cycle:
                if not 0 <= x < degree:
                    raise ValueError(f"cycle point {x} out of range for degree {degree}")
                if x in touched:
                    raise ValueError(f"point {x} appears in two cycles")
                touched.add(x)
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q`` (right-action convention)."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    qi = q.images
    return Permutation._unchecked(tuple(qi[v] for v in p.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for i, v in enumerate(p.images):
        images[v] = i
    return Permutation._unchecked(tuple(images))


def mulclose(
    generators: Iterable[Permutation], order_cap: int = DEFAULT_ORDER_CAP
) -> frozenset[Permutation]:
    """BFS closure of the generators under composition.

    Always contains the identity.  Raises GroupTooLargeError as soon as
    the closure would exceed ``order_cap``.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("mulclose needs at least one permutation to fix the degree")
    degree = gens[0].degree
    ident = Permutation.identity(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for g in frontier:
            for h in gens:
                x = compose(g, h)
                if x not in elements:
                    elements.add(x)
                    if len(elements) > order_cap:
                        raise GroupTooLargeError(
                            f"group exceeds order cap {order_cap}"
                        )
                    new_frontier.append(x)
        frontier = new_frontier
    return frozenset(elements)


class PermGroup:
    """A permutation group on {0..degree-1} with its full element set.

    ``generators`` always generate ``elements``; for groups built from an
    explicit element set the elements double as generators unless a
    smaller set is supplied.  Degree must exceed 1 (a permutation group
    always acts on more than one point here).
    """

    __slots__ = ("degree", "generators", "order_cap", "_elements", "_hash")

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        *,
        elements: Iterable[Permutation] | None = None,
        order_cap: int = DEFAULT_ORDER_CAP,
    ):
        if degree < 2:
            raise ValueError(f"permutation groups need degree > 1, got {degree}")
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity() and g not in seen:
                gens.append(g)
                seen.add(g)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "order_cap", order_cap)
        frozen = None if elements is None else frozenset(elements)
        object.__setattr__(self, "_elements", frozen)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    @property
    def elements(self) -> frozenset[Permutation]:
        if self._elements is None:
            if self.generators:
                els = mulclose(self.generators, self.order_cap)
            else:
                els = frozenset({Permutation.identity(self.degree)})
            object.__setattr__(self, "_elements", els)
        return self._elements

    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order()

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and p in self.elements

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.degree, self.elements)))
        return self._hash

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()})"

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def sorted_elements(self) -> list[Permutation]:
        return sorted(self.elements)

    def is_transitive(self) -> bool:
        reached = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = g(x)
                    if y not in reached:
                        reached.add(y)
                        new.append(y)
            frontier = new
        return len(reached) == self.degree

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.elements <= other.elements

    def small_generating_set(self) -> list[Permutation]:
        """Greedy generating set; used to keep JSON exports compact."""
        target = self.elements
        ident = self.identity
        gens: list[Permutation] = []
        known: frozenset[Permutation] = frozenset({ident})
        for g in sorted(target):
            if g not in known:
                gens.append(g)
                known = mulclose(gens, self.order_cap)
                if known == target:
                    break
        return gens


def generate_group(
    degree: int,
    generators: Iterable[Permutation],
    order_cap: int = DEFAULT_ORDER_CAP,
) -> PermGroup:
    """Group generated by ``generators`` on {0..degree-1}, fully enumerated."""
    group = PermGroup(degree, generators, order_cap=order_cap)
    elements = group.elements  # force enumeration so cap errors surface here
    assert math.factorial(degree) % len(elements) == 0
    return group


def group_from_elements(
    degree: int,
    elements: Iterable[Permutation],
    generators: Iterable[Permutation] | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> PermGroup:
    """Wrap an explicitly constructed element set as a PermGroup.

    The element set must already be a group; this is only sanity-checked
    (identity present, closed under inverse, Lagrange divisibility), not
    re-derived, because callers construct complete sets by definition.
    """
    els = frozenset(elements)
    ident = Permutation.identity(degree)
    if ident not in els:
        raise ValueError("element set lacks the identity")
    if len(els) <= 20000:  # inverse-closure scan is O(|G|); skip for bulk sets
        for p in els:
            if inverse(p) not in els:
                raise ValueError(f"element set not closed under inverse at {p}")
    if math.factorial(degree) % len(els) != 0:
        raise ValueError("element count violates Lagrange divisibility")
    gens = tuple(generators) if generators is not None else tuple(sorted(els))
    return PermGroup(degree, gens, elements=els, order_cap=order_cap)
