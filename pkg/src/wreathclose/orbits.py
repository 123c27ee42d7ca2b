"""Orbits and orbitals of a permutation group action.

Orbitals are the orbits on ordered pairs; the ones made of diagonal
pairs are trivial and correspond one-to-one with orbits.  Star orbitals
(orbits on unordered pairs) are derived by fusing each nontrivial
orbital with its paired orbital.  Numbering is by least representative
in row-major order throughout, so reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .aut import matrix_isomorphism
from .perm import Permutation, PermGroup


@dataclass(frozen=True)
class OrbitPartition:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class OrbitalData:
    """Complete orbital bookkeeping for one group.

    ``orbital_of[v][w]`` is the orbital index of the ordered pair (v, w);
    ``star_orbital_of[v][w]`` the star-orbital index of {v, w} (diagonal
    entries are -1).  ``pairing`` is the involution sending an orbital to
    its reverse; ``rank`` counts all orbitals and ``nsp`` the unordered
    pairs of distinct mutually paired orbitals.
    """

    degree: int
    orbital_of: tuple[tuple[int, ...], ...]
    trivial_flags: tuple[bool, ...]
    pairing: tuple[int, ...]
    star_orbital_of: tuple[tuple[int, ...], ...]
    rank: int
    nsp: int
    orbit_partition: OrbitPartition

    @property
    def orbital_count(self) -> int:
        return len(self.trivial_flags)

    @property
    def star_count(self) -> int:
        return max((x for row in self.star_orbital_of for x in row), default=-1) + 1

    def all_self_paired(self) -> bool:
        return all(self.pairing[o] == o for o in range(self.orbital_count))

    def orbital_members(self, index: int) -> list[tuple[int, int]]:
        n = self.degree
        return [
            (v, w) for v in range(n) for w in range(n) if self.orbital_of[v][w] == index
        ]


def orbits(group: PermGroup) -> OrbitPartition:
    """Orbits of the natural action, classes sorted by least element."""
    n = group.degree
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
                for g in group.generators:
                    y = g(x)
                    if class_of[y] == -1:
                        class_of[y] = index
                        members.append(y)
                        new.append(y)
            frontier = new
        classes.append(tuple(sorted(members)))
    return OrbitPartition(tuple(classes), tuple(class_of))


def orbitals(group: PermGroup) -> OrbitalData:
    """Orbitals, pairing, star orbitals, rank and nsp for the group."""
    n = group.degree
    orbital_of = [[-1] * n for _ in range(n)]
    trivial_flags = []
    for v0, w0 in itertools.product(range(n), repeat=2):
        if orbital_of[v0][w0] != -1:
            continue
        index = len(trivial_flags)
        trivial_flags.append(v0 == w0)
        orbital_of[v0][w0] = index
        frontier = [(v0, w0)]
        while frontier:
            new = []
            for v, w in frontier:
                for g in group.generators:
                    pair = (g(v), g(w))
                    if orbital_of[pair[0]][pair[1]] == -1:
                        orbital_of[pair[0]][pair[1]] = index
                        new.append(pair)
            frontier = new
    rank = len(trivial_flags)

    reps = [None] * rank
    for v, w in itertools.product(range(n), repeat=2):
        if reps[orbital_of[v][w]] is None:
            reps[orbital_of[v][w]] = (v, w)
    pairing = tuple(orbital_of[w][v] for v, w in reps)
    assert all(pairing[pairing[o]] == o for o in range(rank))

    star_of = [[-1] * n for _ in range(n)]
    star_index: dict[int, int] = {}
    for v in range(n):
        for w in range(v + 1, n):
            o = orbital_of[v][w]
            canonical = min(o, pairing[o])
            if canonical not in star_index:
                star_index[canonical] = len(star_index)
            star_of[v][w] = star_of[w][v] = star_index[canonical]

    nsp = sum(1 for o in range(rank) if o < pairing[o])
    return OrbitalData(
        degree=n,
        orbital_of=tuple(tuple(row) for row in orbital_of),
        trivial_flags=tuple(trivial_flags),
        pairing=pairing,
        star_orbital_of=tuple(tuple(row) for row in star_of),
        rank=rank,
        nsp=nsp,
        orbit_partition=orbits(group),
    )


def rank(group: PermGroup) -> int:
    return orbitals(group).rank


def nsp(group: PermGroup) -> int:
    return orbitals(group).nsp


def _transposes(perm: Permutation, data: OrbitalData) -> bool:
    """Does ``perm`` send every nontrivial orbital onto its paired orbital?"""
    n = data.degree
    for v in range(n):
        for w in range(n):
            if v == w:
                continue
            o = data.orbital_of[v][w]
            if data.orbital_of[perm(v)][perm(w)] != data.pairing[o]:
                return False
    return True


def transposing_permutation(group: PermGroup) -> Permutation | None:
    """A permutation sending every nontrivial orbital to its paired one.

    Trivial orbitals are exempt: the paper counts I_2 (whose only
    candidate swaps the two singleton orbits) among the groups with
    transposable orbitals.  When every orbital is self-paired the
    identity qualifies and is returned.  The search is an isomorphism
    search from the orbital digraph to its arc reversal.
    """
    data = orbitals(group)
    n = group.degree
    ident = Permutation.identity(n)
    if data.all_self_paired():
        assert _transposes(ident, data)
        return ident
    sentinel = data.rank  # diagonal carries no constraint here
    src = np.full((n, n), sentinel, dtype=np.int64)
    tgt = np.full((n, n), sentinel, dtype=np.int64)
    for v in range(n):
        for w in range(n):
            if v != w:
                src[v, w] = data.pairing[data.orbital_of[v][w]]
                tgt[v, w] = data.orbital_of[v][w]
    images = matrix_isomorphism(src, tgt)
    if images is None:
        return None
    witness = Permutation(images)
    assert _transposes(witness, data)
    return witness


def transposing_permutation_brute(group: PermGroup) -> Permutation | None:
    """Exhaustive-scan cross-check oracle, degree <= 8."""
    if group.degree > 8:
        raise ValueError("brute transposing scan is limited to degree 8")
    data = orbitals(group)
    for images in itertools.permutations(range(group.degree)):
        candidate = Permutation(images)
        if _transposes(candidate, data):
            return candidate
    return None


def has_transposable_orbitals(group: PermGroup) -> bool:
    return transposing_permutation(group) is not None
