"""Backtracking searches for color-preserving vertex maps.

The engine works on square integer matrices: entry (v, w) is the color
of the arc v -> w and the diagonal carries vertex colors.  Complete
colored graphs and digraphs reduce to this form; hypergraphs get their
own search over subset bitmasks.  Feasibility is tracked per future
vertex as a boolean matrix and narrowed with numpy comparisons, so the
search tree stays close to one node per extendable partial map.

Results are exact: a search either finishes or raises
SearchTimeoutError, never returning a partial group.
"""

from __future__ import annotations

import itertools
import time
from typing import Iterable, Sequence

import numpy as np

from .errors import SearchTimeoutError

_TIMEOUT_CHECK_INTERVAL = 2048

# full-enumeration results keyed by the normalized color signature
_MATRIX_CACHE: dict[tuple, tuple[tuple[int, ...], ...]] = {}
_HYPERGRAPH_CACHE: dict[tuple, tuple[tuple[int, ...], ...]] = {}


def normalize_colors(values: Iterable[int]) -> tuple[int, ...]:
    """Renumber colors by first occurrence; the partition is what matters."""
    mapping: dict[int, int] = {}
    out = []
    for value in values:
        if value not in mapping:
            mapping[value] = len(mapping)
        out.append(mapping[value])
    return tuple(out)


class _Deadline:
    def __init__(self, timeout: float | None):
        self.limit = None if timeout is None else time.monotonic() + timeout
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.limit is not None and self.ticks % _TIMEOUT_CHECK_INTERVAL == 0:
            if time.monotonic() > self.limit:
                raise SearchTimeoutError("automorphism search timed out")


def _search_matrix(
    m_src: np.ndarray,
    m_tgt: np.ndarray,
    *,
    find_one: bool,
    known: frozenset[tuple[int, ...]] | None,
    collect: list | None,
    timeout: float | None,
    level0_skip: frozenset[int] = frozenset(),
):
    """Shared DFS core.

    Finds maps sigma with m_tgt[sigma v, sigma w] == m_src[v, w] for all
    v, w.  With ``find_one`` the first map is returned.  With ``known``
    the walk short-circuits at the first leaf outside ``known`` and
    returns (leaf_count, outsider).  Otherwise leaves land in
    ``collect``.  ``level0_skip`` drops root branches that the caller
    has proven redundant (coset translates under a known subgroup).
    """
    n = m_src.shape[0]
    deadline = _Deadline(timeout)
    feasible = np.empty((n, n), dtype=bool)
    diag_tgt = np.diagonal(m_tgt)
    for j in range(n):
        feasible[j] = diag_tgt == m_src[j, j]
    used = np.zeros(n, dtype=bool)
    images: list[int] = []
    count = 0
    outsider: tuple[int, ...] | None = None

    def descend(level: int, feas: np.ndarray) -> bool:
        """Returns True when the walk should stop early."""
        nonlocal count, outsider
        deadline.tick()
        if level == n:
            leaf = tuple(images)
            count += 1
            if find_one:
                outsider = leaf
                return True
            if known is not None:
                if leaf not in known:
                    outsider = leaf
                    return True
            else:
                collect.append(leaf)
            return False
        candidates = np.nonzero(feas[level] & ~used)[0]
        rest = slice(level + 1, n)
        src_row = m_src[level, rest]
        src_col = m_src[rest, level]
        for u in candidates:
            if level == 0 and int(u) in level0_skip:
                continue
            used[u] = True
            images.append(int(u))
            narrowed = feas[rest] & (
                (m_tgt[u, :][None, :] == src_row[:, None])
                & (m_tgt[:, u][None, :] == src_col[:, None])
            )
            sub = np.empty_like(feas)
            sub[rest] = narrowed
            if descend(level + 1, sub):
                return True
            images.pop()
            used[u] = False
        return False

    stopped = descend(0, feasible)
    return count, outsider, stopped


def matrix_automorphisms(
    m: np.ndarray, timeout: float | None = None
) -> tuple[tuple[int, ...], ...]:
    """All color-preserving vertex permutations of the matrix, cached."""
    key = (m.shape[0], normalize_colors(int(x) for x in m.ravel()))
    hit = _MATRIX_CACHE.get(key)
    if hit is not None:
        return hit
    collect: list[tuple[int, ...]] = []
    _search_matrix(m, m, find_one=False, known=None, collect=collect, timeout=timeout)
    result = tuple(sorted(collect))
    _MATRIX_CACHE[key] = result
    return result


def matrix_aut_equals(
    m: np.ndarray,
    group_images: frozenset[tuple[int, ...]],
    timeout: float | None = None,
) -> tuple[bool, tuple[int, ...] | None]:
    """Decide Aut(m) == group, with an outside witness when it is not.

    The caller guarantees group <= Aut(m); the walk stops at the first
    automorphism outside the group, so negative verdicts are cheap.
    """
    key = (m.shape[0], normalize_colors(int(x) for x in m.ravel()))
    hit = _MATRIX_CACHE.get(key)
    if hit is not None:
        if len(hit) == len(group_images):
            return True, None
        return False, next(x for x in hit if x not in group_images)
    # images of vertex 0 inside its group-orbit are coset translates of
    # the identity branch, so only 0 itself needs exploring there; any
    # feasible image outside the orbit would certify an outsider.
    orbit0 = frozenset(t[0] for t in group_images)
    count, outsider, stopped = _search_matrix(
        m,
        m,
        find_one=False,
        known=group_images,
        collect=None,
        timeout=timeout,
        level0_skip=orbit0 - {0},
    )
    if stopped:
        return False, outsider
    assert count == sum(1 for t in group_images if t[0] == 0)
    return True, None


def matrix_isomorphism(
    m_src: np.ndarray, m_tgt: np.ndarray, timeout: float | None = None
) -> tuple[int, ...] | None:
    """One sigma with m_tgt[sigma v, sigma w] == m_src[v, w], or None."""
    if m_src.shape != m_tgt.shape:
        return None
    _, found, _ = _search_matrix(
        m_src, m_tgt, find_one=True, known=None, collect=None, timeout=timeout
    )
    return found


def brute_matrix_automorphisms(m: np.ndarray) -> set[tuple[int, ...]]:
    """Exhaustive-scan oracle; independent of the backtracking path."""
    n = m.shape[0]
    if n > 8:
        raise ValueError("brute-force oracle is limited to 8 vertices")
    out = set()
    rows = [tuple(int(x) for x in m[v]) for v in range(n)]
    for sigma in itertools.permutations(range(n)):
        if all(
            m[sigma[v], sigma[w]] == rows[v][w] for v in range(n) for w in range(n)
        ):
            out.add(sigma)
    return out


def _hypergraph_search(
    colors: Sequence[int],
    n: int,
    *,
    known: frozenset[tuple[int, ...]] | None,
    collect: list | None,
    timeout: float | None,
    level0_skip: frozenset[int] = frozenset(),
):
    """DFS over vertex images checking every subset of the assigned prefix."""
    deadline = _Deadline(timeout)
    used = [False] * n
    images: list[int] = []
    count = 0
    outsider: tuple[int, ...] | None = None

    def descend(level: int, pairs: list[tuple[int, int]]) -> bool:
        nonlocal count, outsider
        deadline.tick()
        if level == n:
            leaf = tuple(images)
            count += 1
            if known is not None:
                if leaf not in known:
                    outsider = leaf
                    return True
            else:
                collect.append(leaf)
            return False
        bit = 1 << level
        for u in range(n):
            if used[u] or colors[bit] != colors[1 << u]:
                continue
            if level == 0 and u in level0_skip:
                continue
            ubit = 1 << u
            new_pairs = [(bit, ubit)]
            ok = True
            for mask, image in pairs:
                grown = mask | bit
                grown_image = image | ubit
                if colors[grown] != colors[grown_image]:
                    ok = False
                    break
                new_pairs.append((grown, grown_image))
            if not ok:
                continue
            used[u] = True
            images.append(u)
            if descend(level + 1, pairs + new_pairs):
                return True
            images.pop()
            used[u] = False
        return False

    stopped = descend(0, [])
    return count, outsider, stopped


def hypergraph_automorphisms(
    colors: Sequence[int], n: int, timeout: float | None = None
) -> tuple[tuple[int, ...], ...]:
    """All permutations whose extension to subsets preserves colors."""
    key = (n, normalize_colors(colors[1:]))
    hit = _HYPERGRAPH_CACHE.get(key)
    if hit is not None:
        return hit
    collect: list[tuple[int, ...]] = []
    _hypergraph_search(colors, n, known=None, collect=collect, timeout=timeout)
    result = tuple(sorted(collect))
    _HYPERGRAPH_CACHE[key] = result
    return result


def hypergraph_aut_equals(
    colors: Sequence[int],
    n: int,
    group_images: frozenset[tuple[int, ...]],
    timeout: float | None = None,
) -> tuple[bool, tuple[int, ...] | None]:
    key = (n, normalize_colors(colors[1:]))
    hit = _HYPERGRAPH_CACHE.get(key)
    if hit is not None:
        if len(hit) == len(group_images):
            return True, None
        return False, next(x for x in hit if x not in group_images)
    orbit0 = frozenset(t[0] for t in group_images)
    count, outsider, stopped = _hypergraph_search(
        colors,
        n,
        known=group_images,
        collect=None,
        timeout=timeout,
        level0_skip=orbit0 - {0},
    )
    if stopped:
        return False, outsider
    assert count == sum(1 for t in group_images if t[0] == 0)
    return True, None


def brute_hypergraph_automorphisms(colors: Sequence[int], n: int) -> set[tuple[int, ...]]:
    if n > 8:
        raise ValueError("brute-force oracle is limited to 8 vertices")
    out = set()
    subsets = range(1, 1 << n)
    for sigma in itertools.permutations(range(n)):
        ok = True
        for mask in subsets:
            image = 0
            rest = mask
            while rest:
                low = rest & -rest
                image |= 1 << sigma[low.bit_length() - 1]
                rest ^= low
            if colors[mask] != colors[image]:
                ok = False
                break
        if ok:
            out.add(sigma)
    return out


def clear_caches():
    _MATRIX_CACHE.clear()
    _HYPERGRAPH_CACHE.clear()
