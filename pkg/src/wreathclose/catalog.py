"""Named permutation groups: S_n, A_n, C_n, D_n, I_n and the Klein group K4.

These are the standard copies on {0..n-1}.  ``K4`` is the regular Klein
four-group inside S_4.  Degree bounds follow the usual conventions
(D_n needs n >= 3, everything else n >= 2).
"""

from __future__ import annotations

import math
import re

from .errors import GroupSpecError
from .perm import DEFAULT_ORDER_CAP, Permutation, PermGroup, generate_group

_NAME_RE = re.compile(r"^([SACDI])(\d+)$")


def symmetric_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    group = generate_group(n, gens, order_cap)
    assert group.order() == math.factorial(n)
    return group


def alternating_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    # consecutive 3-cycles generate A_n; for n == 2 this is the trivial group
    gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)]
    group = PermGroup(n, gens, order_cap=order_cap)
    assert group.order() == max(1, math.factorial(n) // 2)
    return group


def cyclic_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    group = generate_group(n, [Permutation.from_cycles(n, [tuple(range(n))])], order_cap)
    assert group.order() == n
    return group


def dihedral_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    if n < 3:
        raise ValueError(f"dihedral group needs degree >= 3, got {n}")
    rotation = Permutation.from_cycles(n, [tuple(range(n))])
    reflection = Permutation([(n - v) % n for v in range(n)])
    group = generate_group(n, [rotation, reflection], order_cap)
    assert group.order() == 2 * n
    return group


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, ())


def klein_group() -> PermGroup:
    group = generate_group(
        4,
        [
            Permutation.from_cycles(4, [(0, 1), (2, 3)]),
            Permutation.from_cycles(4, [(0, 2), (1, 3)]),
        ],
    )
    assert group.order() == 4
    return group


def catalog_group(name: str, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    """Resolve a catalog token: S|A|C|D|I followed by a degree, or K4."""
    token = name.strip()
    if token == "K4":
        return klein_group()
    m = _NAME_RE.match(token)
    if not m:
        raise GroupSpecError(f"unknown group token {token!r}", 0)
    family, n = m.group(1), int(m.group(2))
    if family == "D":
        if n < 3:
            raise GroupSpecError(f"D{n} is not in the catalog (need n >= 3)", 0)
    elif n < 2:
        raise GroupSpecError(f"{token} has degree < 2", 0)
    builder = {
        "S": symmetric_group,
        "A": alternating_group,
        "C": cyclic_group,
        "D": dihedral_group,
    }.get(family)
    if builder is not None:
        return builder(n, order_cap)
    return trivial_group(n)


def is_trivial_degree_two(group: PermGroup) -> bool:
    """The paper's I_2: the one-element group acting on two points."""
    return group.degree == 2 and group.order() == 1


def is_full_symmetric(group: PermGroup) -> bool:
    return group.order() == math.factorial(group.degree)


def is_full_alternating(group: PermGroup) -> bool:
    """True when the group is exactly A_n on its n points (n >= 3)."""
    n = group.degree
    if n < 3 or group.order() * 2 != math.factorial(n):
        return False
    return group.elements == alternating_group(n).elements
