"""Group products: direct product, parallel multiple, and both wreath actions.

Point indexings are fixed once and used everywhere downstream:

* products on V x W index the pair (v, w) as ``v*|W| + w`` (row-major);
* the parallel multiple of (B, W) on t copies indexes (w, i) as ``i*|W| + w``;
* the product action on V^W indexes a function f as the base-|V| numeral
  ``f(0) f(1) ... f(|W|-1)`` with f(0) most significant.

The wreath groups are built as the literal set of assembled permutations
(one per choice of base permutation and fibre tuple), so their element
sets match the defining formulas exactly rather than trusting a derived
generating set.  Decompositions invert the assemblies and return None
when a permutation is not of the required shape.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, GroupTooLargeError
from .perm import DEFAULT_ORDER_CAP, Permutation, PermGroup, group_from_elements

DEFAULT_POINT_CAP = 4096


@dataclass(frozen=True)
class WreathDecomposition:
    """Certificate (beta, (alpha_w)) for membership in a wreath product."""

    beta: Permutation
    alphas: tuple[Permutation, ...]

    @property
    def fibre_degree(self) -> int:
        return self.alphas[0].degree

    @property
    def base_degree(self) -> int:
        return self.beta.degree


def pair_point(v: int, w: int, nw: int) -> int:
    return v * nw + w


def function_point(values: tuple[int, ...], nv: int) -> int:
    x = 0
    for value in values:
        x = x * nv + value
    return x


def point_function(x: int, nv: int, nw: int) -> tuple[int, ...]:
    values = [0] * nw
    for w in range(nw - 1, -1, -1):
        x, values[w] = divmod(x, nv)
    return tuple(values)


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """A x B acting coordinatewise on V x W."""
    nv, nw = a.degree, b.degree
    if a.order() * b.order() > min(a.order_cap, b.order_cap):
        raise CapExceededError("direct product exceeds order cap")
    elements = set()
    for alpha in a.elements:
        for beta in b.elements:
            images = [0] * (nv * nw)
            for v in range(nv):
                for w in range(nw):
                    images[pair_point(v, w, nw)] = pair_point(alpha(v), beta(w), nw)
            elements.add(Permutation(images))
    gens = [_lift_pair(g, b.identity, nw) for g in a.generators]
    gens += [_lift_pair(a.identity, g, nw) for g in b.generators]
    return group_from_elements(nv * nw, elements, gens)


def _lift_pair(alpha: Permutation, beta: Permutation, nw: int) -> Permutation:
    nv = alpha.degree
    images = [0] * (nv * nw)
    for v in range(nv):
        for w in range(nw):
            images[pair_point(v, w, nw)] = pair_point(alpha(v), beta(w), nw)
    return Permutation(images)


def parallel_multiple(b: PermGroup, t: int, point_cap: int = DEFAULT_POINT_CAP) -> PermGroup:
    """I_t x B: the same B-permutation applied to t disjoint copies of W."""
    if t < 1:
        raise ValueError("parallel multiple needs t >= 1")
    nw = b.degree
    if t * nw > point_cap:
        raise CapExceededError(f"parallel multiple on {t * nw} points exceeds cap {point_cap}")
    elements = {_lift_parallel(beta, t) for beta in b.elements}
    gens = [_lift_parallel(g, t) for g in b.generators]
    group = group_from_elements(t * nw, elements, gens)
    assert group.order() == b.order()
    return group


def _lift_parallel(beta: Permutation, t: int) -> Permutation:
    nw = beta.degree
    images = [0] * (t * nw)
    for i in range(t):
        for w in range(nw):
            images[i * nw + w] = i * nw + beta(w)
    return Permutation(images)


def assemble_imprimitive(
    beta: Permutation, alphas: tuple[Permutation, ...]
) -> Permutation:
    """Eq-style fibre assembly: (v, w) -> (v alpha_w, w beta)."""
    nw = beta.degree
    nv = alphas[0].degree
    assert len(alphas) == nw
    images = [0] * (nv * nw)
    for w, alpha in enumerate(alphas):
        wb = beta.images[w]
        ai = alpha.images
        for v in range(nv):
            images[v * nw + w] = ai[v] * nw + wb
    return Permutation._unchecked(tuple(images))


def wreath_imprimitive(
    a: PermGroup,
    b: PermGroup,
    order_cap: int = DEFAULT_ORDER_CAP,
    point_cap: int = DEFAULT_POINT_CAP,
) -> PermGroup:
    """A wr B in the imprimitive action on V x W.

    Contains exactly the permutations (v, w) -> (v alpha_w, w beta) over
    all beta in B and all fibre tuples (alpha_w) in A^W; the fibres
    V x {w} are blocks.
    """
    nv, nw = a.degree, b.degree
    if nv * nw > point_cap:
        raise CapExceededError(f"wreath product on {nv * nw} points exceeds cap {point_cap}")
    order = a.order() ** nw * b.order()
    if order > order_cap:
        raise GroupTooLargeError(f"wreath product order {order} exceeds cap {order_cap}")
    a_elements = sorted(a.elements)
    elements = set()
    for beta in b.elements:
        for alphas in itertools.product(a_elements, repeat=nw):
            elements.add(assemble_imprimitive(beta, alphas))
    assert len(elements) == order
    ident_v = a.identity
    gens = []
    for w in range(nw):
        for g in a.generators:
            alphas = tuple(g if i == w else ident_v for i in range(nw))
            gens.append(assemble_imprimitive(b.identity, alphas))
    for g in b.generators:
        gens.append(assemble_imprimitive(g, (ident_v,) * nw))
    return group_from_elements(nv * nw, elements, gens, order_cap=order_cap)


def decompose_imprimitive(phi: Permutation, nv: int, nw: int) -> WreathDecomposition | None:
    """Invert the imprimitive assembly, or return None.

    Returns the (beta, (alpha_w)) certificate when ``phi`` maps every
    fibre V x {w} onto a single fibre; round-tripping through
    ``assemble_imprimitive`` reproduces ``phi`` exactly.
    """
    if phi.degree != nv * nw:
        raise ValueError(f"degree {phi.degree} does not factor as {nv}*{nw}")
    beta_images = [-1] * nw
    alpha_images = [[-1] * nv for _ in range(nw)]
    for w in range(nw):
        for v in range(nv):
            v2, w2 = divmod(phi(pair_point(v, w, nw)), nw)
            if beta_images[w] == -1:
                beta_images[w] = w2
            elif beta_images[w] != w2:
                return None  # fibre w is torn across two fibres
            alpha_images[w][v] = v2
    if sorted(beta_images) != list(range(nw)):
        return None
    beta = Permutation(beta_images)
    alphas = tuple(Permutation(images) for images in alpha_images)
    decomposition = WreathDecomposition(beta, alphas)
    assert assemble_imprimitive(beta, alphas) == phi
    return decomposition


def assemble_product_action(
    beta: Permutation, alphas: tuple[Permutation, ...], nv: int
) -> Permutation:
    """Product action assembly: (f phi)(w) = f(w beta) alpha_w."""
    nw = beta.degree
    points = nv**nw
    images = [0] * points
    alpha_rows = [alpha.images for alpha in alphas]
    beta_images = beta.images
    for x in range(points):
        f = point_function(x, nv, nw)
        y = 0
        for w in range(nw):
            y = y * nv + alpha_rows[w][f[beta_images[w]]]
        images[x] = y
    return Permutation._unchecked(tuple(images))


def wreath_product_action(
    a: PermGroup,
    b: PermGroup,
    order_cap: int = DEFAULT_ORDER_CAP,
    point_cap: int = DEFAULT_POINT_CAP,
) -> PermGroup:
    """A wrp B: the wreath product acting on the function set V^W."""
    nv, nw = a.degree, b.degree
    points = nv**nw
    if points > point_cap:
        raise CapExceededError(f"product action on {points} points exceeds cap {point_cap}")
    order = a.order() ** nw * b.order()
    if order > order_cap:
        raise GroupTooLargeError(f"wreath product order {order} exceeds cap {order_cap}")
    a_elements = sorted(a.elements)
    elements = set()
    for beta in b.elements:
        for alphas in itertools.product(a_elements, repeat=nw):
            elements.add(assemble_product_action(beta, alphas, nv))
    # the product action is faithful for |V| > 1, so no assemblies collide
    assert len(elements) == order
    ident_v = a.identity
    gens = []
    for w in range(nw):
        for g in a.generators:
            alphas = tuple(g if i == w else ident_v for i in range(nw))
            gens.append(assemble_product_action(b.identity, alphas, nv))
    for g in b.generators:
        gens.append(assemble_product_action(g, (ident_v,) * nw, nv))
    return group_from_elements(points, elements, gens, order_cap=order_cap)


def decompose_product_action(phi: Permutation, nv: int, nw: int) -> WreathDecomposition | None:
    """The unique (beta, (alpha_w)) with phi = product-action assembly, or None.

    The fibre permutations are read off constant functions (a product-form
    phi sends the constant v to w -> v alpha_w), beta is read off
    indicator-like functions, and the candidate is then verified against
    every function.  Uniqueness holds because the assembly map is
    injective for |V| > 1.
    """
    if phi.degree != nv**nw:
        raise ValueError(f"degree {phi.degree} is not {nv}^{nw}")
    alpha_images = [[-1] * nv for _ in range(nw)]
    for v in range(nv):
        image = point_function(phi(function_point((v,) * nw, nv)), nv, nw)
        for w in range(nw):
            alpha_images[w][v] = image[w]
    alphas = []
    for images in alpha_images:
        if sorted(images) != list(range(nv)):
            return None
        alphas.append(Permutation(images))
    beta_images = [-1] * nw
    for w_marked in range(nw):
        f = tuple(1 if w == w_marked else 0 for w in range(nw))
        image = point_function(phi(function_point(f, nv)), nv, nw)
        hits = [w for w in range(nw) if image[w] == alphas[w](1)]
        if len(hits) != 1:
            return None
        beta_images[hits[0]] = w_marked  # w beta = w_marked exactly at the hit
    if sorted(beta_images) != list(range(nw)):
        return None
    beta = Permutation(beta_images)
    candidate = assemble_product_action(beta, tuple(alphas), nv)
    if candidate != phi:
        return None
    return WreathDecomposition(beta, tuple(alphas))
