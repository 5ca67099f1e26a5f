"""Constructions of the centrally symmetric spheres and balls.

``build_delta(d, n)`` produces the cs combinatorial d-sphere on vertex set
V_n = {±1,...,±n} that is cs-⌈d/2⌉-neighborly; ``build_B(d, i, n)`` the
cs-i-neighborly, i-stacked combinatorial d-ball used in its inductive
(sewing) construction.  Both are defined by mutual recursion:

* Delta(1, n) is the cycle (1, 2, ..., n, -1, -2, ..., -n, 1);
* Delta(d, d+1) is the boundary of the (d+1)-dimensional cross-polytope;
* B(d, j, n) is the void complex for j < 0, and B(1, 0, n) the edge {-1, n};
* B(2k-1, k, n) = Delta(2k-1, n) minus B(2k-1, k-1, n);
* B(d, i, n) = (B(d-1, i, n-1) * n) ∪ ((-B(d-1, i-1, n-1)) * (-n));
* Delta(d, n+1) is obtained from Delta(d, n) by the sewing step that
  replaces ±B(d, ⌈d/2⌉-1, n) with the cones ±(∂B * (n+1)).

Results are memoized under a lock; the cache may be read concurrently.
"""

from __future__ import annotations

import threading
from typing import Iterable

from .core import Complex, antipode_face, canon_face, cone, from_walk
from .errors import InvalidParameters, NegativeLabel, NotSubcomplex, SharedFacets

_CACHE: dict[tuple, Complex] = {}
_CACHE_LOCK = threading.Lock()


def cache_clear() -> None:
    """Drop all memoized spheres and balls (mainly for tests)."""
    with _CACHE_LOCK:
        _CACHE.clear()


def _cached(key: tuple, build) -> Complex:
    got = _CACHE.get(key)
    if got is not None:
        return got
    # Build outside the lock: the recursion is well-founded, so re-entry on
    # the same key cannot happen, and duplicate work is harmless.
    value = build()
    with _CACHE_LOCK:
        return _CACHE.setdefault(key, value)


def cross_polytope(n: int) -> Complex:
    """Boundary of the n-dimensional cross-polytope: one sign choice per pair."""
    if n < 1:
        raise InvalidParameters(f"cross_polytope needs n >= 1, got {n}")

    def build():
        facets: list[tuple[int, ...]] = [()]
        for i in range(1, n + 1):
            facets = [f + (s * i,) for f in facets for s in (1, -1)]
        return Complex(facets, n)

    return _cached(("cross", n), build)


def build_delta(d: int, n: int) -> Complex:
    """The cs combinatorial d-sphere on V_n (cs-⌈d/2⌉-neighborly)."""
    if d < 1 or n < d + 1:
        raise InvalidParameters(f"build_delta requires d >= 1 and n >= d+1, got d={d}, n={n}")

    def build():
        if d == 1:
            return from_walk(list(range(1, n + 1)) + list(range(-1, -n - 1, -1)) + [1], n)
        if n == d + 1:
            return cross_polytope(d + 1)
        prev = build_delta(d, n - 1)
        ball = build_B(d, (d + 1) // 2 - 1, n - 1)
        return sew(prev, ball, n)

    return _cached(("delta", d, n), build)


def build_B(d: int, i: int, n: int) -> Complex:
    """The cs-i-neighborly, i-stacked d-ball B(d, i, n) on V_n; void for i < 0."""
    if d < 1 or n < d + 1:
        raise InvalidParameters(f"build_B requires d >= 1 and n >= d+1, got d={d}, n={n}")
    if i > (d + 1) // 2:
        raise InvalidParameters(f"build_B requires i <= ceil(d/2), got d={d}, i={i}")
    if i < 0:
        return Complex([], n)

    def build():
        if d % 2 == 1 and i == (d + 1) // 2:
            return build_delta(d, n).difference(build_B(d, i - 1, n))
        if d == 1:  # i == 0 here
            return Complex([(-1, n)], n)
        upper = cone(build_B(d - 1, i, n - 1), n)
        lower = cone(build_B(d - 1, i - 1, n - 1).antipode(), -n)
        return Complex(upper.facets | lower.facets, n)

    return _cached(("B", d, i, n), build)


def sew(gamma: Complex, ball: Complex, new_vertex: int) -> Complex:
    """Replace ±ball inside the cs sphere `gamma` by cones over its boundary.

    The facets of `ball` and its antipode are removed and the cones
    ∂ball * new_vertex and ∂(-ball) * (-new_vertex) inserted.  Requires
    `ball` to be a full-dimensional pure subcomplex of `gamma` sharing no
    facets with its antipode, and new_vertex = ambient_n + 1.
    """
    if new_vertex != gamma.ambient_n + 1:
        raise InvalidParameters(
            f"sew needs new_vertex == ambient_n + 1 = {gamma.ambient_n + 1}, got {new_vertex}"
        )
    if ball.is_void or not ball.is_pure or ball.dim != gamma.dim:
        raise NotSubcomplex("sew needs a pure full-dimensional ball inside the sphere")
    neg = ball.antipode()
    if not ball.facets <= gamma.facets or not neg.facets <= gamma.facets:
        raise NotSubcomplex("ball (or its antipode) is not a full-dimensional subcomplex")
    if ball.facets & neg.facets:
        raise SharedFacets("ball shares facets with its antipode")
    rim = ball.boundary()
    new_facets = set(gamma.facets) - ball.facets - neg.facets
    new_facets.update(f + (new_vertex,) for f in rim.facets)
    new_facets.update(antipode_face(f) + (-new_vertex,) for f in rim.facets)
    return Complex(new_facets, new_vertex)


def build_lambda(d: int, n: int, normalize: bool = False) -> Complex:
    """The cs d-sphere arising as the link of the edge {1,2} in Delta(d+2, n+2).

    Lives on W_n = {±3, ..., ±(n+2)} by default; with ``normalize=True`` the
    labels are shifted down by two onto V_n.
    """
    if d < 1 or n < d + 1:
        raise InvalidParameters(f"build_lambda requires d >= 1 and n >= d+1, got d={d}, n={n}")

    def build():
        link = build_delta(d + 2, n + 2).link((1, 2))
        return link

    lam = _cached(("lambda", d, n), build)
    if normalize:
        return lam.relabel(lambda v: v - 2 if v > 0 else v + 2, n)
    return lam


def lambda_ground(n: int) -> tuple[int, ...]:
    """Positive labels of the W_n vertex set {±3, ..., ±(n+2)}."""
    return tuple(range(3, n + 3))


def squeezed_facet_family(k: int, n: int) -> list[tuple[int, ...]]:
    """Gale-form facets {i_1, i_1+1, ..., i_k, i_k+1} in [n] with gaps >= 2."""
    if k < 1 or n < k + 1:
        raise InvalidParameters(f"squeezed family requires k >= 1 and n >= k+1, got k={k}, n={n}")
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], start: int, remaining: int) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for i in range(start, n):
            extend(prefix + (i, i + 1), i + 2, remaining - 1)

    extend((), 1, k)
    return out


def is_squeezed_facet(face: Iterable[int]) -> bool:
    """True iff `face` has the Gale form {i_1, i_1+1, ..., i_k, i_k+1}, gaps >= 2."""
    face = sorted(face)
    if not face or len(face) % 2 or face[0] < 1:
        return False
    pairs = [(face[j], face[j + 1]) for j in range(0, len(face), 2)]
    if any(b != a + 1 for a, b in pairs):
        return False
    return all(pairs[j + 1][0] >= pairs[j][0] + 2 for j in range(len(pairs) - 1))


def squeezed_ball(k: int, n: int) -> Complex:
    """The ball generated by the full Gale-form facet family on [n]."""
    return Complex(squeezed_facet_family(k, n), n)


def rho_embed(x):
    """Relabel positive vertices by i -> 2i+1 (Face or Complex in, same kind out)."""
    if isinstance(x, Complex):
        verts = x.vertices()
        if any(v < 0 for v in verts):
            raise NegativeLabel("rho_embed requires all labels positive")
        return x.relabel(lambda v: 2 * v + 1, 2 * x.ambient_n + 1)
    face = canon_face(x)
    if any(v < 0 for v in face):
        raise NegativeLabel("rho_embed requires all labels positive")
    return tuple(2 * v + 1 for v in face)


def lambda_squeezed(k: int, n: int, ball: Complex) -> Complex:
    """Sew the image of a squeezed (2k-1)-ball on [n] into the edge-link sphere.

    Replaces ±rho(ball) inside build_lambda(2k-1, 2n-1) by cones over their
    boundaries from the new vertex pair ±(2n+2); the result is a cs
    combinatorial (2k-1)-sphere whose link at 2n+2 remembers the ball.
    """
    if k < 1 or n < k + 1:
        raise InvalidParameters(f"lambda_squeezed requires k >= 1 and n >= k+1, got k={k}, n={n}")
    if ball.dim != 2 * k - 1:
        raise InvalidParameters(f"ball must be ({2 * k - 1})-dimensional, got dim {ball.dim}")
    if not all(is_squeezed_facet(f) for f in ball.facets):
        raise InvalidParameters("ball facets must be in Gale (squeezed) form")
    lam = build_lambda(2 * k - 1, 2 * n - 1)
    image = rho_embed(ball).with_ambient(lam.ambient_n)
    return sew(lam, image, 2 * n + 2)


def eq1_expansion(d: int, i: int, n: int) -> Complex:
    """Two-step unrolling of the B(d, i, n) recursion (d >= 3, i <= ⌈d/2⌉ - 1).

    B(d,i,n) = (B(d-2,i,n-2) * (n-1, n))
             ∪ ((-B(d-2,i-1,n-2)) * (n, -n+1, -n))
             ∪ (B(d-2,i-2,n-2) * (n-1, -n)).
    """
    if d < 3 or i > (d + 1) // 2 - 1:
        raise InvalidParameters("expansion defined for d >= 3 and i <= ceil(d/2)-1")
    parts = [
        build_B(d - 2, i, n - 2).join(from_walk([n - 1, n], n)),
        build_B(d - 2, i - 1, n - 2).antipode().join(from_walk([n, -n + 1, -n], n)),
        build_B(d - 2, i - 2, n - 2).join(from_walk([n - 1, -n], n)),
    ]
    facets = set()
    for p in parts:
        facets |= p.facets
    return Complex(facets, n)


def b31_paths(n: int) -> tuple[Complex, Complex]:
    """The two explicit join factors of B(3, 1, n): a long path and an edge path.

    B(3,1,n) = (path(n-2, ..., 1, -(n-2), ..., -1) * (n-1, n))
             ∪ ((1, -(n-2)) * path(n, -(n-1), -n)).
    """
    long_path = from_walk(list(range(n - 2, 0, -1)) + list(range(-n + 2, 0)), n)
    short_path = from_walk([n, -n + 1, -n], n)
    return long_path, short_path
