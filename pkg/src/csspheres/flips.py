"""Bistellar flips and the symmetric multi-flip spheres.

A flip replaces the star A * ∂B̄ by ∂Ā * B̄ whenever lk(A) = ∂B̄ and B is
not a face.  ``fg_pair`` produces the arithmetic-progression face pairs
(F_i, G_i) whose flips exist in every build_delta(2k-1, n) sphere with
3 <= i <= n - 4k + 3, and ``build_gamma`` applies a whole set of them (and
their antipodes) simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Complex, Face, antipode_face, canon_face
from .errors import (
    FaceMissing,
    FacePresent,
    IndexOutOfRange,
    InvalidParameters,
    LinkMismatch,
    SharedFacets,
)
from .builders import build_delta


def bistellar_flip(c: Complex, a: Iterable[int], b: Iterable[int]) -> Complex:
    """Single bistellar flip removing face `a` and introducing face `b`."""
    a = canon_face(a)
    b = canon_face(b)
    if not c.has_face(a):
        raise FaceMissing(f"face {a} not in complex")
    if c.has_face(b):
        raise FacePresent(f"face {b} already in complex")
    link = c.link(a)
    expected = frozenset(
        tuple(v for v in b if v != drop) for drop in b
    )
    if link.facets != expected:
        raise LinkMismatch(f"link of {a} is not the boundary of the simplex on {b}")
    star_facets = {f for f in c.facets if set(a) <= set(f)}
    replacement = {canon_face(tuple(v for v in a if v != drop) + b) for drop in a}
    return Complex((c.facets - star_facets) | replacement, c.ambient_n)


@dataclass(frozen=True)
class FlipPair:
    """The faces F_i = {i, i+3, i+7, ...} (size k) and G_i = {i-1, i+1, i+5, ...} (size k+1)."""

    k: int
    i: int
    f: Face
    g: Face


def fg_pair(k: int, i: int) -> FlipPair:
    """Arithmetic-progression flip pair at index i; defined for k >= 2."""
    if k < 2:
        raise InvalidParameters(f"fg_pair requires k >= 2, got {k}")
    f = (i,) + tuple(i + 3 + 4 * j for j in range(k - 1))
    g = (i - 1,) + tuple(i + 1 + 4 * j for j in range(k))
    return FlipPair(k=k, i=i, f=f, g=g)


@dataclass(frozen=True)
class FlipPlan:
    """A set of flip indices J applied symmetrically.

    Indices live in [3, n-4k+3], the full range where the (F_i, G_i) flip is
    admissible (G_i must fit inside [n]).  The pairwise non-isomorphism
    guarantee for the flipped spheres additionally needs k >= 3 and indices
    at most n-4k+2, which leaves the last admissible flip untouched.
    """

    k: int
    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        lo, hi = 3, self.n - 4 * self.k + 3
        bad = [i for i in self.indices if not lo <= i <= hi]
        if bad:
            raise IndexOutOfRange(
                f"flip indices {bad} outside [{lo}, {hi}] for k={self.k}, n={self.n}"
            )
        if tuple(sorted(self.indices)) != self.indices:
            raise InvalidParameters("flip indices must be sorted")

    @classmethod
    def parse(cls, text: str) -> "FlipPlan":
        """Parse the "k n i1,i2,..." serialization."""
        parts = text.split()
        if len(parts) not in (2, 3):
            raise InvalidParameters(f"expected 'k n i1,i2,...', got {text!r}")
        k, n = int(parts[0]), int(parts[1])
        idx = tuple(int(t) for t in parts[2].split(",")) if len(parts) == 3 and parts[2] else ()
        return cls(k=k, n=n, indices=tuple(sorted(idx)))

    def serialize(self) -> str:
        return f"{self.k} {self.n} {','.join(str(i) for i in self.indices)}".rstrip()


def build_gamma(k: int, n: int, indices: Iterable[int]) -> Complex:
    """Apply the symmetric flips at all indices in J to build_delta(2k-1, n).

    All stars (those of F_i, -F_i over i in J) are checked to be pairwise
    facet-disjoint, then removed and replaced in one batched edit.  The
    result is a cs combinatorial (2k-1)-sphere with the same (k-2)-skeleton;
    its cs-(k-1)-neighborly non-isomorphism guarantee needs k >= 3.
    """
    if k < 2:
        raise InvalidParameters(f"build_gamma requires k >= 2, got {k}")
    plan = FlipPlan(k=k, n=n, indices=tuple(sorted(set(indices))))
    delta = build_delta(2 * k - 1, n)
    removed: set[Face] = set()
    added: set[Face] = set()
    for i in plan.indices:
        pair = fg_pair(k, i)
        for face_a, face_b in ((pair.f, pair.g), (antipode_face(pair.f), antipode_face(pair.g))):
            if delta.has_face(face_b):
                raise FacePresent(f"face {face_b} already present, flip {i} inadmissible")
            link = delta.link(face_a)
            expected = frozenset(tuple(v for v in face_b if v != drop) for drop in face_b)
            if link.facets != expected:
                raise LinkMismatch(f"link of {face_a} is not the simplex boundary on {face_b}")
            star = {f for f in delta.facets if set(face_a) <= set(f)}
            if star & removed:
                raise SharedFacets(f"star of {face_a} overlaps an earlier flip")
            removed |= star
            added |= {
                canon_face(tuple(v for v in face_a if v != drop) + face_b) for drop in face_a
            }
    return Complex((delta.facets - removed) | added, n)
