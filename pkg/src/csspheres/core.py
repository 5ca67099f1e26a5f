"""Immutable simplicial-complex kernel.

Vertices are nonzero signed integers; the ambient vertex set of a complex on
``ambient_n = n`` is ``V_n = {±1, ..., ±n}``.  Faces are stored as tuples
sorted by the canonical vertex order (|label| ascending, positive before
negative), and a complex is the antichain of its facets.  Two conventions
matter throughout:

* the *void* complex has no faces at all (not even the empty one) and is
  absorbing for joins;
* the complex ``{∅}`` whose only face is empty has f-vector ``(1,)`` and is
  the identity for joins.

All objects are immutable after construction; every operation returns a new
object and is safe to call concurrently.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import networkx as nx

from .errors import (
    DimensionMismatch,
    FaceNotPresent,
    InvalidParameters,
    NotPure,
    OverlappingVertexSets,
    RidgeInThreeFacets,
)
from .gf2 import gf2_rank

Face = tuple[int, ...]

# Dimension assigned to the void complex (no faces); the complex {∅} has
# dimension -1.
VOID_DIM = -2


def vertex_key(v: int) -> tuple[int, bool]:
    """Sort key realizing the canonical vertex order 1 < -1 < 2 < -2 < ..."""
    return (abs(v), v < 0)


def face_key(face: Iterable[int]) -> tuple[tuple[int, bool], ...]:
    """Sort key for faces: lexicographic in the canonical vertex order."""
    return tuple(vertex_key(v) for v in face)


def canon_face(vertices: Iterable[int]) -> Face:
    """Return the canonical tuple form of a face.

    Raises InvalidParameters on a zero or repeated label.
    """
    face = tuple(sorted(vertices, key=vertex_key))
    for v in face:
        if not isinstance(v, int) or v == 0:
            raise InvalidParameters(f"vertex labels must be nonzero integers, got {v!r}")
    if len(set(face)) != len(face):
        raise InvalidParameters(f"repeated vertex in face {face}")
    return face


def antipode_face(face: Iterable[int]) -> Face:
    """Negate every label of a face and restore canonical order."""
    return tuple(sorted((-v for v in face), key=vertex_key))


class Complex:
    """A simplicial complex stored as the antichain of its facets.

    Lower faces are materialized on demand; membership of an arbitrary face is
    decided by containment in some facet via a per-vertex facet index.
    """

    __slots__ = ("ambient_n", "facets", "_cache")

    def __init__(self, facets: Iterable[Iterable[int]], ambient_n: int):
        if not isinstance(ambient_n, int) or ambient_n < 0:
            raise InvalidParameters(f"ambient_n must be a nonnegative integer, got {ambient_n!r}")
        canon = {canon_face(f) for f in facets}
        for face in canon:
            for v in face:
                if abs(v) > ambient_n:
                    raise InvalidParameters(f"label {v} exceeds ambient bound {ambient_n}")
        # Reduce to an antichain. Same-cardinality distinct sets can never be
        # nested, so the reduction only runs for mixed cardinalities.
        if len({len(f) for f in canon}) > 1:
            by_size = sorted(canon, key=len, reverse=True)
            kept: list[frozenset[int]] = []
            maximal = set()
            for face in by_size:
                fs = frozenset(face)
                if not any(fs < big for big in kept):
                    kept.append(fs)
                    maximal.add(face)
            canon = maximal
        object.__setattr__(self, "ambient_n", ambient_n)
        object.__setattr__(self, "facets", frozenset(canon))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Complex is immutable")

    # ------------------------------------------------------------------
    # basic queries
    # ------------------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for the complex {∅} and VOID_DIM for the void complex."""
        if self.is_void:
            return VOID_DIM
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def sorted_facets(self) -> tuple[Face, ...]:
        """Facets in canonical lexicographic order (deterministic output)."""
        if "sorted_facets" not in self._cache:
            self._cache["sorted_facets"] = tuple(sorted(self.facets, key=face_key))
        return self._cache["sorted_facets"]

    def vertices(self) -> tuple[int, ...]:
        if "vertices" not in self._cache:
            seen = {v for f in self.facets for v in f}
            self._cache["vertices"] = tuple(sorted(seen, key=vertex_key))
        return self._cache["vertices"]

    def _vertex_index(self) -> dict[int, tuple[frozenset[int], ...]]:
        if "vindex" not in self._cache:
            index: dict[int, list[frozenset[int]]] = {}
            for f in self.facets:
                fs = frozenset(f)
                for v in f:
                    index.setdefault(v, []).append(fs)
            self._cache["vindex"] = {v: tuple(fl) for v, fl in index.items()}
        return self._cache["vindex"]

    def has_face(self, face: Iterable[int]) -> bool:
        """True iff the given vertex set is contained in some facet."""
        face = canon_face(face)
        if not face:
            return not self.is_void
        index = self._vertex_index()
        candidates = None
        for v in face:
            lists = index.get(v)
            if lists is None:
                return False
            if candidates is None or len(lists) < len(candidates):
                candidates = lists
        fs = frozenset(face)
        return any(fs <= c for c in candidates)

    def __contains__(self, face) -> bool:
        return self.has_face(face)

    def faces_of_card(self, card: int) -> frozenset[Face]:
        """All faces with `card` vertices, materialized from the facets."""
        key = ("card", card)
        if key not in self._cache:
            if card < 0:
                self._cache[key] = frozenset()
            elif card == 0:
                self._cache[key] = frozenset([()]) if not self.is_void else frozenset()
            else:
                found = {
                    sub
                    for f in self.facets
                    if len(f) >= card
                    for sub in itertools.combinations(f, card)
                }
                self._cache[key] = frozenset(found)
        return self._cache[key]

    def iter_all_faces(self) -> Iterator[Face]:
        """Every face, the empty one included (unless void)."""
        for card in range(0, (self.dim + 1 if not self.is_void else 0) + 1):
            yield from self.faces_of_card(card)

    def f_counts(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_d); (0,) for the void complex."""
        if "f_counts" not in self._cache:
            if self.is_void:
                self._cache["f_counts"] = (0,)
            else:
                d = self.dim
                counts = [1]
                for card in range(1, d + 2):
                    # computed per cardinality and not cached: full closures
                    # of the larger complexes would dominate memory
                    found = {
                        sub
                        for f in self.facets
                        if len(f) >= card
                        for sub in itertools.combinations(f, card)
                    }
                    counts.append(len(found))
                self._cache["f_counts"] = tuple(counts)
        return self._cache["f_counts"]

    # ------------------------------------------------------------------
    # structural operations
    # ------------------------------------------------------------------

    def link(self, face: Iterable[int]) -> "Complex":
        """Faces disjoint from `face` whose union with it is a face."""
        face = canon_face(face)
        if not self.has_face(face):
            raise FaceNotPresent(f"face {face} not in complex")
        fs = frozenset(face)
        new_facets = [tuple(v for v in f if v not in fs) for f in self.facets if fs <= set(f)]
        return Complex(new_facets, self.ambient_n)

    def star(self, face: Iterable[int]) -> "Complex":
        """Subcomplex generated by the facets containing `face`."""
        face = canon_face(face)
        if not self.has_face(face):
            raise FaceNotPresent(f"face {face} not in complex")
        fs = frozenset(face)
        return Complex([f for f in self.facets if fs <= set(f)], self.ambient_n)

    def join(self, other: "Complex") -> "Complex":
        """Pairwise unions of facets; vertex sets must be disjoint."""
        mine = set(self.vertices())
        if mine & set(other.vertices()):
            raise OverlappingVertexSets(
                f"join requires disjoint vertex sets, shared: {sorted(mine & set(other.vertices()))}"
            )
        ambient = max(self.ambient_n, other.ambient_n)
        return Complex([f + g for f in self.facets for g in other.facets], ambient)

    def skeleton(self, k: int) -> "Complex":
        """All faces of dimension at most k."""
        if k < -1:
            raise InvalidParameters(f"skeleton dimension must be >= -1, got {k}")
        if self.is_void or k >= self.dim:
            return self
        small = [f for f in self.facets if len(f) <= k + 1]
        return Complex(list(self.faces_of_card(k + 1)) + small, self.ambient_n)

    def restriction(self, vertices: Iterable[int]) -> "Complex":
        """Faces contained in the given vertex set, as maximal faces."""
        allowed = set(vertices)
        if self.is_void:
            return self
        pieces = {tuple(v for v in f if v in allowed) for f in self.facets}
        return Complex(pieces, self.ambient_n)

    def difference(self, other: "Complex") -> "Complex":
        """Complex generated by the facets of self that are not facets of other."""
        if other.is_void:
            return self
        if not self.is_pure or not other.is_pure:
            raise NotPure("difference requires pure complexes")
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"difference requires equal dimensions, got {self.dim} and {other.dim}"
            )
        return Complex(self.facets - other.facets, self.ambient_n)

    def boundary(self) -> "Complex":
        """Complex generated by the ridges lying in exactly one facet."""
        if not self.is_pure:
            raise NotPure("boundary requires a pure complex")
        if self.is_void:
            return self
        counts: Counter[Face] = Counter()
        for f in self.facets:
            for r in itertools.combinations(f, len(f) - 1):
                counts[r] += 1
        bad = [r for r, c in counts.items() if c > 2]
        if bad:
            raise RidgeInThreeFacets(f"ridge {bad[0]} lies in {counts[bad[0]]} facets")
        return Complex([r for r, c in counts.items() if c == 1], self.ambient_n)

    def antipode(self) -> "Complex":
        """Image under the involution v -> -v."""
        return Complex([antipode_face(f) for f in self.facets], self.ambient_n)

    def relabel(self, mapping: Callable[[int], int], ambient_n: int) -> "Complex":
        """Apply an injective label map to every vertex."""
        return Complex([[mapping(v) for v in f] for f in self.facets], ambient_n)

    def with_ambient(self, ambient_n: int) -> "Complex":
        """Same facets inside a different ambient bound."""
        return Complex(self.facets, ambient_n)

    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Complex)
            and self.ambient_n == other.ambient_n
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.ambient_n, self.facets))

    def __repr__(self) -> str:
        return f"Complex(dim={self.dim}, ambient_n={self.ambient_n}, facets={len(self.facets)})"


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------


def antipode(x):
    """Antipode of a Face or a Complex (same kind out)."""
    if isinstance(x, Complex):
        return x.antipode()
    return antipode_face(x)


def simplex(vertices: Iterable[int], ambient_n: int) -> Complex:
    """The full simplex on the given vertices."""
    return Complex([canon_face(vertices)], ambient_n)


def cone(base: Complex, apex: int) -> Complex:
    """Join of `base` with the single vertex `apex`."""
    ambient = max(base.ambient_n, abs(apex))
    return base.join(Complex([(apex,)], ambient))


def suspension(base: Complex, poles: tuple[int, int]) -> Complex:
    """Join of `base` with the two-point complex on `poles`."""
    a, b = poles
    ambient = max(base.ambient_n, abs(a), abs(b))
    return base.join(Complex([(a,), (b,)], ambient))


def from_walk(vertices: list[int], ambient_n: int) -> Complex:
    """Path complex through `vertices`; a cycle when the walk closes up.

    A single vertex gives a point; two vertices give an edge.
    """
    if not vertices:
        return Complex([], ambient_n)
    if len(vertices) == 1:
        return Complex([(vertices[0],)], ambient_n)
    closed = vertices[0] == vertices[-1]
    seq = vertices[:-1] if closed else vertices
    edges = [
        (seq[i], seq[(i + 1) % len(seq)])
        for i in range(len(seq) if closed else len(seq) - 1)
    ]
    return Complex(edges, ambient_n)


@dataclass(frozen=True)
class FHVectors:
    """Face counts by dimension and the derived h-vector."""

    f: tuple[int, ...]  # f_{-1} .. f_d
    h: tuple[int, ...]  # h_0 .. h_{d+1}


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """h-vector from (f_-1, ..., f_d) via sum_i h_i t^{d+1-i} = sum_i f_{i-1}(t-1)^{d+1-i}."""
    d = len(f) - 2
    return tuple(
        sum((-1) ** (j - i) * _binom(d + 1 - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 2)
    )


def f_from_h(h: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of h_from_f."""
    d = len(h) - 2
    return tuple(
        sum(_binom(d + 1 - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 2)
    )


def fh_vectors(c: Complex) -> FHVectors:
    """Exact f-vector by downward closure plus the matching h-vector."""
    f = c.f_counts()
    if c.is_void:
        return FHVectors(f=f, h=(0,))
    return FHVectors(f=f, h=h_from_f(f))


def facet_ridge_graph(c: Complex) -> nx.Graph:
    """Graph on the facets of a pure complex, adjacent when sharing a ridge."""
    if not c.is_pure:
        raise NotPure("facet-ridge graph requires a pure complex")
    g = nx.Graph()
    g.add_nodes_from(c.sorted_facets())
    by_ridge: dict[Face, list[Face]] = {}
    for f in c.sorted_facets():
        for r in itertools.combinations(f, len(f) - 1):
            by_ridge.setdefault(r, []).append(f)
    for group in by_ridge.values():
        for a, b in itertools.combinations(group, 2):
            g.add_edge(a, b)
    return g


@dataclass(frozen=True)
class TopologyReport:
    """Cheap desk-scale sanity report: pseudomanifold checks plus GF(2) homology."""

    pure: bool
    connected: bool
    closed_pseudomanifold: bool
    euler: int
    z2_betti: tuple[int, ...]

    def is_sphere(self) -> bool:
        """Betti/pseudomanifold profile of a d-sphere (d >= 0)."""
        d = len(self.z2_betti) - 1
        if d < 0:
            return False
        expected = tuple(1 if i in (0, d) else 0 for i in range(d + 1))
        if d == 0:
            expected = (2,)
        return (
            self.pure
            and self.connected
            and self.closed_pseudomanifold
            and self.z2_betti == expected
        )

    def is_ball(self) -> bool:
        """Betti profile of a d-ball (contractible, not closed)."""
        d = len(self.z2_betti) - 1
        if d < 0:
            return False
        return (
            self.pure
            and self.connected
            and not self.closed_pseudomanifold
            and self.z2_betti == tuple(1 if i == 0 else 0 for i in range(d + 1))
        )


def _is_connected(c: Complex) -> bool:
    verts = c.vertices()
    if len(verts) <= 1:
        return True
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in c.facets:
        for a, b in zip(f, f[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in verts}) == 1


def z2_betti_numbers(c: Complex) -> tuple[int, ...]:
    """Unreduced GF(2) Betti numbers beta_0..beta_d via boundary-matrix ranks."""
    if c.is_void or c.dim < 0:
        return ()
    d = c.dim
    faces_by_card = [sorted(c.faces_of_card(card), key=face_key) for card in range(d + 2)]
    counts = [len(fs) for fs in faces_by_card]
    ranks = [0] * (d + 2)  # ranks[k] = rank of boundary map from card k to card k-1
    for card in range(2, d + 2):
        index = {f: i for i, f in enumerate(faces_by_card[card - 1])}
        rows = []
        for f in faces_by_card[card]:
            mask = 0
            for sub in itertools.combinations(f, card - 1):
                mask |= 1 << index[sub]
            rows.append(mask)
        ranks[card] = gf2_rank(rows)
    betti = []
    for i in range(d + 1):
        card = i + 1
        kernel = counts[card] - ranks[card] if card >= 2 else counts[card]
        image_above = ranks[card + 1] if card + 1 <= d + 1 else 0
        betti.append(kernel - image_above)
    return tuple(betti)


def topology_report(c: Complex) -> TopologyReport:
    """Purity, connectivity, closed-pseudomanifold check, Euler number, GF(2) Betti."""
    pure = c.is_pure
    connected = _is_connected(c)
    closed = False
    if pure and not c.is_void and c.dim >= 0:
        counts: Counter[Face] = Counter()
        for f in c.facets:
            for r in itertools.combinations(f, len(f) - 1):
                counts[r] += 1
        closed = all(v == 2 for v in counts.values())
        if c.dim == 0:
            closed = len(c.facets) == 2
    f = c.f_counts()
    euler = sum((-1) ** i * fi for i, fi in enumerate(f[1:]))
    return TopologyReport(
        pure=pure,
        connected=connected,
        closed_pseudomanifold=closed,
        euler=euler,
        z2_betti=z2_betti_numbers(c),
    )
