"""Isomorphism and automorphism search via invariant-pruned backtracking.

Vertices are matched class-by-class on isomorphism-invariant fingerprints
(degree, multiset of incident edge-link sizes, link f-vector), rarest class
first.  Partial maps are pruned by edge-link census equality on assigned
pairs and by face-indicator consistency on small cardinalities.  When both
complexes are cs and cs-2-neighborly, the unique non-neighbor of a vertex is
its antipode, so any isomorphism satisfies phi(-v) = -phi(v); the search
then assigns one representative per antipodal pair.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .core import Complex, Face, canon_face, fh_vectors, vertex_key
from .errors import SearchBudgetExceeded

VertexMap = dict[int, int]


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant per-vertex signature."""

    degree: int
    incident_link_sizes: tuple[int, ...]
    link_f: tuple[int, ...]


def _edge_census(c: Complex) -> dict[Face, int]:
    verts: dict[Face, set[int]] = {}
    for f in c.facets:
        for e in itertools.combinations(f, 2):
            verts.setdefault(e, set()).update(v for v in f if v not in e)
    return {e: len(vs) for e, vs in verts.items()}


def vertex_fingerprints(c: Complex) -> dict[int, Fingerprint]:
    """Deterministic fingerprint for every vertex of `c`."""
    census = _edge_census(c)
    incident: dict[int, list[int]] = {v: [] for v in c.vertices()}
    for e, size in census.items():
        for v in e:
            incident[v].append(size)
    out = {}
    for v in c.vertices():
        link_f = fh_vectors(c.link((v,))).f
        out[v] = Fingerprint(
            degree=sum(1 for e in census if v in e),
            incident_link_sizes=tuple(sorted(incident[v])),
            link_f=link_f,
        )
    return out


def _pair_key(u: int, v: int) -> Face:
    return tuple(sorted((u, v), key=vertex_key))


def _is_cs_2_neighborly(c: Complex) -> bool:
    """cs with every non-antipodal vertex pair an edge (intrinsic, no ground set)."""
    verts = set(c.vertices())
    if not verts or any(-v not in verts for v in verts):
        return False
    for f in c.facets:
        if len({abs(v) for v in f}) != len(f):
            return False
        if canon_face([-v for v in f]) not in c.facets:
            return False
    edges = c.faces_of_card(2)
    n_pairs = len(verts) * (len(verts) - 1) // 2 - len(verts) // 2
    return len(edges) == n_pairs


def _pair_facet_degrees(c: Complex) -> dict[Face, int]:
    deg: Counter[Face] = Counter()
    for f in c.facets:
        for e in itertools.combinations(f, 2):
            deg[e] += 1
    return dict(deg)


def _triangle_profile(c: Complex) -> dict[int, tuple]:
    """Per-vertex sorted multiset of facet-degrees of incident triangles."""
    deg: Counter[Face] = Counter()
    for f in c.facets:
        for t in itertools.combinations(f, 3):
            deg[t] += 1
    per_vertex: dict[int, Counter] = {v: Counter() for v in c.vertices()}
    for t, d in deg.items():
        for v in t:
            per_vertex[v][d] += 1
    return {v: tuple(sorted(cnt.items())) for v, cnt in per_vertex.items()}


class _Search:
    def __init__(self, a: Complex, b: Complex, budget: int | None):
        self.a, self.b = a, b
        self.budget = budget
        self.nodes = 0
        self.fa = vertex_fingerprints(a)
        self.fb = vertex_fingerprints(b)
        self.ca = _edge_census(a)
        self.cb = _edge_census(b)
        self.da = _pair_facet_degrees(a)
        self.db = _pair_facet_degrees(b)
        # Refined vertex classes: fingerprint plus incident (link size, facet
        # degree) pairs plus incident triangle degrees.  Purely invariant, so
        # restricting candidate images to equal classes is sound.
        tri_a, tri_b = _triangle_profile(a), _triangle_profile(b)
        self.ka = {
            v: (self.fa[v], self._incident_profile(v, self.ca, self.da), tri_a[v])
            for v in a.vertices()
        }
        self.kb = {
            v: (self.fb[v], self._incident_profile(v, self.cb, self.db), tri_b[v])
            for v in b.vertices()
        }
        self.antipodal = _is_cs_2_neighborly(a) and _is_cs_2_neighborly(b)
        d = a.dim
        fcounts = a.f_counts()
        self.prune_cards = [
            t
            for t in range(2, min(d + 1, 4) + 1)
            if t < len(fcounts) and fcounts[t] < _choose(len(a.vertices()), t)
        ]
        self.faces_a = {t: a.faces_of_card(t) for t in self.prune_cards}
        self.faces_b = {t: b.faces_of_card(t) for t in self.prune_cards}
        self.facets_b = b.facets

    @staticmethod
    def _incident_profile(v: int, census: dict[Face, int], degrees: dict[Face, int]) -> tuple:
        return tuple(sorted((census[e], degrees[e]) for e in census if v in e))

    def order_and_domains(self) -> tuple[list[int], dict[int, list[int]]]:
        class_sizes = Counter(self.ka.values())
        verts = sorted(self.a.vertices(), key=vertex_key)
        if self.antipodal:
            verts = [v for v in verts if v > 0]
        verts.sort(key=lambda v: (class_sizes[self.ka[v]], vertex_key(v)))
        domains = {
            v: [w for w in sorted(self.b.vertices(), key=vertex_key) if self.kb[w] == self.ka[v]]
            for v in verts
        }
        return verts, domains

    def _consistent(self, mapping: VertexMap, assigned: list[int], v: int, w: int) -> bool:
        for u in assigned:
            pa, pb = _pair_key(u, v), _pair_key(mapping[u], w)
            if self.ca.get(pa) != self.cb.get(pb) or self.da.get(pa) != self.db.get(pb):
                return False
        for t in self.prune_cards:
            if t - 1 > len(assigned):
                continue
            have, want = self.faces_a[t], self.faces_b[t]
            for combo in itertools.combinations(assigned, t - 1):
                face = canon_face(combo + (v,))
                image = canon_face(tuple(mapping[u] for u in combo) + (w,))
                if (face in have) != (image in want):
                    return False
        return True

    def run(self, find_all: bool) -> list[VertexMap]:
        verts, domains = self.order_and_domains()
        results: list[VertexMap] = []
        mapping: VertexMap = {}
        assigned: list[int] = []
        used: set[int] = set()

        def extend(v: int, w: int) -> list[tuple[int, int]]:
            pairs = [(v, w)]
            if self.antipodal:
                pairs.append((-v, -w))
            return pairs

        def backtrack(idx: int) -> bool:
            if idx == len(verts):
                image = {canon_face(tuple(mapping[x] for x in f)) for f in self.a.facets}
                if image == self.facets_b:
                    results.append(dict(mapping))
                    return not find_all
                return False
            v = verts[idx]
            for w in domains[v]:
                if w in used:
                    continue
                if self.antipodal and -w in used:
                    continue
                self.nodes += 1
                if self.budget is not None and self.nodes > self.budget:
                    raise SearchBudgetExceeded(f"exceeded {self.budget} search nodes")
                ok = True
                trail = []
                for vv, ww in extend(v, w):
                    if not self._consistent(mapping, assigned, vv, ww):
                        ok = False
                        break
                    mapping[vv] = ww
                    used.add(ww)
                    assigned.append(vv)
                    trail.append((vv, ww))
                if ok and backtrack(idx + 1):
                    return True
                for vv, ww in reversed(trail):
                    del mapping[vv]
                    used.discard(ww)
                    assigned.pop()
            return False

        backtrack(0)
        return results


def _choose(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


def necessary_conditions(a: Complex, b: Complex) -> list[tuple[str, bool]]:
    """Cheap isomorphism invariants compared in order; any False settles it."""
    checks = [("f-vector", fh_vectors(a).f == fh_vectors(b).f)]
    fa, fb = vertex_fingerprints(a), vertex_fingerprints(b)
    checks.append(("fingerprint multiset", Counter(fa.values()) == Counter(fb.values())))
    checks.append(
        ("edge-link census multiset", Counter(_edge_census(a).values()) == Counter(_edge_census(b).values()))
    )
    return checks


def isomorphic(a: Complex, b: Complex, budget: int | None = None) -> VertexMap | None:
    """A witness vertex bijection mapping facets onto facets, or None.

    None is a certificate: the backtracking is exhaustive (unless `budget`
    is given and exceeded, which raises instead).
    """
    if not a.vertices() or not b.vertices():
        return {} if a.facets == b.facets else None
    if any(not ok for _, ok in necessary_conditions(a, b)):
        return None
    found = _Search(a, b, budget).run(find_all=False)
    return found[0] if found else None


def automorphisms(c: Complex, budget: int | None = None) -> list[VertexMap]:
    """All vertex bijections of `c` onto itself preserving the facet set.

    Always contains the identity; for cs complexes also the antipodal map.
    Sorted deterministically by image sequence.
    """
    if not c.vertices():
        return [{}]
    maps = _Search(c, c, budget).run(find_all=True)
    verts = sorted(c.vertices(), key=vertex_key)
    maps.sort(key=lambda m: tuple(vertex_key(m[v]) for v in verts))
    return maps


def apply_vertex_map(mapping: VertexMap, c: Complex, ambient_n: int | None = None) -> Complex:
    """Relabel `c` through a vertex bijection."""
    return Complex(
        [[mapping[v] for v in f] for f in c.facets],
        c.ambient_n if ambient_n is None else ambient_n,
    )


def identity_map(c: Complex) -> VertexMap:
    return {v: v for v in c.vertices()}


def antipodal_map(c: Complex) -> VertexMap:
    return {v: -v for v in c.vertices()}
