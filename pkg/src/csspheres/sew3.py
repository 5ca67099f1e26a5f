"""Three-dimensional sewing with facet trees.

For an admissible index set I the tree T(I) is a subgraph of the facet-ridge
graph of build_delta(3, n): a vertical column of facets through the edge
{1,2}, a short vertical path through the edge {1, -(n-2)}, and horizontal
row paths through row edges {n-1, n} and {n-i-1, n-i+1} for i in I.  The
complex B(I) generated by its nodes is a cs-1-neighborly 1-stacked 3-ball,
and sewing ±B(I) out of the sphere yields the cs-2-neighborly 3-sphere
Delta(I) on V_{n+1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .builders import build_delta, sew
from .core import Complex, Face, canon_face, face_key
from .errors import InvalidIndexSet, NTooSmall

MIN_N = 10


@dataclass(frozen=True)
class IndexSet:
    """Sorted subset of [3, n-6]; when it has two or more elements the first
    gap must exceed one."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.n < MIN_N:
            raise NTooSmall(f"index sets need n >= {MIN_N}, got {self.n}")
        idx = self.indices
        if tuple(sorted(set(idx))) != idx:
            raise InvalidIndexSet(f"indices must be strictly sorted, got {idx}")
        if any(i < 3 or i > self.n - 6 for i in idx):
            raise InvalidIndexSet(f"indices {idx} outside [3, {self.n - 6}]")
        if len(idx) >= 2 and idx[1] - idx[0] <= 1:
            raise InvalidIndexSet(f"first gap must exceed 1, got {idx[:2]}")

    @classmethod
    def parse(cls, n: int, text: str) -> "IndexSet":
        """Parse a comma list such as "3,5,6" (empty string allowed)."""
        idx = tuple(sorted(int(t) for t in text.split(",") if t.strip())) if text.strip() else ()
        return cls(n=n, indices=idx)

    def serialize(self) -> str:
        return ",".join(str(i) for i in self.indices)


def enum_I(n: int) -> list[IndexSet]:
    """All admissible index sets for the given n, in lexicographic order."""
    if n < MIN_N:
        raise NTooSmall(f"enum_I requires n >= {MIN_N}, got {n}")
    pool = range(3, n - 5)
    out = []
    for size in range(0, len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            if size >= 2 and combo[1] - combo[0] <= 1:
                continue
            out.append(IndexSet(n=n, indices=combo))
    return sorted(out, key=lambda s: s.indices)


@dataclass(frozen=True)
class FacetTree:
    """Tree on facets of build_delta(3, n); edges are ridge-sharing pairs."""

    source: IndexSet
    nodes: tuple[Face, ...]
    edges: tuple[tuple[Face, Face], ...]

    def to_nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.edges)
        return g

    def edge_list_text(self) -> str:
        """One edge per line, endpoints as comma-joined facet labels."""
        lines = [
            ",".join(str(v) for v in a) + "\t" + ",".join(str(v) for v in b)
            for a, b in self.edges
        ]
        return "\n".join(lines) + "\n"


def _column_path(n: int) -> list[Face]:
    """Facets through {1,2} with all-positive complements, walked end to end.

    This is the sub-path of the edge-link cycle of {1,2} between {3,5} and
    {4,6}, passing through {n-1, n}.
    """
    delta = build_delta(3, n)
    link = delta.link((1, 2))
    pos_edges = [e for e in link.facets if min(e) > 0]
    adjacency: dict[Face, list[Face]] = {e: [] for e in pos_edges}
    for a, b in itertools.combinations(pos_edges, 2):
        if set(a) & set(b):
            adjacency[a].append(b)
            adjacency[b].append(a)
    start = canon_face((3, 5))
    walk = [start]
    while True:
        nxt = [e for e in adjacency[walk[-1]] if len(walk) < 2 or e != walk[-2]]
        if not nxt:
            break
        assert len(nxt) == 1, "column walk branched; link structure unexpected"
        walk.append(nxt[0])
    assert walk[-1] == canon_face((4, 6)), "column walk did not end at {4,6}"
    return [canon_face((1, 2) + e) for e in walk]


def _row_nodes(n: int, row: int, steps: int) -> list[Face]:
    """Nodes of the horizontal path in the given row.

    Row 0 lies in the link of {n-1, n}; row i >= 1 in the link of
    {n-i-1, n-i+1}.  The walk starts at the column facet through {1,2} and
    proceeds through {1, -(ell-1)} into descending negative pairs.
    """
    if row == 0:
        base = (n - 1, n)
        ell = n - 1  # walk leaves through {1, -(n-2)}
    else:
        base = (n - row - 1, n - row + 1)
        ell = n - row - 1
    edges: list[tuple[int, int]] = [(1, 2)]
    if steps >= 1:
        edges.append((1, -(ell - 1)))
    for t in range(2, steps + 1):
        edges.append((-(ell - t + 1), -(ell - t)))
    return [canon_face(e + base) for e in edges]


def build_T(index_set: IndexSet) -> FacetTree:
    """Assemble and validate the facet tree T(I)."""
    n = index_set.n
    delta = build_delta(3, n)
    rows = (0,) + index_set.indices
    row_ends = index_set.indices + (n - 2,)

    column = _column_path(n)
    nodes: list[Face] = list(column)
    edges: list[tuple[Face, Face]] = list(zip(column, column[1:]))

    for row, end in zip(rows, row_ends):
        path = _row_nodes(n, row, end - row)
        assert path[0] in nodes, f"row {row} does not attach to the column"
        for a, b in zip(path, path[1:]):
            edges.append((a, b))
        nodes.extend(p for p in path[1:] if p not in nodes)

    short = [
        canon_face((1, -(n - 2), n - 1, n)),
        canon_face((1, -(n - 2), -(n - 1), n)),
        canon_face((1, -(n - 2), -(n - 1), -n)),
    ]
    assert short[0] in nodes, "short vertical path does not attach to row 0"
    edges.extend(zip(short, short[1:]))
    nodes.extend(p for p in short[1:] if p not in nodes)

    for f in nodes:
        assert delta.has_face(f), f"generated node {f} is not a facet"
    assert len(nodes) == 2 * n - 3, f"expected {2 * n - 3} nodes, got {len(nodes)}"
    for a, b in edges:
        assert len(set(a) & set(b)) == 3, f"tree edge {a}-{b} shares no ridge"
    graph = nx.Graph(edges)
    assert nx.is_tree(graph) and graph.number_of_nodes() == len(nodes)

    order = sorted(nodes, key=face_key)
    canon_edges = tuple(
        sorted((tuple(sorted(e, key=face_key)) for e in edges), key=lambda p: (face_key(p[0]), face_key(p[1])))
    )
    return FacetTree(source=index_set, nodes=tuple(order), edges=canon_edges)


def build_B_I(index_set: IndexSet) -> Complex:
    """The 3-ball generated by the nodes of T(I)."""
    tree = build_T(index_set)
    return Complex(tree.nodes, index_set.n)


def build_delta_I(index_set: IndexSet) -> Complex:
    """The cs 3-sphere on V_{n+1} obtained by sewing ±B(I) out of the base sphere."""
    n = index_set.n
    return sew(build_delta(3, n), build_B_I(index_set), n + 1)


def _ahu_code(adj: dict, root, parent) -> str:
    children = sorted(
        (_ahu_code(adj, c, root) for c in adj[root] if c != parent)
    )
    return "(" + "".join(children) + ")"


def _center(adj: dict) -> list:
    # iterative leaf stripping; the one or two middle vertices survive
    degrees = {v: len(nb) for v, nb in adj.items()}
    layer = [v for v, d in degrees.items() if d <= 1]
    remaining = len(adj)
    removed = set()
    while remaining > 2:
        nxt = []
        for leaf in layer:
            removed.add(leaf)
            remaining -= 1
            for nb in adj[leaf]:
                if nb in removed:
                    continue
                degrees[nb] -= 1
                if degrees[nb] == 1:
                    nxt.append(nb)
        layer = nxt
    return [v for v in adj if v not in removed]


def tree_canonical_code(tree: nx.Graph) -> str:
    """Least rooted encoding over the center rootings (unlabeled invariant).

    The center (one or two middle vertices) is preserved by isomorphisms, so
    equal codes characterize isomorphic trees.
    """
    if tree.number_of_nodes() == 0:
        return ""
    adj = {v: sorted(tree.neighbors(v)) for v in tree.nodes}
    return min(_ahu_code(adj, c, None) for c in _center(adj))


def tree_isomorphic(t1: FacetTree | nx.Graph, t2: FacetTree | nx.Graph) -> bool:
    """Unlabeled tree isomorphism via canonical centroid-rooted encodings."""
    g1 = t1.to_nx() if isinstance(t1, FacetTree) else t1
    g2 = t2.to_nx() if isinstance(t2, FacetTree) else t2
    if g1.number_of_nodes() != g2.number_of_nodes():
        return False
    return tree_canonical_code(g1) == tree_canonical_code(g2)
