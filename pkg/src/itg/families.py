"""Constructors for the named graph families used as patterns and witnesses.

Vertex numbering is fixed and documented per constructor (path spine
first, decorations last) so tests and search anchors can reference
vertices deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphConstructionError
from .graphs import Graph


def build_path(n: int) -> Graph:
    """Path on n >= 1 vertices, 0-1-...-(n-1)."""
    if n < 1:
        raise GraphConstructionError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices, 0-1-...-(n-1)-0."""
    if n < 3:
        raise GraphConstructionError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    if n < 1:
        raise GraphConstructionError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def build_star(n: int) -> Graph:
    """Star on n >= 1 vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise GraphConstructionError(f"star needs n >= 1, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def build_f1(k: int) -> Graph:
    """Fork-free certificate path: k+2 vertices, 0-1-...-(k+1).

    The pattern theorems use k >= 2; smaller k (down to 0) is accepted
    because the iterate recursions shrink k below that floor.
    """
    if k < 0:
        raise GraphConstructionError(f"f1 needs k >= 0, got {k}")
    return build_path(k + 2)


def build_f2(k: int) -> Graph:
    """Path on k+3 vertices with one extra chord (0,2): one end-triangle."""
    if k < 2:
        raise GraphConstructionError(f"f2 needs k >= 2, got {k}")
    edges = [(i, i + 1) for i in range(k + 2)]
    edges.append((0, 2))
    return Graph.from_edges(k + 3, edges)


def build_f3(k: int) -> Graph:
    """Path on k+3 vertices with chords (0,2) and (k,k+2): two end-triangles."""
    if k < 2:
        raise GraphConstructionError(f"f3 needs k >= 2, got {k}")
    edges = [(i, i + 1) for i in range(k + 2)]
    edges.append((0, 2))
    edges.append((k, k + 2))
    return Graph.from_edges(k + 3, edges)


def build_f4(k: int) -> Graph:
    """Spine path 0..k-2 with two pendant vertices at each end.

    k+3 vertices, k+2 edges; pendants are k-1,k (at spine vertex 0) and
    k+1,k+2 (at spine vertex k-2). Computed diameter is k (see the
    discrepancy note in the docs).
    """
    if k < 3:
        raise GraphConstructionError(f"f4 needs k >= 3, got {k}")
    edges = [(i, i + 1) for i in range(k - 2)]
    edges += [(0, k - 1), (0, k), (k - 2, k + 1), (k - 2, k + 2)]
    return Graph.from_edges(k + 3, edges)


def build_f5(k: int) -> Graph:
    """Spine path 0..k with two pendant vertices k+1,k+2 at spine vertex k.

    k+3 vertices, k+2 edges, diameter k+1.
    """
    if k < 1:
        raise GraphConstructionError(f"f5 needs k >= 1, got {k}")
    edges = [(i, i + 1) for i in range(k)]
    edges += [(k, k + 1), (k, k + 2)]
    return Graph.from_edges(k + 3, edges)


def build_lollipop(n: int, g: int) -> Graph:
    """Cycle 0..g-1 plus a pendant path g..n-1 attached at cycle vertex 0.

    n total vertices; n = g yields the bare cycle.
    """
    if g < 3:
        raise GraphConstructionError(f"lollipop needs cycle length >= 3, got {g}")
    if n < g:
        raise GraphConstructionError(f"lollipop needs n >= g, got n={n}, g={g}")
    edges = [(i, (i + 1) % g) for i in range(g)]
    prev = 0
    for v in range(g, n):
        edges.append((prev, v))
        prev = v
    return Graph.from_edges(n, edges)


# -- named regular graphs ------------------------------------------------


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def kneser(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of range(n) in sorted order; edges join
    disjoint subsets."""
    subsets = list(combinations(range(n), k))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph.from_edges(len(subsets), edges)


def hypercube(d: int) -> Graph:
    """d-dimensional cube on 2**d vertices; adjacency = Hamming distance 1."""
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return Graph.from_edges(n, edges)


def circulant(n: int, steps) -> Graph:
    """Circulant graph: i adjacent to i +- s (mod n) for each step s."""
    edges = []
    for s in steps:
        if not 1 <= s <= n // 2:
            raise GraphConstructionError(f"circulant step {s} outside [1, {n // 2}]")
        for i in range(n):
            edges.append((i, (i + s) % n))
    return Graph.from_edges(n, edges)


def complete_multipartite(sizes) -> Graph:
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = [
        (u, v)
        for a, b in combinations(parts, 2)
        for u in a
        for v in b
    ]
    return Graph.from_edges(start, edges)


def prism(n: int) -> Graph:
    """Cycle of length n times an edge: 2n vertices, 3-regular."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def rook(a: int, b: int) -> Graph:
    """Rook's graph on an a x b board: same row or same column."""
    def vid(i, j):
        return i * b + j

    edges = []
    for i in range(a):
        for j1, j2 in combinations(range(b), 2):
            edges.append((vid(i, j1), vid(i, j2)))
    for j in range(b):
        for i1, i2 in combinations(range(a), 2):
            edges.append((vid(i1, j), vid(i2, j)))
    return Graph.from_edges(a * b, edges)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.

    Strongly regular (16, 6, 2, 2): same parameters as rook(4, 4) but not
    isomorphic to it (no 4-clique).
    """
    def vid(x, y):
        return 4 * x + y

    diffs = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for x in range(4):
        for y in range(4):
            for dx, dy in diffs:
                u, v = vid(x, y), vid((x + dx) % 4, (y + dy) % 4)
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(16, sorted(edges))


# -- family mini-language ------------------------------------------------

_FAMILY_KINDS = {
    "f1": (build_f1, 1),
    "f2": (build_f2, 1),
    "f3": (build_f3, 1),
    "f4": (build_f4, 1),
    "f5": (build_f5, 1),
    "lol": (build_lollipop, 2),
    "p": (build_path, 1),
    "path": (build_path, 1),
    "c": (build_cycle, 1),
    "cycle": (build_cycle, 1),
    "k": (build_complete, 1),
    "complete": (build_complete, 1),
    "s": (build_star, 1),
    "star": (build_star, 1),
}

_NAMED = {
    "petersen": petersen,
    "shrikhande": shrikhande,
    "rook44": lambda: rook(4, 4),
    "cube": lambda: hypercube(3),
}

_PARAM_NAMED = {
    "kneser": kneser,
    "circulant": lambda n, *steps: circulant(n, steps),
    "prism": prism,
    "rook": rook,
    "hypercube": hypercube,
}


@dataclass(frozen=True)
class PatternFamily:
    """Symbolic family descriptor, e.g. kind='f2', params=(3,)."""

    kind: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, spec: str) -> "PatternFamily":
        kind, _, rest = spec.strip().lower().partition(":")
        if kind not in _FAMILY_KINDS:
            raise GraphConstructionError(f"unknown family kind {kind!r}")
        builder, arity = _FAMILY_KINDS[kind]
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest else ()
        except ValueError:
            raise GraphConstructionError(f"bad family parameters in {spec!r}") from None
        if len(params) != arity:
            raise GraphConstructionError(
                f"family {kind!r} takes {arity} parameter(s), got {len(params)}"
            )
        return cls(kind, params)

    def build(self) -> Graph:
        builder, _ = _FAMILY_KINDS[self.kind]
        return builder(*self.params)


def from_spec(spec: str) -> Graph:
    """Resolve a family spec like 'f2:3', 'lol:8,4', 'k:6' or 'petersen'."""
    text = spec.strip().lower()
    kind, _, rest = text.partition(":")
    if kind in _NAMED and not rest:
        return _NAMED[kind]()
    if kind in _PARAM_NAMED:
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest else ()
        except ValueError:
            raise GraphConstructionError(f"bad family parameters in {spec!r}") from None
        return _PARAM_NAMED[kind](*params)
    return PatternFamily.parse(text).build()
