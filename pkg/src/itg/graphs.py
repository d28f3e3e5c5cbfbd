"""Immutable simple undirected graphs, metrics, and bit-exact I/O.

Vertices are dense 0-based integers. Adjacency is stored as one bitmask
per vertex, which keeps the distance/search kernels fast and makes
equality and hashing cheap. Labels produced by the derived-graph
operators live in :mod:`itg.transforms`, not here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .errors import Graph6Error, GraphConstructionError, PreconditionError

#: Distance marker for unreachable vertex pairs.
INFINITY = math.inf

_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047  # three-byte size class; larger needs the 8-byte class


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; all operations on them are pure functions,
    so graphs can be shared freely across worker threads or processes.
    """

    __slots__ = ("n", "_masks", "_edges", "_hash")

    def __init__(self, n: int, masks: tuple[int, ...]):
        # Trusted constructor: `masks` must already be symmetric and
        # loop-free. Use from_edges() for validated construction.
        self.n = n
        self._masks = masks
        self._edges = None
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from an edge list, validating and deduplicating.

        Raises GraphConstructionError for endpoints outside ``[0, n)`` or
        self-loops. Duplicate edges (in either orientation) collapse.
        """
        if n < 0:
            raise GraphConstructionError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(
                    f"edge ({u},{v}) has an endpoint outside [0,{n})"
                )
            if u == v:
                raise GraphConstructionError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self._masks) // 2

    def adjacency_mask(self, v: int) -> int:
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._masks[v]))

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self._masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                mask = self._masks[u] >> (u + 1)
                v = u + 1
                while mask:
                    if mask & 1:
                        out.append((u, v))
                    mask >>= 1
                    v += 1
            self._edges = tuple(out)
        return self._edges

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._masks == other._masks
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._masks))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges) -> Graph:
    """Module-level alias for :meth:`Graph.from_edges`."""
    return Graph.from_edges(n, edges)


# -- distances ----------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source``; INFINITY for unreachable vertices."""
    if not 0 <= source < g.n:
        raise PreconditionError(f"source {source} out of range [0,{g.n})")
    dist = [INFINITY] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    full = (1 << g.n) - 1
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adjacency_mask(v)
        nxt &= full & ~seen
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop counts; unreachable pairs carry :data:`INFINITY`."""

    n: int
    rows: tuple[tuple[float, ...], ...]

    def dist(self, u: int, v: int):
        return self.rows[u][v]

    def eccentricity(self, v: int):
        return max(self.rows[v]) if self.n else 0


def distance_table(g: Graph) -> DistanceTable:
    raw = _backend.all_pairs_distances(g.n, g.masks)
    rows = tuple(
        tuple(INFINITY if d < 0 else d for d in row) for row in raw
    )
    return DistanceTable(g.n, rows)


def diameter(g: Graph):
    """Maximum pairwise distance; INFINITY iff disconnected; 0 for n <= 1."""
    if g.n <= 1:
        return 0
    best = 0
    for row in _backend.all_pairs_distances(g.n, g.masks):
        for d in row:
            if d < 0:
                return INFINITY
            if d > best:
                best = d
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INFINITY not in bfs_distances(g, 0)


def is_regular(g: Graph):
    """The common degree when all degrees agree, else None."""
    if g.n == 0:
        return None
    degs = g.degrees()
    r = degs[0]
    return r if all(d == r for d in degs) else None


# -- edge-list text format ----------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format ``"n m\\nu v\\n..."`` with 0-based ids."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphConstructionError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphConstructionError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphConstructionError(f"expected 'u v' line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != m:
        raise GraphConstructionError(
            f"header declares {m} edges but {len(edges)} lines follow"
        )
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- graph6 codec --------------------------------------------------------
#
# Standard format: optional header, then N(n) (one byte 63+n for n <= 62,
# or 126 followed by three bytes holding 18 bits for n <= 258047), then
# the upper adjacency triangle in column-major order x(0,1), x(0,2),
# x(1,2), x(0,3), ..., packed big-endian into 6-bit groups, zero-padded,
# each group offset by 63.


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > _G6_MAX_LONG:
        raise Graph6Error(
            f"order {n} exceeds the supported graph6 size classes (max {_G6_MAX_LONG})"
        )
    if n <= _G6_MAX_SHORT:
        head = chr(63 + n)
    else:
        head = chr(126) + "".join(
            chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0)
        )
    bits = 0
    nbits = 0
    chunks = []
    for j in range(1, n):
        col = 1 << j
        for i in range(j):
            bits = bits << 1 | (g.adjacency_mask(i) >> j & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(63 + bits))
                bits = 0
                nbits = 0
    if nbits:
        chunks.append(chr(63 + (bits << (6 - nbits))))
    return head + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (leading '>>graph6<<' header tolerated)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 input")
    data = s.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the graph6 range [63,126]", offset=off)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("eight-byte graph6 size class not supported", offset=1)
        if len(data) < 4:
            raise Graph6Error("truncated multi-byte size prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise Graph6Error(
            f"graph6 body for n={n} needs {(need + 5) // 6} bytes, got {len(body)}",
            offset=body_off,
        )
    masks = [0] * n
    idx = 0
    for pos, b in enumerate(body):
        group = b - 63
        for k in range(5, -1, -1):
            if idx >= need:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", offset=body_off + pos)
                continue
            if group >> k & 1:
                i, j = _pair_from_index(idx)
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(masks))


def _pair_from_index(idx: int) -> tuple[int, int]:
    # Inverse of the column-major triangle order: find j with C(j,2) <= idx.
    j = 1
    while (j + 1) * j // 2 <= idx:
        j += 1
    return idx - j * (j - 1) // 2, j
