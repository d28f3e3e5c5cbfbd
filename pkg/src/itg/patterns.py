"""Induced-subgraph containment, diameter-path machinery, and isomorphism.

The searches here back every structural predicate of the diameter
characterizations: "pattern is an induced subgraph", "pattern is a
diameter path", and "a lollipop is a diameter subgraph". All searches
iterate vertices in ascending id order, so results are reproducible.

Operating envelope: the embedding searches are exponential in the worst
case and are tuned for hosts up to a few dozen vertices (theorem
verification uses hosts with at most 7); the isomorphism test is
practical to roughly 200 vertices.
"""

from __future__ import annotations

from collections import Counter

from . import _backend
from .errors import PreconditionError
from .graphs import Graph, diameter, is_connected

#: canonical_key() refuses graphs above this order.
CANONICAL_MAX_N = 12
_CANONICAL_MAX_PERMS = 2_000_000


# -- embeddings -----------------------------------------------------------


def contains_induced(host: Graph, pattern: Graph):
    """First induced embedding of ``pattern`` in ``host``, or None.

    The returned tuple maps pattern vertex i to a host vertex; on mapped
    pairs, pattern edges and host edges agree exactly.
    """
    return _backend.find_embedding(
        host.n, host.masks, pattern.n, pattern.masks, True
    )


def contains_subgraph(host: Graph, pattern: Graph):
    """First (not necessarily induced) embedding, or None."""
    return _backend.find_embedding(
        host.n, host.masks, pattern.n, pattern.masks, False
    )


def embedding_is_valid(host: Graph, pattern: Graph, mapping, induced: bool) -> bool:
    """Replay an embedding against host adjacency."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= hv < host.n for hv in mapping):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            p = pattern.has_edge(i, j)
            h = host.has_edge(mapping[i], mapping[j])
            if induced and p != h:
                return False
            if not induced and p and not h:
                return False
    return True


# -- diameter paths -------------------------------------------------------


def diameter_paths(g: Graph):
    """Yield every shortest path realizing the diameter, one orientation
    each (start < end), in ascending lexicographic order."""
    if not is_connected(g):
        raise PreconditionError("diameter paths are defined for connected graphs")
    if g.n <= 1:
        if g.n == 1:
            yield (0,)
        return
    dist = _backend.all_pairs_distances(g.n, g.masks)
    diam = max(max(row) for row in dist)
    for u in range(g.n):
        row = dist[u]
        for v in range(u + 1, g.n):
            if row[v] == diam:
                yield from _shortest_paths(g, dist, u, v)


def _shortest_paths(g: Graph, dist, u: int, v: int):
    # DFS along distance-decreasing edges, ascending neighbor order.
    path = [u]

    def extend(w):
        if w == v:
            yield tuple(path)
            return
        d = dist[w][v]
        for x in _iter_bits(g.adjacency_mask(w)):
            if dist[x][v] == d - 1:
                path.append(x)
                yield from extend(x)
                path.pop()

    yield from extend(u)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_diameter_path_family(g: Graph, k: int) -> bool:
    """Whether a diameter path of ``g`` is the plain path on k+2 vertices,
    i.e. whether diam(g) = k + 1."""
    if not is_connected(g):
        raise PreconditionError("diameter paths are defined for connected graphs")
    return diameter(g) == k + 1


def has_lollipop_diameter_subgraph(g: Graph, l: int) -> bool:
    """Whether the (2l+1)-cycle lollipop on l + diam(g) + 1 vertices embeds
    in ``g`` (as a subgraph) so that both of its arms, from the tail end
    to the two endpoints of the cycle edge opposite the attachment, map
    to diameter paths of ``g``.

    Equivalently: some diameter path p0..pk branches at p_{k-l} into a
    second geodesic of length k ending at a neighbor of pk, closing an
    odd cycle of length 2l+1. The geodesic-arm requirement is what the
    diameter theorems actually use: the image then contains diameter
    paths, and the tail end sits at distance diam(g) from both endpoints
    of the far cycle edge, which forces the total-graph diameter up.
    Plain containment of a diameter path in a lollipop image is weaker
    and does not support the characterization.
    """
    if not is_connected(g):
        raise PreconditionError("diameter subgraphs are defined for connected graphs")
    k = diameter(g)
    if not 1 <= l <= k:
        raise PreconditionError(f"l must be in [1, diam(g)] = [1, {k}], got {l}")
    if l + k + 1 > g.n:
        return False
    dist = _backend.all_pairs_distances(g.n, g.masks)
    for path in _directed_diameter_paths(g, dist, k):
        pmask = 0
        for v in path:
            pmask |= 1 << v
        if _branch_arm(g, dist, path, pmask, k, l):
            return True
    return False


def _branch_arm(g: Graph, dist, path, pmask, k: int, l: int) -> bool:
    # Second arm: fresh vertices z1..z_{l-1}, then b2 adjacent to path[-1]
    # with d(path[0], b2) = k; the arm path[0..k-l] + z* + b2 has length k,
    # so hitting distance k makes it a geodesic automatically.
    start = path[k - l]
    end = path[-1]
    origin = path[0]

    def extend(w, steps_left, used):
        if steps_left == 1:
            for b2 in _iter_bits(g.adjacency_mask(w) & ~used):
                if dist[origin][b2] == k and g.has_edge(end, b2):
                    return True
            return False
        depth = k - l + (l - steps_left) + 1
        for z in _iter_bits(g.adjacency_mask(w) & ~used):
            # Prefix of a k-geodesic: distance from the origin must track depth.
            if dist[origin][z] != depth:
                continue
            if extend(z, steps_left - 1, used | (1 << z)):
                return True
        return False

    return extend(start, l, pmask)


def has_cycle_diameter_subgraph(g: Graph, c: int) -> bool:
    """Whether a c-cycle embeds in ``g`` (as a subgraph) with some diameter
    path of ``g`` lying on it as an arc."""
    if not is_connected(g):
        raise PreconditionError("diameter subgraphs are defined for connected graphs")
    if c < 3:
        raise PreconditionError(f"cycle length must be at least 3, got {c}")
    if c > g.n:
        return False
    k = diameter(g)
    if k > c - 1:
        return False
    dist = _backend.all_pairs_distances(g.n, g.masks)
    for path in _directed_diameter_paths(g, dist, k):
        pmask = 0
        for v in path:
            pmask |= 1 << v
        for _ in _paths_between(g, path[-1], path[0], c - k, pmask):
            return True
    return False


def _directed_diameter_paths(g: Graph, dist, diam: int):
    for u in range(g.n):
        for v in range(g.n):
            if u != v and dist[u][v] == diam:
                yield from _shortest_paths(g, dist, u, v)


def _paths_between(g: Graph, a: int, b: int, length: int, blocked: int):
    """Masks of internal vertices of simple a-b paths with ``length`` edges
    whose internal vertices avoid ``blocked``."""
    if length == 0:
        return
    if length == 1:
        if g.has_edge(a, b):
            yield 0
        return

    used = blocked | (1 << a) | (1 << b)

    def extend(w, remaining, acquired):
        if remaining == 1:
            if g.has_edge(w, b):
                yield acquired
            return
        for x in _iter_bits(g.adjacency_mask(w) & ~used):
            bit = 1 << x
            if acquired & bit:
                continue
            yield from extend(x, remaining - 1, acquired | bit)

    yield from extend(a, length, 0)


def has_separated_edge_pattern(g: Graph, k: int) -> bool:
    """Whether one of the three end-fork patterns (plain path on k+3
    vertices, or the same with one or two end-triangle chords) embeds
    induced in ``g`` with its two end edges fully separated: every
    endpoint of one end edge at distance >= k from every endpoint of the
    other.

    This separation is the structural certificate for diam(L(g)) > k;
    without it an induced pattern can be short-circuited by outside
    vertices and certifies nothing.
    """
    if k < 2:
        raise PreconditionError(f"the end-fork patterns need k >= 2, got {k}")
    if k + 3 > g.n:
        return False
    dist = _backend.all_pairs_distances(g.n, g.masks)
    # Roles: pendant b, spine x0..xk (forced geodesic), pendant d. Allowed
    # chords: (b, x1) and (d, x_{k-1}); everything else non-adjacent.
    spine = [0] * (k + 1)

    def place(b, i, used):
        if i == k + 1:
            x0, xk = spine[0], spine[k]
            for d in _iter_bits(g.adjacency_mask(xk) & ~used):
                if dist[x0][d] < k or dist[b][d] < k:
                    continue
                # d may touch only xk and, via the end chord, x_{k-1}.
                others = used & ~(1 << xk) & ~(1 << spine[k - 1])
                if g.adjacency_mask(d) & others:
                    continue
                return True
            return False
        prev = spine[i - 1]
        for x in _iter_bits(g.adjacency_mask(prev) & ~used):
            if dist[spine[0]][x] != i or dist[b][x] < i:
                continue
            forbid = used & ~(1 << prev)
            if i == 1:
                forbid &= ~(1 << b)  # chord (b, x1) is allowed
            if g.adjacency_mask(x) & forbid:
                continue
            spine[i] = x
            if place(b, i + 1, used | (1 << x)):
                return True
        return False

    for b in range(g.n):
        for x0 in _iter_bits(g.adjacency_mask(b)):
            spine[0] = x0
            if place(b, 1, (1 << b) | (1 << x0)):
                return True
    return False


# -- isomorphism ----------------------------------------------------------


def _refine(n: int, masks, colors):
    """Iterated neighborhood recoloring to a stable partition.

    New colors are ranks of (old color, sorted neighbor colors)
    signatures, which makes them isomorphism-invariant and therefore
    directly comparable between two graphs refined separately.
    """
    colors = list(colors)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _iter_bits(masks[v]))))
            for v in range(n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [ranking[sig] for sig in sigs]
        if len(ranking) == ncolors:
            return colors
        ncolors = len(ranking)


def _cells_by_color(n: int, colors):
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism decision.

    Cheap invariant screening, then neighborhood-refinement coloring,
    then backtracking with individualization. Correct for all inputs;
    intended for orders up to a couple hundred vertices.
    """
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    n = a.n
    if n == 0:
        return True
    ca = _refine(n, a.masks, [0] * n)
    cb = _refine(n, b.masks, [0] * n)
    return _iso_search(a, b, ca, cb)


def _iso_search(a: Graph, b: Graph, ca, cb) -> bool:
    n = a.n
    if Counter(ca) != Counter(cb):
        return False
    target = None
    for color, count in sorted(Counter(ca).items()):
        if count >= 2 and (target is None or count < target[1]):
            target = (color, count)
    if target is None:
        # Discrete partitions: colors induce the only candidate bijection.
        perm = [0] * n
        b_by_color = {cb[v]: v for v in range(n)}
        for v in range(n):
            perm[v] = b_by_color[ca[v]]
        for v in range(n):
            image = 0
            for u in _iter_bits(a.adjacency_mask(v)):
                image |= 1 << perm[u]
            if image != b.adjacency_mask(perm[v]):
                return False
        return True
    color = target[0]
    fresh = max(ca) + 1
    va = next(v for v in range(n) if ca[v] == color)
    ca2 = list(ca)
    ca2[va] = fresh
    ca2 = _refine(n, a.masks, ca2)
    for vb in range(n):
        if cb[vb] != color:
            continue
        cb2 = list(cb)
        cb2[vb] = fresh
        cb2 = _refine(n, b.masks, cb2)
        if _iso_search(a, b, ca2, cb2):
            return True
    return False


def canonical_key(g: Graph):
    """Isomorphism-invariant key for small graphs: (n, minimum adjacency
    mask over relabelings that respect the refined color partition).

    Cost is the product of cell factorials, so this is restricted to
    n <= 12 and raises when the stable partition is too symmetric.
    """
    if g.n > CANONICAL_MAX_N:
        raise PreconditionError(
            f"canonical_key supports n <= {CANONICAL_MAX_N}, got {g.n}"
        )
    if g.n == 0:
        return (0, 0)
    colors = _refine(g.n, g.masks, [0] * g.n)
    cells = _cells_by_color(g.n, colors)
    perms = 1
    for cell in cells:
        for i in range(2, len(cell) + 1):
            perms *= i
        if perms > _CANONICAL_MAX_PERMS:
            raise PreconditionError(
                "graph is too symmetric for the small-graph canonical form"
            )
    return (g.n, _backend.min_form_mask(g.n, g.masks, cells))
