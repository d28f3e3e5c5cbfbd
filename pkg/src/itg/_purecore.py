"""Pure-Python implementations of the hot kernels.

Semantics here are the reference; ``_fastcore`` (Cython) must match them
bit for bit. Graphs enter as adjacency bitmasks: ``masks[v]`` has bit
``u`` set iff ``u`` and ``v`` are adjacent.
"""

from itertools import permutations, product


def all_pairs_distances(n, masks):
    """BFS hop counts from every vertex; -1 marks unreachable pairs.

    Returns a list of n rows of n ints.
    """
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            nxt &= full & ~seen
            d += 1
            f = nxt
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                dist[v] = d
            seen |= nxt
            frontier = nxt
        rows.append(dist)
    return rows


def _pattern_order(pn, pmasks, pdeg):
    # Greedy static order: most neighbors already placed, then highest
    # degree, then lowest id. Keeps the search deterministic.
    order = []
    placed = 0
    for _ in range(pn):
        best_key = None
        best = -1
        for v in range(pn):
            if placed >> v & 1:
                continue
            key = ((pmasks[v] & placed).bit_count(), pdeg[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best = v
        order.append(best)
        placed |= 1 << best
    return order


def find_embedding(hn, hmasks, pn, pmasks, induced):
    """First injective embedding of the pattern into the host, or None.

    ``induced`` True demands pattern edge <=> host edge on mapped pairs;
    False demands only pattern edge => host edge (monomorphism). The first
    match under ascending host-vertex order is returned as a tuple mapping
    pattern vertex i to its host vertex.
    """
    if pn > hn:
        return None
    if pn == 0:
        return ()
    pdeg = [m.bit_count() for m in pmasks]
    hdeg = [m.bit_count() for m in hmasks]
    order = _pattern_order(pn, pmasks, pdeg)
    assigned = [-1] * pn  # by position in `order`

    def backtrack(t, used):
        if t == pn:
            return True
        pv = order[t]
        pm = pmasks[pv]
        req = 0
        for s in range(t):
            if pm >> order[s] & 1:
                req |= 1 << assigned[s]
        need = pdeg[pv]
        for hv in range(hn):
            bit = 1 << hv
            if used & bit:
                continue
            if hdeg[hv] < need:
                continue
            hm = hmasks[hv]
            if induced:
                if hm & used != req:
                    continue
            elif hm & req != req:
                continue
            assigned[t] = hv
            if backtrack(t + 1, used | bit):
                return True
        assigned[t] = -1
        return False

    if not backtrack(0, 0):
        return None
    mapping = [-1] * pn
    for pos, pv in enumerate(order):
        mapping[pv] = assigned[pos]
    return tuple(mapping)


def min_form_mask(n, masks, cells):
    """Minimum upper-triangle edge mask over cell-respecting relabelings.

    ``cells`` is an ordered partition of range(n); a relabeling assigns new
    ids 0..n-1 by concatenating one permutation of each cell. Bit k of the
    returned mask is the edge indicator of the k-th pair in the order
    (0,1), (0,2), (1,2), (0,3), ... (column-major upper triangle).
    """
    best = None
    for choice in product(*(permutations(cell) for cell in cells)):
        order = [v for cell in choice for v in cell]
        mask = 0
        idx = 0
        for j in range(1, n):
            mj = masks[order[j]]
            for i in range(j):
                if mj >> order[i] & 1:
                    mask |= 1 << idx
                idx += 1
        if best is None or mask < best:
            best = mask
    return best if best is not None else 0
