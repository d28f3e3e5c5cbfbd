"""Matrices, spectra, incidence energy, closed-form spectra and bounds.

Two spectral backends, on purpose: a floating symmetric eigensolver
(numpy's LAPACK binding) for energies and spectrum comparisons, and an
exact integer characteristic polynomial for cospectrality certificates.
Floating agreement of spectra is never treated as a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import BoundDomainError, PreconditionError
from .graphs import Graph, parse_graph6
from .patterns import isomorphic

#: Tolerance for elementwise spectrum comparisons (absolute plus relative).
SPECTRUM_TOL = 1e-8
#: Multiplicity grouping tolerance; display only, never used in assertions.
GROUPING_REL_TOL = 1e-6


# -- matrices -------------------------------------------------------------


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def incidence(g: Graph) -> np.ndarray:
    """n x m vertex-edge incidence matrix, columns in canonical edge order."""
    edges = g.edges()
    b = np.zeros((g.n, len(edges)), dtype=np.int64)
    for j, (u, v) in enumerate(edges):
        b[u, j] = b[v, j] = 1
    return b


def signless_laplacian(g: Graph) -> np.ndarray:
    q = adjacency(g)
    q[np.diag_indices(g.n)] = g.degrees()
    return q


# -- spectra --------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted in descending order."""

    values: tuple[float, ...]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        return cls(tuple(sorted((float(v) for v in values), reverse=True)))

    def grouped(self, rel_tol: float = GROUPING_REL_TOL):
        """(value, multiplicity) pairs for display; groups within rel_tol."""
        groups = []
        for v in self.values:
            if groups and abs(groups[-1][0] - v) <= rel_tol * max(1.0, abs(v)):
                groups[-1][1] += 1
            else:
                groups.append([v, 1])
        return [(v, mult) for v, mult in groups]


def eigenvalues(mat: np.ndarray) -> Spectrum:
    """All eigenvalues of a symmetric matrix, descending."""
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {mat.shape}")
    if not np.array_equal(mat, mat.T):
        raise PreconditionError("eigenvalues() requires a symmetric matrix")
    if mat.shape[0] == 0:
        return Spectrum(())
    return Spectrum.from_values(np.linalg.eigvalsh(mat.astype(float)))


def spectra_close(a, b, tol: float = SPECTRUM_TOL) -> bool:
    """Elementwise comparison of two descending spectra, |x-y| <= tol*(1+max|.|)."""
    xs = list(a.values if isinstance(a, Spectrum) else a)
    ys = list(b.values if isinstance(b, Spectrum) else b)
    if len(xs) != len(ys):
        return False
    return all(
        abs(x - y) <= tol * (1.0 + max(abs(x), abs(y))) for x, y in zip(xs, ys)
    )


# -- exact characteristic polynomial --------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """Integer coefficients of det(xI - M), leading coefficient first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        n = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = n - i
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                x = "x" if power == 1 else f"x^{power}"
                body = x if mag == 1 else f"{mag}*{x}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        head = terms[0].replace("+ ", "", 1).replace("- ", "-", 1)
        return " ".join([head] + terms[1:])


def char_poly(mat) -> CharPoly:
    """Exact integer characteristic polynomial via a division-free-style
    recurrence (all internal divisions are exact).

    Python integers are arbitrary precision, so there is no overflow to
    guard against. Equal polynomials certify exact cospectrality.
    """
    m = np.asarray(mat)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {m.shape}")
    if not np.issubdtype(m.dtype, np.integer):
        raise PreconditionError("char_poly requires integer entries")
    n = m.shape[0]
    rows = [
        [(j, int(m[i, j])) for j in range(n) if m[i, j] != 0] for i in range(n)
    ]
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        if k > 1:
            c = coeffs[-1]
            for i in range(n):
                work[i][i] += c
        nxt = []
        for i in range(n):
            acc = [0] * n
            for t, w in rows[i]:
                row_t = work[t]
                if w == 1:
                    for j in range(n):
                        acc[j] += row_t[j]
                else:
                    for j in range(n):
                        acc[j] += w * row_t[j]
            nxt.append(acc)
        work = nxt
        trace = sum(work[i][i] for i in range(n))
        q, r = divmod(-trace, k)
        assert r == 0, "characteristic polynomial recurrence lost exactness"
        coeffs.append(q)
    return CharPoly(tuple(coeffs))


def charpoly_equal(a: Graph, b: Graph, matrix: str = "adjacency") -> bool:
    return _graph_charpoly(a, matrix) == _graph_charpoly(b, matrix)


def _graph_charpoly(g: Graph, matrix: str) -> CharPoly:
    if matrix in ("adjacency", "a"):
        return char_poly(adjacency(g))
    if matrix in ("signless-laplacian", "q"):
        return char_poly(signless_laplacian(g))
    raise PreconditionError(f"unknown matrix kind {matrix!r}")


# -- incidence energy ------------------------------------------------------


def incidence_energy(g: Graph) -> float:
    """Sum of square roots of the signless-Laplacian eigenvalues."""
    spec = eigenvalues(signless_laplacian(g))
    return float(sum(math.sqrt(max(q, 0.0)) for q in spec))


# -- closed-form spectra of the total graph --------------------------------


def _total_branches(lam: float, r: int):
    root = math.sqrt(max(4.0 * lam + r * r + 4.0, 0.0))
    return (2.0 * lam + r - 2.0 + root) / 2.0, (2.0 * lam + r - 2.0 - root) / 2.0


def _check_regular_formula_args(spec_g, n: int, r: int) -> int:
    if len(spec_g) != n:
        raise PreconditionError(
            f"spectrum has {len(spec_g)} values but n = {n}"
        )
    if r < 2:
        raise PreconditionError(
            f"the closed-form total-graph spectrum needs degree r >= 2, got {r}"
        )
    extra2, rem = divmod(n * (r - 2), 2)
    if rem:
        raise PreconditionError(f"n(r-2)/2 is not an integer for n={n}, r={r}")
    return extra2


def total_adjacency_spectrum_formula(spec_g, n: int, r: int) -> Spectrum:
    """Adjacency spectrum of the total graph of an r-regular graph, from
    the spectrum of the base graph: two shifted branches per base
    eigenvalue plus -2 with multiplicity n(r-2)/2."""
    extra = _check_regular_formula_args(spec_g, n, r)
    values = []
    for lam in spec_g:
        plus, minus = _total_branches(lam, r)
        values.extend((plus, minus))
    values.extend([-2.0] * extra)
    return Spectrum.from_values(values)


def total_q_spectrum_formula(spec_g, n: int, r: int) -> Spectrum:
    """Signless-Laplacian spectrum of the total graph of an r-regular
    graph (the total graph is 2r-regular, so this is the adjacency
    formula shifted by 2r)."""
    extra = _check_regular_formula_args(spec_g, n, r)
    values = []
    for lam in spec_g:
        plus, minus = _total_branches(lam, r)
        values.extend((plus + 2 * r, minus + 2 * r))
    values.extend([2.0 * r - 2.0] * extra)
    return Spectrum.from_values(values)


# -- incidence-energy bounds ------------------------------------------------


def ie_total_bounds(n: int, r: int) -> tuple[float, float]:
    """(lower, upper) bounds for the incidence energy of the total graph
    of an r-regular graph on n vertices. The lower bound is attained
    exactly at the single-edge graph (n=2, r=1); the upper is strict."""
    if n < 1 or r < 1:
        raise PreconditionError(f"bounds need n >= 1 and r >= 1, got n={n}, r={r}")
    base = n * (r - 2) * math.sqrt(max(2 * r - 2, 0)) / 2.0
    upper = base + 2 * n * math.sqrt(r) + (n - 1) * math.sqrt(3 * r - 2)
    lower = (
        base
        + (n + 1) * math.sqrt(r)
        + math.sqrt(3 * r - 2)
        + (n - 1) * math.sqrt(max(2 * r - 2, 0))
    )
    return lower, upper


def ie_line_bound(n: int, r: int) -> float:
    """Upper bound for the incidence energy of the line graph of an
    r-regular graph on n vertices; attained iff the base graph is
    complete. Undefined (BoundDomainError) when (3r-4)(n-1) < r."""
    if n < 2 or r < 1:
        raise PreconditionError(f"bound needs n >= 2 and r >= 1, got n={n}, r={r}")
    radicand = (n - 1) * ((3 * r - 4) * (n - 1) - r)
    if (3 * r - 4) * (n - 1) < r:
        raise BoundDomainError(
            f"line-graph energy bound undefined: (3r-4)(n-1) = "
            f"{(3 * r - 4) * (n - 1)} < r = {r}"
        )
    return (
        n * (r - 2) / 2.0 * math.sqrt(2 * r - 4)
        + math.sqrt(4 * r - 4)
        + math.sqrt(radicand)
    )


# -- order/degree closed forms ----------------------------------------------


@dataclass(frozen=True)
class RegularIterateParams:
    """Exact order/degree of the k-th line or total iterate of a regular
    graph, with the full (order, degree) history from level 0."""

    n0: int
    r0: int
    k: int
    op: str
    history: tuple[tuple[int, int], ...]

    @property
    def n_k(self) -> int:
        return self.history[-1][0]

    @property
    def r_k(self) -> int:
        return self.history[-1][1]


def regular_iterate_params(n0: int, r0: int, k: int, op: str) -> RegularIterateParams:
    """Closed-form order and degree of iterated line/total graphs of an
    r0-regular graph on n0 vertices.

    total: r doubles each level and n_k = n_{k-1} (r_{k-1} + 2) / 2;
    line:  r_k = 2 r_{k-1} - 2 and n_k = n_{k-1} r_{k-1} / 2.
    All intermediates are exact integers for any valid regular graph
    (n * r even); a violation raises PreconditionError.
    """
    if op not in ("line", "total"):
        raise PreconditionError(f"op must be 'line' or 'total', got {op!r}")
    if r0 < 1 or n0 < 1 or k < 0:
        raise PreconditionError(
            f"need n0 >= 1, r0 >= 1, k >= 0; got n0={n0}, r0={r0}, k={k}"
        )
    if n0 * r0 % 2:
        raise PreconditionError(
            f"no regular graph has n*r odd (n0={n0}, r0={r0})"
        )
    history = [(n0, r0)]
    n, r = n0, r0
    for _ in range(k):
        if op == "total":
            nxt_n, rem = divmod(n * (r + 2), 2)
            nxt_r = 2 * r
        else:
            nxt_n, rem = divmod(n * r, 2)
            nxt_r = max(2 * r - 2, 0)
        assert rem == 0, "regular iterate produced a non-integer order"
        n, r = nxt_n, nxt_r
        history.append((n, r))
    return RegularIterateParams(n0, r0, k, op, tuple(history))


# -- cospectrality certification ---------------------------------------------


@dataclass(frozen=True)
class CospectralCertificate:
    """Outcome of an exact cospectrality + isomorphism check."""

    matrix: str
    cospectral: bool
    isomorphic: bool

    @property
    def certified_pair(self) -> bool:
        """True when the pair is cospectral yet non-isomorphic."""
        return self.cospectral and not self.isomorphic


def cospectral_certificate(a: Graph, b: Graph,
                           matrix: str = "adjacency") -> CospectralCertificate:
    """Decide cospectrality by exact integer characteristic polynomials
    and isomorphism by the full search; floating spectra play no role."""
    if a.n != b.n:
        cospectral = False
    else:
        cospectral = charpoly_equal(a, b, matrix)
    return CospectralCertificate(matrix, cospectral, isomorphic(a, b))


# -- shipped seed pair --------------------------------------------------------


def load_seed_pair() -> tuple[Graph, Graph]:
    """The shipped 16-vertex 6-regular cospectral, non-isomorphic pair
    (read from the packaged graph6 files; see the provenance note next
    to them)."""
    pair = []
    for name in ("shrikhande.g6", "rook44.g6"):
        ref = resources.files("itg").joinpath("data", "cospectral", name)
        pair.append(parse_graph6(ref.read_text().strip()))
    return pair[0], pair[1]
