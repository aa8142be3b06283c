"""Boundary matrices, ranks over GF(2)/GF(q)/Q, Betti numbers, and
integer Smith normal form for first-homology torsion.

Orientation convention: simplices are ordered by sorted vertices; the
face (a,b,c) with a<b<c has boundary +(b,c) -(a,c) +(a,b), and the edge
(a,b) with a<b has boundary +b -a.  Over GF(2) the signs collapse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complexes import FULL, Complex2
from .errors import BadField, SizeCapExceeded

DEFAULT_SNF_EDGE_CAP = 2000


# ---------------------------------------------------------------------------
# boundary matrices


@dataclass(frozen=True)
class BoundaryPair:
    """Sparse boundary matrices of a complex.

    d1 is f0 x f1 and d2 is f1 x f2, both stored column-wise as tuples
    of (row, sign) pairs with 0-based rows.
    """

    n: int
    edges: tuple
    faces: tuple
    d1_cols: tuple
    d2_cols: tuple

    @property
    def f1(self) -> int:
        return len(self.edges)

    @property
    def f2(self) -> int:
        return len(self.faces)

    def dense_d1(self) -> list[list[int]]:
        M = [[0] * self.f1 for _ in range(self.n)]
        for j, col in enumerate(self.d1_cols):
            for i, s in col:
                M[i][j] = s
        return M

    def dense_d2(self) -> list[list[int]]:
        M = [[0] * self.f2 for _ in range(self.f1)]
        for j, col in enumerate(self.d2_cols):
            for i, s in col:
                M[i][j] = s
        return M


def boundary_matrices(X: Complex2) -> BoundaryPair:
    """Boundary pair of X with the stated orientation convention."""
    edges = tuple(X.iter_edges())
    edge_index = {e: j for j, e in enumerate(edges)}
    faces = tuple(X.sorted_faces())

    d1_cols = tuple(((a - 1, -1), (b - 1, 1)) for a, b in edges)
    d2_cols = tuple(
        (
            (edge_index[(b, c)], 1),
            (edge_index[(a, c)], -1),
            (edge_index[(a, b)], 1),
        )
        for a, b, c in faces
    )
    pair = BoundaryPair(X.n, edges, faces, d1_cols, d2_cols)
    if __debug__:
        _check_chain_condition(pair)
    return pair


def _check_chain_condition(pair: BoundaryPair) -> None:
    for col in pair.d2_cols:
        acc: dict = {}
        for edge_row, s in col:
            for vert_row, t in pair.d1_cols[edge_row]:
                acc[vert_row] = acc.get(vert_row, 0) + s * t
        assert all(v == 0 for v in acc.values()), "d1 * d2 != 0"


# ---------------------------------------------------------------------------
# exact ranks


def _rank_bitrows(rows, max_rank=None) -> int:
    """Rank over GF(2) of rows given as int bitmasks (destructive-free)."""
    pivots: dict = {}
    rank = 0
    for r in rows:
        while r:
            low = r & (-r)
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                rank += 1
                if max_rank is not None and rank >= max_rank:
                    return rank
                break
            r ^= p
    return rank


def rank_gf2(matrix) -> int:
    """Exact rank over GF(2) of a matrix given as a list of rows."""
    rows = []
    for row in matrix:
        bits = 0
        for j, v in enumerate(row):
            if v % 2:
                bits |= 1 << j
        rows.append(bits)
    return _rank_bitrows(rows)


def _require_prime(q: int) -> None:
    if q < 2 or any(q % d == 0 for d in range(2, int(math.isqrt(q)) + 1)):
        raise BadField(f"{q} is not prime")


def _rank_gfq_cols(cols, nrows: int, q: int, max_rank=None) -> int:
    """Online column-insertion rank mod q; cols are (row, value) lists."""
    pivots: dict = {}
    rank = 0
    for col in cols:
        vec = np.zeros(nrows, dtype=np.int64)
        for i, v in col:
            vec[i] = v % q
        while True:
            nz = np.nonzero(vec)[0]
            if len(nz) == 0:
                break
            lead = int(nz[0])
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(int(vec[lead]), q - 2, q)
                pivots[lead] = (vec * inv) % q
                rank += 1
                break
            vec = (vec - int(vec[lead]) * piv) % q
        if max_rank is not None and rank >= max_rank:
            break
    return rank


def rank_gfq(matrix, q: int) -> int:
    """Exact rank over the prime field GF(q) of a list-of-rows matrix."""
    _require_prime(q)
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    nrows = len(rows)
    cols = []
    for j in range(len(rows[0])):
        cols.append([(i, rows[i][j]) for i in range(nrows) if rows[i][j] % q])
    return _rank_gfq_cols(cols, nrows, q)


def _rank_rational_cols(cols, max_rank=None) -> int:
    """Online column-insertion rank over Q; cols are (row, value) lists.

    Columns are kept as sparse {row: Fraction} dicts, which stays cheap
    on the sparse boundary matrices this is used for.  Arbitrary
    precision, so overflow cannot occur.
    """
    pivots: dict = {}
    rank = 0
    for col in cols:
        vec = {i: Fraction(v) for i, v in col if v}
        while vec:
            lead = min(vec)
            piv = pivots.get(lead)
            if piv is None:
                scale = vec[lead]
                pivots[lead] = {i: v / scale for i, v in vec.items()}
                rank += 1
                break
            coef = vec[lead]
            for i, v in piv.items():
                newv = vec.get(i, Fraction(0)) - coef * v
                if newv:
                    vec[i] = newv
                else:
                    vec.pop(i, None)
        if max_rank is not None and rank >= max_rank:
            break
    return rank


def rank_rational(matrix) -> int:
    """Exact rank over Q of a list-of-rows matrix of integers/fractions."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    cols = []
    for j in range(len(rows[0])):
        cols.append([(i, rows[i][j]) for i in range(len(rows)) if rows[i][j]])
    return _rank_rational_cols(cols)


# ---------------------------------------------------------------------------
# Betti numbers


@dataclass(frozen=True)
class BettiProfile:
    coeff: str
    b0: int
    b1: int
    b2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.b0, self.b1, self.b2)


def parse_coeff(tag) -> tuple[str, int | None]:
    """Normalize a coefficient tag: 'gf2', 'q', 'gfq:<q>', or ('gfq', q)."""
    if isinstance(tag, tuple):
        kind, q = tag
        tag = f"{kind}:{q}"
    tag = tag.lower()
    if tag in ("gf2", "z/2"):
        return ("gf2", None)
    if tag in ("q", "rational"):
        return ("q", None)
    if tag.startswith("gfq:"):
        q = int(tag.split(":", 1)[1])
        _require_prime(q)
        if q == 2:
            return ("gf2", None)
        return ("gfq", q)
    raise BadField(f"unknown coefficient tag {tag!r}")


def _ranks_for(pair: BoundaryPair, kind: str, q) -> tuple[int, int]:
    """(rank d1, rank d2) in the requested field, with an early-exit cap
    on rank d2 at f1 - rank d1 (valid because im d2 lies in ker d1)."""
    n, f1 = pair.n, pair.f1
    if kind == "gf2":
        d1_rows = [0] * n
        for j, col in enumerate(pair.d1_cols):
            bit = 1 << j
            for i, _ in col:
                d1_rows[i] |= bit
        r1 = _rank_bitrows(d1_rows)
        cap = f1 - r1
        d2_rows = []
        for col in pair.d2_cols:
            bits = 0
            for i, _ in col:
                bits |= 1 << i
            d2_rows.append(bits)
        r2 = _rank_bitrows(d2_rows, max_rank=cap)
        return r1, r2
    if kind == "gfq":
        r1 = _rank_gfq_cols(pair.d1_cols, n, q)
        r2 = _rank_gfq_cols(pair.d2_cols, f1, q, max_rank=f1 - r1)
        return r1, r2
    r1 = _rank_rational_cols(pair.d1_cols)
    r2 = _rank_rational_cols(pair.d2_cols, max_rank=f1 - r1)
    return r1, r2


def betti(X: Complex2, coeff="gf2") -> BettiProfile:
    """Betti numbers (b0, b1, b2) of X over the requested coefficients."""
    kind, q = parse_coeff(coeff)
    pair = boundary_matrices(X)
    r1, r2 = _ranks_for(pair, kind, q)
    tag = kind if q is None else f"gfq:{q}"
    return BettiProfile(tag, X.f0 - r1, X.f1 - r1 - r2, X.f2 - r2)


# ---------------------------------------------------------------------------
# Smith normal form and integral H1


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d1 | d2 | ... of an integer matrix."""

    nrows: int
    ncols: int
    invariant_factors: tuple

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(matrix) -> SnfResult:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Pivots are chosen by minimum magnitude; the returned diagonal is
    positive and satisfies the divisibility chain.
    """
    A = [[int(v) for v in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    k = 0
    while k < min(m, n):
        # locate a minimal-magnitude nonzero entry in the trailing block
        best = None
        for i in range(k, m):
            row = A[i]
            for j in range(k, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        A[k], A[bi] = A[bi], A[k]
        for row in A:
            row[k], row[bj] = row[bj], row[k]

        while True:
            pivot = A[k][k]
            done = True
            for i in range(k + 1, m):
                if A[i][k]:
                    qq = A[i][k] // pivot
                    if qq:
                        A[i] = [x - qq * y for x, y in zip(A[i], A[k])]
                    if A[i][k]:
                        A[k], A[i] = A[i], A[k]
                        done = False
                        break
            if not done:
                continue
            for j in range(k + 1, n):
                if A[k][j]:
                    qq = A[k][j] // pivot
                    if qq:
                        for row in A:
                            row[j] -= qq * row[k]
                    if A[k][j]:
                        for row in A:
                            row[k], row[j] = row[j], row[k]
                        done = False
                        break
            if done:
                break
        # make the pivot divide the rest of the block
        pivot = A[k][k]
        offender = None
        for i in range(k + 1, m):
            row = A[i]
            for j in range(k + 1, n):
                if row[j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            A[k] = [x + y for x, y in zip(A[k], A[offender])]
            continue
        diag.append(abs(pivot))
        k += 1

    # enforce the divisibility chain on the diagonal
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            if diag[j] % diag[i]:
                g = math.gcd(diag[i], diag[j])
                diag[j] = diag[i] * diag[j] // g
                diag[i] = g
    return SnfResult(m, n, tuple(diag))


def prime_power_factors(d: int) -> list[int]:
    """The prime-power components of |d|, e.g. 12 -> [3, 4]."""
    d = abs(d)
    out = []
    f = 2
    while f * f <= d:
        if d % f == 0:
            pk = 1
            while d % f == 0:
                pk *= f
                d //= f
            out.append(pk)
        f += 1
    if d > 1:
        out.append(d)
    return sorted(out)


def h1_integral(X: Complex2, cap: int = DEFAULT_SNF_EDGE_CAP) -> tuple[int, list[int]]:
    """H1(X; Z) as (free rank, torsion prime powers).

    The free rank is f1 - rank d1 - rank d2 over Q; the torsion is read
    off the Smith normal form of d2 (all torsion of the edge lattice
    modulo boundaries lies in the cycle sublattice, since a multiple of
    a chain with nonzero d1-image cannot bound).
    """
    if X.f1 > cap:
        raise SizeCapExceeded(f"f1={X.f1} exceeds the SNF cap {cap}")
    pair = boundary_matrices(X)
    r1 = _rank_rational_cols(pair.d1_cols)
    snf = smith_normal_form(pair.dense_d2())
    rank = X.f1 - r1 - snf.rank
    torsion: list[int] = []
    for d in snf.invariant_factors:
        if d > 1:
            torsion.extend(prime_power_factors(d))
    return rank, sorted(torsion)
