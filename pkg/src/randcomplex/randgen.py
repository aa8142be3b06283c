"""Deterministic, seedable generation of G(n,p) graphs and Y(n,p) complexes.

Y(n,p) is the random 2-complex with the complete 1-skeleton on vertices
1..n in which each of the C(n,3) triangles is a face independently with
probability p; G(n,p) is the usual edge-independent random graph.

Reproducibility contract
------------------------
Every draw comes from a Philox4x64 counter-based generator whose 128-bit
key is SHA-256 of the label string ``"{seed}|{purpose}|{n}|{p}|{trial}"``
with p carried as its exact decimal string.  Uniform doubles are
``(raw >> 11) * 2**-53`` over the raw 64-bit stream, and face selection
skip-samples over the colexicographic ranking of triples with geometric
gaps ``floor(log1p(-u) / log1p(-p))``.  The same RngSpec therefore
reproduces the same complex everywhere; snapshot tests pin the stream.
"""

from __future__ import annotations

import hashlib
import math
from bisect import bisect_right
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .complexes import FULL, Complex2, Graph, build_complex
from .errors import BadProbability, TooSmall

_BLOCK = 4096


def probability_string(p) -> str:
    """Canonical decimal string for a probability parameter.

    Strings pass through untouched (they are the exact value); Fractions
    render as 'a/b'; floats use their shortest round-trip repr.
    """
    if isinstance(p, str):
        return p
    if isinstance(p, Fraction):
        return f"{p.numerator}/{p.denominator}"
    return repr(p)


def probability_value(p) -> float:
    if isinstance(p, str):
        p = Fraction(p)
    if isinstance(p, Fraction):
        p = p.numerator / p.denominator
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise BadProbability(f"probability {p} outside [0, 1]")
    return p


@dataclass(frozen=True)
class RngSpec:
    """Seed plus stream labels; identical specs give identical streams."""

    seed: int
    purpose: str = "gen"
    trial: int = 0

    def with_trial(self, trial: int) -> "RngSpec":
        return replace(self, trial=trial)

    def stream(self, n: int, p_str: str) -> "_Uniforms":
        label = f"{self.seed}|{self.purpose}|{n}|{p_str}|{self.trial}"
        digest = hashlib.sha256(label.encode()).digest()
        key = np.frombuffer(digest[:16], dtype=np.uint64)
        return _Uniforms(np.random.Philox(key=key))


class _Uniforms:
    """Blocked iterator of uniform doubles in [0,1) from a bit generator."""

    def __init__(self, bitgen):
        self._bg = bitgen
        self._buf = ()
        self._i = 0

    def next(self) -> float:
        if self._i >= len(self._buf):
            raw = self._bg.random_raw(_BLOCK)
            self._buf = ((raw >> np.uint64(11)) * (2.0 ** -53)).tolist()
            self._i = 0
        u = self._buf[self._i]
        self._i += 1
        return u


# ---------------------------------------------------------------------------
# colexicographic (un)ranking of pairs and triples


class _TripleUnranker:
    """Unrank colex triple indices on 1..n via precomputed binomials."""

    def __init__(self, n: int):
        self.n = n
        self.c2 = [k * (k - 1) // 2 for k in range(n + 1)]
        self.c3 = [k * (k - 1) * (k - 2) // 6 for k in range(n + 1)]
        self.total = self.c3[n] if n >= 3 else 0

    def unrank(self, r: int) -> tuple[int, int, int]:
        c = bisect_right(self.c3, r) - 1
        r -= self.c3[c]
        b = bisect_right(self.c2, r) - 1
        r -= self.c2[b]
        return (r + 1, b + 1, c + 1)


class _PairUnranker:
    def __init__(self, n: int):
        self.c2 = [k * (k - 1) // 2 for k in range(n + 1)]
        self.total = self.c2[n] if n >= 2 else 0

    def unrank(self, r: int) -> tuple[int, int]:
        b = bisect_right(self.c2, r) - 1
        r -= self.c2[b]
        return (r + 1, b + 1)


def _skip_sample(total: int, p: float, uniforms: _Uniforms):
    """Indices of successes among `total` Bernoulli(p) slots, by geometric gaps."""
    if p <= 0.0:
        return
    if p >= 1.0:
        yield from range(total)
        return
    log_q = math.log1p(-p)
    pos = -1
    while True:
        u = uniforms.next()
        pos += 1 + int(math.log1p(-u) / log_q)
        if pos >= total:
            return
        yield pos


# ---------------------------------------------------------------------------
# generators


def gen_graph(n: int, p, rng: RngSpec) -> Graph:
    """G(n,p): each of the C(n,2) pairs is an edge independently w.p. p."""
    p_str = probability_string(p)
    pv = probability_value(p)
    unrank = _PairUnranker(n)
    uniforms = rng.stream(n, "G:" + p_str)
    edges = [unrank.unrank(r) for r in _skip_sample(unrank.total, pv, uniforms)]
    return Graph(range(1, n + 1), edges)


def gen_Y(n: int, p, rng: RngSpec) -> Complex2:
    """Y(n,p) with full skeleton; cost is O(expected number of faces)."""
    if n < 3:
        raise TooSmall(f"Y(n,p) needs n >= 3, got {n}")
    p_str = probability_string(p)
    pv = probability_value(p)
    unrank = _TripleUnranker(n)
    uniforms = rng.stream(n, p_str)
    faces = [unrank.unrank(r) for r in _skip_sample(unrank.total, pv, uniforms)]
    return Complex2(n, FULL, None, faces)


def gen_Y_coupled(n: int, ps, rng: RngSpec) -> list[Complex2]:
    """Complexes at several p values coupled through shared uniforms.

    One uniform is drawn per triple (O(n^3) work) and the complex at p
    keeps the triples with u < p, so face sets are nested along sorted
    p.  Used for monotonicity checks and the face-addition process; for
    one-off generation prefer :func:`gen_Y`.
    """
    if n < 3:
        raise TooSmall(f"Y(n,p) needs n >= 3, got {n}")
    pvs = [probability_value(p) for p in ps]
    unrank = _TripleUnranker(n)
    uniforms = rng.stream(n, "coupled")
    us = [uniforms.next() for _ in range(unrank.total)]
    out = []
    for pv in pvs:
        faces = [unrank.unrank(r) for r, u in enumerate(us) if u < pv]
        out.append(Complex2(n, FULL, None, faces))
    return out


def face_process_order(n: int, rng: RngSpec) -> list[tuple[int, int, int]]:
    """All C(n,3) triples in the uniform-coupling order of arrival.

    Prefixes of this list are the face sets of the coupled process in
    which triangles are added one at a time.
    """
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    unrank = _TripleUnranker(n)
    uniforms = rng.stream(n, "coupled")
    us = [(uniforms.next(), r) for r in range(unrank.total)]
    us.sort()
    return [unrank.unrank(r) for _, r in us]


# ---------------------------------------------------------------------------
# marginal-law statistics


@dataclass(frozen=True)
class LinkPairStats:
    """Empirical frequency of one fixed pair being a common-link edge."""

    n: int
    p_str: str
    trials: int
    pair: tuple[int, int]
    hits: int
    frequency: float
    expected: float  # p**2 under the product law
    sigma: float  # binomial std dev of the frequency at the expected rate

    @property
    def zscore(self) -> float:
        if self.sigma == 0.0:
            return 0.0
        return (self.frequency - self.expected) / self.sigma


def link_pair_statistics(n: int, p, trials: int, rng: RngSpec) -> LinkPairStats:
    """Sample how often {n-1, n} is an edge of the common-link graph of 1, 2.

    The pair {u,v} is such an edge exactly when {1,u,v} and {2,u,v} are
    both faces, so under the generator its frequency estimates p**2.
    """
    if trials < 1:
        raise TooSmall(f"trials must be >= 1, got {trials}")
    if n < 4:
        raise TooSmall(f"need n >= 4 for a pair disjoint from {{1,2}}, got {n}")
    p_str = probability_string(p)
    pv = probability_value(p)
    u, v = n - 1, n
    hits = 0
    for trial in range(trials):
        Y = gen_Y(n, p_str, rng.with_trial(rng.trial + trial))
        if Y.has_face(1, u, v) and Y.has_face(2, u, v):
            hits += 1
    expected = pv * pv
    sigma = math.sqrt(expected * (1.0 - expected) / trials)
    return LinkPairStats(
        n=n,
        p_str=p_str,
        trials=trials,
        pair=(u, v),
        hits=hits,
        frequency=hits / trials,
        expected=expected,
        sigma=sigma,
    )
