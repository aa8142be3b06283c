"""Exact densest-subcomplex density, admissibility, and sparsity search.

The density of a complex is the minimum of f0(Z)/f2(Z) over subcomplexes
Z with at least one face; the anchored variant discounts w pinned
vertices from the numerator.  All comparisons here are exact rational
arithmetic: floating point is never used to decide a threshold.

Minimizers are searched over face-induced subcomplexes only.  This is
equivalent: isolated vertices can only increase the numerator, and for
a fixed vertex hull taking every spanned face only decreases the ratio.
The equivalence is exercised by a tested property rather than assumed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .complexes import Complex2
from .errors import AnchorMissing, NoFaces, TooLarge
from .maxflow import FlowNetwork

#: Largest face count handled by the exhaustive face-subset search
#: before :func:`density_e` switches to the parametric max-flow path.
BRUTE_FORCE_FACE_LIMIT = 20


def as_fraction(x) -> Fraction:
    """Exact rational from int, Fraction, decimal string, or float.

    Floats are converted through their shortest decimal repr, so 0.1
    means 1/10 rather than the binary float it rounds to.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(Decimal(repr(x)))
    return Fraction(x)


@dataclass(frozen=True)
class DensityReport:
    value: Fraction
    witness: tuple  # face triples achieving the minimum
    mode: str  # "unrestricted" or "anchored(w)"


@dataclass(frozen=True)
class SparsityVerdict:
    sparse: bool
    witness: tuple | None  # violating face set when not sparse
    eps: Fraction
    m: int
    anchored: bool

    @property
    def outcome(self) -> str:
        return "Sparse" if self.sparse else "DenseWitness"


# ---------------------------------------------------------------------------
# shared helpers


def _face_masks(faces) -> list[int]:
    return [(1 << a) | (1 << b) | (1 << c) for a, b, c in faces]


def _cost_mask(w: int) -> int:
    """Bits that do NOT count toward the numerator (anchored vertices)."""
    mask = 0
    for v in range(1, w + 1):
        mask |= 1 << v
    return mask


def _check_anchor(X: Complex2, w: int) -> None:
    if w and X.n < w:
        raise AnchorMissing(f"anchor vertices 1..{w} need n >= {w}, got n={X.n}")


# ---------------------------------------------------------------------------
# density by exhaustive face-subset search (small f2)


def density_e_by_faces(X: Complex2, w: int = 0) -> DensityReport:
    """Exact density by branch-and-bound over all nonempty face subsets.

    Exponential in f2; raises TooLarge beyond 24 faces.  Ties prefer the
    lexicographically least witness.
    """
    _check_anchor(X, w)
    faces = X.sorted_faces()
    if not faces:
        raise NoFaces("density needs at least one face")
    if len(faces) > 24:
        raise TooLarge(f"face-subset search not sensible at f2={len(faces)}")
    masks = _face_masks(faces)
    free = _cost_mask(w)
    k = len(faces)

    best = [X.n + 1, 1, None]  # numerator, denominator, witness indices

    def visit(i: int, vmask: int, count: int, chosen: tuple) -> None:
        if count:
            cost = (vmask & ~free).bit_count()
            bn, bd, bw = best
            cmp_new = cost * bd
            cmp_old = bn * count
            if cmp_new < cmp_old or (cmp_new == cmp_old and chosen < bw):
                best[0], best[1], best[2] = cost, count, chosen
        if i == k:
            return
        # bound: vertices cannot shrink, faces can grow to count + (k - i)
        bn, bd, bw = best
        if (vmask & ~free).bit_count() * bd > bn * (count + k - i):
            return
        visit(i + 1, vmask | masks[i], count + 1, chosen + (i,))
        visit(i + 1, vmask, count, chosen)

    visit(0, 0, 0, ())
    witness = tuple(faces[i] for i in best[2])
    mode = "unrestricted" if w == 0 else f"anchored({w})"
    return DensityReport(Fraction(best[0], best[1]), witness, mode)


# ---------------------------------------------------------------------------
# density by exhaustive vertex-subset search (small n): the independent
# brute-force oracle used to validate the flow path


def density_e_by_vertex_sets(X: Complex2, w: int = 0) -> DensityReport:
    """Exact density by enumerating all 2^n vertex hulls.

    Independent of both the face-subset and the flow search: for every
    vertex set S it takes every face spanned by S and scores the hull.
    Raises TooLarge above n=22.
    """
    _check_anchor(X, w)
    faces = X.sorted_faces()
    if not faces:
        raise NoFaces("density needs at least one face")
    if X.n > 22:
        raise TooLarge(f"vertex-subset search not sensible at n={X.n}")
    masks = _face_masks(faces)
    free = _cost_mask(w)

    best_num, best_den, best_set = X.n + 1, 1, None
    for s in range(1, 1 << X.n):
        S = s << 1  # vertex v lives at bit v
        vmask = 0
        count = 0
        for fm in masks:
            if fm & ~S == 0:
                vmask |= fm
                count += 1
        if count == 0:
            continue
        cost = (vmask & ~free).bit_count()
        if cost * best_den < best_num * count:
            best_num, best_den, best_set = cost, count, S
    witness = tuple(f for f, fm in zip(faces, masks) if fm & ~best_set == 0)
    mode = "unrestricted" if w == 0 else f"anchored({w})"
    return DensityReport(Fraction(best_num, best_den), witness, mode)


# ---------------------------------------------------------------------------
# density by parametric max-flow


def _flow_detect(faces, free, num: int, den: int):
    """Is there a nonempty T with num*|T| - den*cost(T) > 0?

    Network: source -> face (cap num), face -> its counted vertices
    (cap inf), vertex -> sink (cap den).  The min cut keeps exactly the
    face sets whose density beats num/den.  Returns the witness face
    index set, or None.
    """
    k = len(faces)
    verts = sorted({v for t in faces for v in t})
    vnode = {v: k + 1 + i for i, v in enumerate(verts)}
    src, sink = 0, k + 1 + len(verts)
    net = FlowNetwork(sink + 1)
    inf = num * k + 1
    for j, t in enumerate(faces):
        net.add_arc(src, j + 1, num)
        for v in t:
            net.add_arc(j + 1, vnode[v], inf)
    for v in verts:
        if not (free >> v) & 1:
            net.add_arc(vnode[v], sink, den)
    flow = net.max_flow(src, sink)
    if flow >= num * k:
        return None
    side = net.source_side(src)
    chosen = [j for j in range(k) if j + 1 in side]
    return chosen or None


def density_e_by_flow(X: Complex2, w: int = 0) -> DensityReport:
    """Exact density via binary search over a parametric flow network.

    The candidate densities are fractions with denominator at most f2,
    so once the search interval is shorter than 1/f2^2 it contains at
    most one candidate and the min-cut witness at the upper end attains
    the exact minimum.
    """
    _check_anchor(X, w)
    faces = X.sorted_faces()
    if not faces:
        raise NoFaces("density needs at least one face")
    masks = _face_masks(faces)
    free = _cost_mask(w)
    k = len(faces)

    lo = Fraction(0)  # e >= 0 always
    hi = Fraction(7, 2)  # one face costs at most 3, so e <= 3 < hi
    gap = Fraction(1, k * k)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if _flow_detect(faces, free, mid.numerator, mid.denominator):
            hi = mid
        else:
            lo = mid
    chosen = _flow_detect(faces, free, hi.numerator, hi.denominator)
    vmask = 0
    for j in chosen:
        vmask |= masks[j]
    witness = tuple(faces[j] for j in sorted(chosen))
    value = Fraction((vmask & ~free).bit_count(), len(chosen))
    mode = "unrestricted" if w == 0 else f"anchored({w})"
    return DensityReport(value, witness, mode)


# ---------------------------------------------------------------------------
# public density operations


def density_e(X: Complex2) -> DensityReport:
    """Minimum vertex-per-face density over nonempty face subsets."""
    if X.f2 == 0:
        raise NoFaces("density needs at least one face")
    if X.f2 <= BRUTE_FORCE_FACE_LIMIT:
        return density_e_by_faces(X, 0)
    return density_e_by_flow(X, 0)


def density_e_w(X: Complex2, w: int) -> DensityReport:
    """Anchored density: vertices 1..w contribute nothing to the numerator."""
    if w not in (0, 3):
        raise AnchorMissing(f"only w in {{0, 3}} is supported, got {w}")
    if w == 0:
        return density_e(X)
    _check_anchor(X, w)
    if X.f2 == 0:
        raise NoFaces("density needs at least one face")
    if X.f2 <= BRUTE_FORCE_FACE_LIMIT:
        return density_e_by_faces(X, w)
    return density_e_by_flow(X, w)


def is_admissible(X: Complex2, eps) -> bool:
    """e(X) >= 1/2 + eps, with face-free complexes admissible (min = +inf)."""
    if X.f2 == 0:
        return True
    return density_e(X).value >= Fraction(1, 2) + as_fraction(eps)


def is_admissible_anchored(X: Complex2, eps, w: int = 3) -> bool:
    if X.f2 == 0:
        return True
    return density_e_w(X, w).value >= Fraction(1, 2) + as_fraction(eps)


# ---------------------------------------------------------------------------
# sparsity search


def _sparsity_search(X: Complex2, eps, m: int, w: int) -> SparsityVerdict:
    """Branch-and-bound over connected face sets of size <= m.

    A violating set that is minimal under inclusion is connected through
    shared vertices (splitting a disconnected set leaves a part at least
    as dense), so growing connected sets is exhaustive.  A state whose
    counted-vertex total already reaches (1/2+eps)*m cannot be extended
    to a violation and is pruned together with all its supersets.
    """
    eps = as_fraction(eps)
    thr = Fraction(1, 2) + eps
    tn, td = thr.numerator, thr.denominator
    faces = X.sorted_faces()
    masks = _face_masks(faces)
    free = _cost_mask(w)
    k = len(faces)

    vertex_faces: dict = {}
    for j, t in enumerate(faces):
        for v in t:
            vertex_faces.setdefault(v, []).append(j)

    # prune threshold on the counted-vertex total
    prune_at = thr * m

    seen: set = set()
    stack: list = []
    for j in range(k):
        state = (j,)
        vmask = masks[j]
        cost = (vmask & ~free).bit_count()
        if cost * td < tn:  # violation at |T| = 1
            return SparsityVerdict(False, (faces[j],), eps, m, w != 0)
        if Fraction(cost) < prune_at:
            seen.add(state)
            stack.append((state, vmask, cost))

    while stack:
        state, vmask, cost = stack.pop()
        if len(state) >= m:
            continue
        hull = vmask | free
        budget = prune_at - cost  # how many new counted vertices fit
        if budget <= 1 and hull.bit_count() <= 9:
            # no new vertices allowed: candidate faces live inside the hull
            hv = [v for v in range(1, X.n + 1) if (hull >> v) & 1]
            candidates = []
            for tri in itertools.combinations(hv, 3):
                if X.has_face(*tri):
                    jj = _face_index(faces, tri)
                    if jj is not None:
                        candidates.append(jj)
        else:
            candidates = set()
            for v in range(1, X.n + 1):
                if (vmask >> v) & 1:
                    candidates.update(vertex_faces.get(v, ()))
            candidates = sorted(candidates)

        for j in candidates:
            if j in state:
                continue
            if not masks[j] & vmask:  # must stay vertex-connected
                continue
            child = tuple(sorted(state + (j,)))
            if child in seen:
                continue
            seen.add(child)
            cvmask = vmask | masks[j]
            ccost = (cvmask & ~free).bit_count()
            if ccost * td < tn * len(child):
                witness = tuple(faces[i] for i in child)
                return SparsityVerdict(False, witness, eps, m, w != 0)
            if Fraction(ccost) < prune_at:
                stack.append((child, cvmask, ccost))

    return SparsityVerdict(True, None, eps, m, w != 0)


def _face_index(faces, tri):
    from bisect import bisect_left

    i = bisect_left(faces, tri)
    if i < len(faces) and faces[i] == tri:
        return i
    return None


def check_sparse(X: Complex2, eps, m: int) -> SparsityVerdict:
    """Sparse iff every nonempty T with |T| <= m has |V(T)| >= (1/2+eps)|T|."""
    if m < 1:
        raise TooLarge(f"m must be >= 1, got {m}")
    return _sparsity_search(X, eps, m, 0)


def check_sparse3(X: Complex2, eps, m: int) -> SparsityVerdict:
    """Anchored sparsity: vertices 1,2,3 are free in the vertex count."""
    if m < 1:
        raise TooLarge(f"m must be >= 1, got {m}")
    _check_anchor(X, 3)
    return _sparsity_search(X, eps, m, 3)


def verify_dense_witness(X: Complex2, verdict: SparsityVerdict) -> bool:
    """Re-check a DenseWitness by direct counting, independent of the search."""
    if verdict.sparse or verdict.witness is None:
        return False
    T = verdict.witness
    if not 1 <= len(T) <= verdict.m:
        return False
    if any(tuple(sorted(t)) not in X.faces for t in T):
        return False
    verts = {v for t in T for v in t}
    if verdict.anchored:
        cost = len(verts | {1, 2, 3}) - 3
    else:
        cost = len(verts)
    return Fraction(cost) < (Fraction(1, 2) + verdict.eps) * len(T)


# ---------------------------------------------------------------------------
# abstract dense prototypes and embedding search (oracle scale)


def enumerate_dense_prototypes(eps, m: int) -> list[Complex2]:
    """All pure 2-complexes with f2 <= m and f0 < (1/2+eps)f2, up to iso.

    Used to cross-validate check_sparse by explicit embedding search.
    Supports the oracle scale m <= 4 only.
    """
    from .complexes import build_complex

    if m > 4:
        raise TooLarge(f"prototype enumeration supports m <= 4, got {m}")
    eps = as_fraction(eps)
    thr = Fraction(1, 2) + eps

    found: dict = {}
    for k in range(1, m + 1):
        # largest vertex count with v < thr*k, also at most 3k
        v_max = math.floor(thr * k)
        if Fraction(v_max) == thr * k:
            v_max -= 1
        v_max = min(v_max, 3 * k)
        if v_max > 6:
            raise TooLarge("prototype enumeration capped at 6 vertices")
        for v in range(3, v_max + 1):
            triples = list(itertools.combinations(range(1, v + 1), 3))
            for combo in itertools.combinations(triples, k):
                used = {x for t in combo for x in t}
                if len(used) != v:
                    continue
                key = _canonical_faces(combo, v)
                if key not in found:
                    edges = {
                        p for t in key for p in itertools.combinations(t, 2)
                    }
                    found[key] = build_complex(v, edges, key)
    return [found[k] for k in sorted(found)]


def _canonical_faces(faces, v: int) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, v + 1)):
        relabeled = tuple(
            sorted(tuple(sorted(perm[x - 1] for x in t)) for t in faces)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def find_embedding(Z: Complex2, X: Complex2):
    """An injective simplicial map Z -> X carrying faces to faces, or None.

    Z must be pure (every vertex in a face), as the prototypes are.
    """
    zfaces = Z.sorted_faces()
    zn = Z.n
    assign = [0] * (zn + 1)
    used: set = set()

    # faces fully determined once their max vertex is assigned
    by_last: dict = {}
    for t in zfaces:
        by_last.setdefault(max(t), []).append(t)

    def place(v: int) -> bool:
        if v > zn:
            return True
        for cand in range(1, X.n + 1):
            if cand in used:
                continue
            assign[v] = cand
            ok = all(
                X.has_face(assign[a], assign[b], assign[c])
                for a, b, c in by_last.get(v, ())
            )
            if ok:
                used.add(cand)
                if place(v + 1):
                    return True
                used.discard(cand)
        assign[v] = 0
        return False

    if place(1):
        return {v: assign[v] for v in range(1, zn + 1)}
    return None
