"""Collapse to the kept-edge core and classify homotopy types.

An admissible complex (density strictly above 1/2) is homotopy
equivalent to a wedge of circles, spheres, and projective planes per
component, and that decomposition is determined by homology: c = b1
over Q, s = b2 over Q, and p = b1(GF2) - b1(Q), cross-checked against
b2(GF2) - b2(Q) and the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import (
    Complex2,
    Graph,
    build_complex,
    connected_components,
    euler_characteristic,
    length_L,
    skeleton_graph,
)
from .density import density_e, density_e_w
from .errors import (
    DenominatorNonpositive,
    InternalInconsistency,
    NoFaces,
    NotAdmissible,
    OutOfRange,
)
from .homology import betti


# ---------------------------------------------------------------------------
# collapse


def collapse_core(X: Complex2, A=(), order=None) -> Complex2:
    """The maximal subcomplex keeping each edge only if it lies in >= 2
    faces, or in >= 1 face while belonging to the protected edge set A.

    Deleting a violating edge removes its (at most one) incident face,
    which may expose new violations; the worklist runs to a fixpoint.
    Maximality makes the result independent of deletion order; `order`
    (a random.Random) shuffles processing purely so tests can confirm
    that.  Vertices are retained; the result has a listed skeleton.
    """
    protected = set()
    for e in A:
        a, b = e
        if not (X.has_edge(a, b)):
            raise OutOfRange(f"protected edge {e} is not an edge of the complex")
        protected.add((a, b) if a < b else (b, a))

    edges = set(X.iter_edges())
    cofaces: dict = {}
    for t in X.faces:
        a, b, c = t
        for e in ((a, b), (a, c), (b, c)):
            cofaces.setdefault(e, set()).add(t)

    def violates(e) -> bool:
        deg = len(cofaces.get(e, ()))
        if deg >= 2:
            return False
        return not (deg == 1 and e in protected)

    queue = list(edges)
    if order is not None:
        order.shuffle(queue)
    while queue:
        if order is not None and len(queue) > 1:
            i = order.randrange(len(queue))
            queue[i], queue[-1] = queue[-1], queue[i]
        e = queue.pop()
        if e not in edges or not violates(e):
            continue
        edges.discard(e)
        for t in list(cofaces.get(e, ())):
            a, b, c = t
            for e2 in ((a, b), (a, c), (b, c)):
                cofaces[e2].discard(t)
                if e2 in edges:
                    queue.append(e2)
        cofaces.pop(e, None)

    faces = {t for ts in cofaces.values() for t in ts}
    return build_complex(X.n, edges, faces)


# ---------------------------------------------------------------------------
# homotopy type


@dataclass(frozen=True)
class ComponentType:
    """Wedge summands of one connected component."""

    circles: int
    spheres: int
    projective_planes: int
    vertices: tuple

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.circles, self.spheres, self.projective_planes)


@dataclass(frozen=True)
class HomotopyType:
    components: tuple

    def totals(self) -> tuple[int, int, int]:
        c = sum(k.circles for k in self.components)
        s = sum(k.spheres for k in self.components)
        p = sum(k.projective_planes for k in self.components)
        return (c, s, p)


def _component_complex(X: Complex2, verts) -> Complex2:
    order = sorted(verts)
    relabel = {v: i + 1 for i, v in enumerate(order)}
    edges = [
        (relabel[a], relabel[b]) for a, b in X.iter_edges() if a in verts
    ]
    faces = [
        tuple(sorted((relabel[a], relabel[b], relabel[c])))
        for a, b, c in X.faces
        if a in verts
    ]
    return build_complex(len(order), edges, faces)


def homotopy_type(X: Complex2) -> HomotopyType:
    """Per-component wedge counts (circles, spheres, projective planes).

    Requires density strictly above 1/2 (face-free complexes pass
    trivially); raises NotAdmissible otherwise.  The two independent
    computations of the projective-plane count must agree and the Euler
    characteristic must match, else InternalInconsistency.
    """
    if X.f2 > 0 and density_e(X).value <= Fraction(1, 2):
        raise NotAdmissible(
            f"density {density_e(X).value} is not strictly above 1/2"
        )
    comps = connected_components(skeleton_graph(X))
    out = []
    for verts in comps:
        sub = _component_complex(X, verts)
        bq = betti(sub, "q")
        b2f = betti(sub, "gf2")
        c, s = bq.b1, bq.b2
        p = b2f.b1 - bq.b1
        if p != b2f.b2 - bq.b2:
            raise InternalInconsistency(
                f"projective-plane counts disagree: {p} vs {b2f.b2 - bq.b2}"
            )
        if euler_characteristic(sub) != 1 - c + s:
            raise InternalInconsistency(
                f"chi {euler_characteristic(sub)} != 1 - {c} + {s}"
            )
        out.append(ComponentType(c, s, p, tuple(sorted(verts))))
    return HomotopyType(tuple(out))


# ---------------------------------------------------------------------------
# face-count bound


@dataclass(frozen=True)
class BoundReport:
    f2: int
    bound: Fraction
    holds: bool
    chi: int
    length: int
    density: Fraction
    w: int


def popped_bound_check(X: Complex2, w: int = 0) -> BoundReport:
    """Evaluate f2 <= (2*chi - 2w + L) / (2*e_w - 1) exactly.

    Requires at least one face and anchored density strictly above 1/2.
    """
    if X.f2 == 0:
        raise NoFaces("the bound needs at least one face")
    ew = density_e_w(X, w).value
    denom = 2 * ew - 1
    if denom <= 0:
        raise DenominatorNonpositive(f"2*e_{w} - 1 = {denom} <= 0")
    chi = euler_characteristic(X)
    L = length_L(X)
    bound = Fraction(2 * chi - 2 * w + L) / denom
    return BoundReport(
        f2=X.f2, bound=bound, holds=X.f2 <= bound, chi=chi, length=L,
        density=ew, w=w,
    )
