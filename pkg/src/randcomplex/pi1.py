"""Fundamental-group certificates.

Two one-sided pipelines:

* :func:`certify_simply_connected` - above the density threshold.  If
  every vertex pair a,b has a connected common-link graph spanning all
  n-2 other vertices and some face containing {a,b}, then every 3-cycle
  bounds a disk; with a complete 1-skeleton every loop is a product of
  3-cycles, so Certified soundly implies pi1 = 0.  Inconclusive implies
  nothing.

* :func:`certify_id3_noncontractible` - below the threshold.  Positive
  anchored density e_3(X) > 0 forces every candidate filling of the
  3-cycle through vertices 1,2,3 into a contradiction, so the loop is
  certifiably noncontractible.  False is inconclusive.

Plus presentation extraction from a spanning tree and a bounded
breadth-first search for upper bounds on filling area.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complexes import (
    FULL,
    ID3,
    Complex2,
    Graph,
    LoopWord,
    connected_components,
    skeleton_graph,
    spanning_tree,
)
from .density import DensityReport, SparsityVerdict, check_sparse3, density_e_w
from .errors import BudgetCapExceeded, InvalidLoop, MissingAnchorEdges, OutOfRange

DEFAULT_AREA_BUDGET_CAP = 24


# ---------------------------------------------------------------------------
# simple-connectivity certificate


@dataclass(frozen=True)
class ScCertificate:
    """Outcome of the pairwise link-intersection certificate."""

    certified: bool
    skeleton_complete: bool
    failing_pairs: tuple  # sorted (a, b) pairs that fail either condition
    supporting_vertex: dict  # pair -> some d with {a,b,d} a face

    @property
    def outcome(self) -> str:
        return "Certified" if self.certified else "Inconclusive"


def _skeleton_is_complete(X: Complex2) -> bool:
    if X.skeleton_mode == FULL:
        return True
    return X.f1 == X.n * (X.n - 1) // 2


def certify_simply_connected(X: Complex2) -> ScCertificate:
    """Certified soundly implies pi1(X) = 0; Inconclusive implies nothing.

    A pair (a,b) passes when its common-link graph is connected and
    covers all n-2 other vertices, and some face contains {a,b}.
    """
    n = X.n
    complete = _skeleton_is_complete(X)

    # apex[a][b] = bitmask of c with {a,b,c} a face
    apex = [[0] * (n + 1) for _ in range(n + 1)]
    for a, b, c in X.faces:
        apex[a][b] |= 1 << c
        apex[b][a] |= 1 << c
        apex[a][c] |= 1 << b
        apex[c][a] |= 1 << b
        apex[b][c] |= 1 << a
        apex[c][b] |= 1 << a

    failing = []
    support = {}
    all_bits = ((1 << (n + 1)) - 1) & ~1  # bits 1..n
    for a in range(1, n + 1):
        apex_a = apex[a]
        for b in range(a + 1, n + 1):
            ab_apex = apex_a[b]
            if ab_apex == 0:
                failing.append((a, b))
                continue
            target = all_bits & ~(1 << a) & ~(1 << b)
            if target == 0:
                support[(a, b)] = (ab_apex & -ab_apex).bit_length() - 1
                continue
            apex_b = apex[b]
            start = target & -target
            visited = start
            frontier = start
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    bit = f & -f
                    v = bit.bit_length() - 1
                    nxt |= apex_a[v] & apex_b[v]
                    f ^= bit
                frontier = nxt & target & ~visited
                visited |= frontier
            if visited != target:
                failing.append((a, b))
            else:
                support[(a, b)] = (ab_apex & -ab_apex).bit_length() - 1

    certified = complete and not failing
    return ScCertificate(
        certified=certified,
        skeleton_complete=complete,
        failing_pairs=tuple(sorted(failing)),
        supporting_vertex=support if certified else {},
    )


# ---------------------------------------------------------------------------
# presentation extraction


@dataclass(frozen=True)
class GroupPresentation:
    """Generators (non-tree edges) and relators (face words) of pi1.

    Relators are tuples of signed 1-based generator indices: +g means
    the generator edge traversed from its lower to its higher vertex.
    """

    generators: tuple  # edges (a, b), a < b
    relators: tuple  # tuples of signed generator indices
    tree_edges: tuple
    component_vertices: tuple

    def abelianization(self) -> tuple[int, list[int]]:
        """(free rank, torsion prime powers) of the abelianized group."""
        from .homology import prime_power_factors, smith_normal_form

        g = len(self.generators)
        if not self.relators:
            return g, []
        M = [[0] * len(self.relators) for _ in range(g)]
        for j, rel in enumerate(self.relators):
            for s in rel:
                M[abs(s) - 1][j] += 1 if s > 0 else -1
        snf = smith_normal_form(M)
        torsion: list[int] = []
        for d in snf.invariant_factors:
            if d > 1:
                torsion.extend(prime_power_factors(d))
        return g - snf.rank, sorted(torsion)


def presentation(X: Complex2, component: int = 0) -> GroupPresentation:
    """Presentation of pi1 of the given component from a spanning tree.

    Components are ordered by least vertex.  Each face contributes the
    relator of its boundary word with tree edges elided; empty relators
    are dropped.
    """
    comps = connected_components(skeleton_graph(X))
    if not 0 <= component < len(comps):
        raise OutOfRange(f"component {component} not in 0..{len(comps) - 1}")
    verts = comps[component]

    sub_edges = [e for e in X.iter_edges() if e[0] in verts]
    G = Graph(verts, sub_edges)
    tree = spanning_tree(G)
    gens = tuple(sorted(e for e in sub_edges if e not in tree))
    gen_index = {e: i + 1 for i, e in enumerate(gens)}

    relators = []
    for a, b, c in sorted(X.faces):
        if a not in verts:
            continue
        word = []
        for u, v in ((a, b), (b, c), (c, a)):
            e = (u, v) if u < v else (v, u)
            if e in tree:
                continue
            word.append(gen_index[e] if u < v else -gen_index[e])
        if word:
            relators.append(tuple(word))
    return GroupPresentation(
        generators=gens,
        relators=tuple(relators),
        tree_edges=tuple(sorted(tree)),
        component_vertices=tuple(sorted(verts)),
    )


# ---------------------------------------------------------------------------
# noncontractibility of the anchor 3-cycle


@dataclass(frozen=True)
class Id3Certificate:
    noncontractible: bool
    density: DensityReport | None  # anchored density report, None if no faces


def certify_id3_noncontractible(X: Complex2) -> Id3Certificate:
    """True certifies that the loop 1-2-3 is not contractible in X.

    The certificate is positive anchored density: e_3(X) > 0.  False is
    inconclusive.  A face-free complex certifies trivially since no
    filling can exist and the 3-cycle is not null-homotopic in a graph.
    """
    if X.n < 3:
        raise MissingAnchorEdges(f"need vertices 1,2,3, got n={X.n}")
    for e in ((1, 2), (1, 3), (2, 3)):
        if not X.has_edge(*e):
            raise MissingAnchorEdges(f"anchor edge {e} is absent")
    if X.f2 == 0:
        return Id3Certificate(True, None)
    report = density_e_w(X, 3)
    return Id3Certificate(report.value > 0, report)


@dataclass(frozen=True)
class EvidenceReport:
    """Sparsity evidence for a nontrivial pi1; explicitly not a proof.

    The face-count bound that would certify noncontractibility exists
    but is not explicit, so a user-supplied m only gathers evidence.
    """

    verdict: SparsityVerdict

    @property
    def sparse_at(self) -> bool:
        return self.verdict.sparse

    @property
    def outcome(self) -> str:
        if self.verdict.sparse:
            return f"SparseAt(eps={self.verdict.eps}, m={self.verdict.m})"
        return "DenseWitness"


def evidence_pi1_nontrivial(X: Complex2, eps, m: int) -> EvidenceReport:
    """Run the anchored sparsity search and report; evidence only."""
    return EvidenceReport(check_sparse3(X, eps, m))


# ---------------------------------------------------------------------------
# bounded filling-area search


@dataclass(frozen=True)
class AreaBound:
    loop: LoopWord
    budget: int
    cost: int | None  # None when inconclusive at the given budget
    trace: tuple  # (move, face) pairs from the loop to the trivial loop

    @property
    def outcome(self) -> str:
        return f"UpperBound({self.cost})" if self.cost is not None else "InconclusiveAtBudget"

    @property
    def is_bound(self) -> bool:
        return self.cost is not None


def _canonical(word: tuple) -> tuple:
    if len(word) <= 1:
        return ()
    k = len(word)
    return min(word[i:] + word[:i] for i in range(k))


def _moves(X: Complex2, word: tuple):
    """Yield (successor word, cost, move description)."""
    k = len(word)
    if k == 0:
        return
    if k == 2:
        # the cyclic word (a, b) is a single backtrack; collapse kills it
        yield (), 0, ("collapse", word[1])
    # collapse backtracks (a, b, a) -> (a): cost 0
    if k >= 4:
        for i in range(k):
            if word[i] == word[(i + 2) % k]:
                rest = [word[(i + j) % k] for j in range(k)]
                del rest[2]
                del rest[1]
                yield _canonical(tuple(rest)), 0, ("collapse", word[(i + 1) % k])
    if k >= 3:
        # pop (a, c, b) -> (a, b) across a face {a,b,c}: cost 1
        for i in range(k):
            a, c, b = word[i], word[(i + 1) % k], word[(i + 2) % k]
            if a != b and X.has_face(a, b, c):
                rest = [word[(i + j) % k] for j in range(k)]
                del rest[1]
                yield _canonical(tuple(rest)), 1, ("pop", tuple(sorted((a, b, c))))
    # push (a, b) -> (a, c, b) across a face {a,b,c}: cost 1
    for i in range(k):
        a, b = word[i], word[(i + 1) % k]
        key = (a, b) if a < b else (b, a)
        for c in X.coface_map().get(key, ()):
            rest = [word[(i + j) % k] for j in range(k)]
            rest.insert(1, c)
            yield _canonical(tuple(rest)), 1, ("push", tuple(sorted((a, b, c))))


def area_search(
    X: Complex2,
    loop: LoopWord,
    budget: int,
    cap: int = DEFAULT_AREA_BUDGET_CAP,
) -> AreaBound:
    """Least number of triangle moves taking the loop to a point, if <= budget.

    Moves: push an edge across a face (cost 1), pop a corner across a
    face (cost 1), collapse a backtrack (cost 0).  Each successful trace
    assembles into a filling with one triangle per unit cost, so the
    result is an upper bound on the filling area of the loop; failure to
    find one within the budget proves nothing.
    """
    if budget > cap:
        raise BudgetCapExceeded(f"budget {budget} exceeds cap {cap}")
    if budget < 0:
        raise BudgetCapExceeded(f"budget {budget} is negative")
    loop.validate_in(X)

    start = _canonical(loop.vertices)
    dist = {start: 0}
    parent: dict = {start: None}
    dq = deque([start])
    while dq:
        word = dq.popleft()
        d = dist[word]
        if word == ():
            trace = []
            w = word
            while parent[w] is not None:
                w, move = parent[w]
                trace.append(move)
            return AreaBound(loop, budget, d, tuple(reversed(trace)))
        for succ, cost, move in _moves(X, word):
            nd = d + cost
            if nd > budget:
                continue
            if succ in dist and dist[succ] <= nd:
                continue
            dist[succ] = nd
            parent[succ] = (word, move)
            if cost == 0:
                dq.appendleft(succ)
            else:
                dq.append(succ)
    return AreaBound(loop, budget, None, ())
