"""Finite simplicial 2-complexes on vertex set {1..n}, and small graphs.

A :class:`Complex2` is immutable after construction.  The 1-skeleton is
either ``"full"`` (the complete graph, stored implicitly and never
materialized) or ``"listed"`` (an explicit edge set).  Faces are always
explicit.  Vertices are 1-based.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .errors import (
    Disconnected,
    DegenerateSimplex,
    EqualVertices,
    InvalidLoop,
    MissingBoundaryEdge,
    MissingEdge,
    OutOfRange,
    UnknownFace,
)

#: Sentinel accepted by :func:`build_complex` for a complete 1-skeleton.
FULL = "full"


def _norm_edge(e) -> tuple[int, int]:
    a, b = e
    if a == b:
        raise DegenerateSimplex(f"edge {e!r} repeats a vertex")
    return (a, b) if a < b else (b, a)


def _norm_face(t) -> tuple[int, int, int]:
    a, b, c = t
    if a == b or a == c or b == c:
        raise DegenerateSimplex(f"face {t!r} repeats a vertex")
    return tuple(sorted((a, b, c)))


class Complex2:
    """A 2-dimensional simplicial complex on vertices 1..n.

    Use :func:`build_complex` rather than calling this directly; the
    constructor assumes already-validated, normalized input.
    """

    __slots__ = ("n", "skeleton_mode", "faces", "_edges", "_cofaces", "_vertex_faces")

    def __init__(self, n: int, skeleton_mode: str, edges, faces):
        self.n = n
        self.skeleton_mode = skeleton_mode
        self.faces = frozenset(faces)
        self._edges = None if skeleton_mode == FULL else frozenset(edges)
        # lazy caches, built once on first use
        self._cofaces = None
        self._vertex_faces = None

    # -- counting ------------------------------------------------------

    @property
    def f0(self) -> int:
        return self.n

    @property
    def f1(self) -> int:
        if self.skeleton_mode == FULL:
            return self.n * (self.n - 1) // 2
        return len(self._edges)

    @property
    def f2(self) -> int:
        return len(self.faces)

    # -- membership ----------------------------------------------------

    def has_vertex(self, v: int) -> bool:
        return 1 <= v <= self.n

    def has_edge(self, a: int, b: int) -> bool:
        if a == b or not (self.has_vertex(a) and self.has_vertex(b)):
            return False
        if self.skeleton_mode == FULL:
            return True
        return ((a, b) if a < b else (b, a)) in self._edges

    def has_face(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.faces

    # -- iteration -----------------------------------------------------

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges in sorted order.  For a full skeleton this
        generates the C(n,2) pairs lazily without storing them."""
        if self.skeleton_mode == FULL:
            return itertools.combinations(range(1, self.n + 1), 2)
        return iter(sorted(self._edges))

    def sorted_faces(self) -> list[tuple[int, int, int]]:
        return sorted(self.faces)

    # -- cached indices -------------------------------------------------

    def coface_map(self) -> dict:
        """Edge -> sorted tuple of apex vertices of the faces containing it.

        Only edges that support at least one face are keys.  Built once
        and cached; the complex is immutable so the index never changes.
        """
        if self._cofaces is None:
            m: dict = {}
            for a, b, c in self.faces:
                m.setdefault((a, b), []).append(c)
                m.setdefault((a, c), []).append(b)
                m.setdefault((b, c), []).append(a)
            self._cofaces = {e: tuple(sorted(v)) for e, v in m.items()}
        return self._cofaces

    def vertex_face_map(self) -> dict:
        """Vertex -> sorted tuple of faces containing it (lazy, cached)."""
        if self._vertex_faces is None:
            m: dict = {}
            for t in self.faces:
                for v in t:
                    m.setdefault(v, []).append(t)
            self._vertex_faces = {v: tuple(sorted(ts)) for v, ts in m.items()}
        return self._vertex_faces

    # -- misc ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Complex2):
            return NotImplemented
        return (
            self.n == other.n
            and self.skeleton_mode == other.skeleton_mode
            and self.faces == other.faces
            and (self.skeleton_mode == FULL or self._edges == other._edges)
        )

    def __hash__(self):
        return hash((self.n, self.skeleton_mode, self.faces, self._edges))

    def __repr__(self):
        return f"Complex2(n={self.n}, {self.skeleton_mode}, f1={self.f1}, f2={self.f2})"


class Graph:
    """An undirected simple graph with explicit integer vertices."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        self.vertices = frozenset(vertices)
        es = frozenset(_norm_edge(e) for e in edges)
        for a, b in es:
            if a not in self.vertices or b not in self.vertices:
                raise OutOfRange(f"edge ({a},{b}) references a missing vertex")
        self.edges = es

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def adjacency(self) -> dict:
        adj: dict = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


class LoopWord:
    """A cyclic closed edge path v1..vr (r >= 3) in an ambient complex."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[int]):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise InvalidLoop("a loop word needs at least 3 vertices")
        for i, v in enumerate(vs):
            if v == vs[(i + 1) % len(vs)]:
                raise InvalidLoop(f"consecutive repeated vertex {v}")
        self.vertices = vs

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"LoopWord{self.vertices}"

    def validate_in(self, X: Complex2) -> None:
        """Raise InvalidLoop unless every consecutive pair is an edge of X."""
        vs = self.vertices
        for i, v in enumerate(vs):
            w = vs[(i + 1) % len(vs)]
            if not X.has_edge(v, w):
                raise InvalidLoop(f"({v},{w}) is not an edge of the complex")


#: The canonical 3-cycle through vertices 1, 2, 3.
ID3 = LoopWord((1, 2, 3))


# ---------------------------------------------------------------------------
# construction


def build_complex(n: int, edges, faces) -> Complex2:
    """Validate and build an immutable complex.

    ``edges`` is either :data:`FULL` or an iterable of vertex pairs.
    Duplicate edges/faces are deduplicated.  Raises OutOfRange,
    DegenerateSimplex, or MissingBoundaryEdge on bad input.
    """
    if n < 0:
        raise OutOfRange(f"vertex count {n} is negative")

    norm_faces = set()
    for t in faces:
        t = _norm_face(t)
        if t[0] < 1 or t[2] > n:
            raise OutOfRange(f"face {t} not within 1..{n}")
        norm_faces.add(t)

    if edges == FULL or edges is FULL:
        return Complex2(n, FULL, None, norm_faces)

    norm_edges = set()
    for e in edges:
        e = _norm_edge(e)
        if e[0] < 1 or e[1] > n:
            raise OutOfRange(f"edge {e} not within 1..{n}")
        norm_edges.add(e)
    for a, b, c in norm_faces:
        for pair in ((a, b), (a, c), (b, c)):
            if pair not in norm_edges:
                raise MissingBoundaryEdge(
                    f"face ({a},{b},{c}) needs edge {pair} which is not listed"
                )
    return Complex2(n, "listed", norm_edges, norm_faces)


# ---------------------------------------------------------------------------
# elementary operations


def link(X: Complex2, v: int) -> Graph:
    """The link of v: vertices joined to v by an edge, edges from faces on v."""
    if not X.has_vertex(v):
        raise OutOfRange(f"vertex {v} not in 1..{X.n}")
    if X.skeleton_mode == FULL:
        verts = [u for u in range(1, X.n + 1) if u != v]
    else:
        verts = [u for u in range(1, X.n + 1) if u != v and X.has_edge(u, v)]
    edges = []
    for t in X.vertex_face_map().get(v, ()):
        p, q = (u for u in t if u != v)
        edges.append((p, q))
    return Graph(verts, edges)


def link_intersection_graph(X: Complex2, a: int, b: int) -> Graph:
    """Common-link graph of a and b.

    Vertices: p with {a,p} and {b,p} both edges.  Edge {u,v} present
    iff {a,u,v} and {b,u,v} are both faces.
    """
    if a == b:
        raise EqualVertices(f"need two distinct vertices, got {a} twice")
    if not (X.has_vertex(a) and X.has_vertex(b)):
        raise OutOfRange(f"vertices ({a},{b}) not in 1..{X.n}")
    if X.skeleton_mode == FULL:
        verts = [u for u in range(1, X.n + 1) if u != a and u != b]
    else:
        verts = [
            u
            for u in range(1, X.n + 1)
            if u != a and u != b and X.has_edge(u, a) and X.has_edge(u, b)
        ]
    vset = set(verts)
    edges = []
    for t in X.vertex_face_map().get(a, ()):
        u, v = (w for w in t if w != a)
        if u in vset and v in vset and X.has_face(b, u, v):
            edges.append((u, v))
    return Graph(verts, edges)


def euler_characteristic(X: Complex2) -> int:
    return X.f0 - X.f1 + X.f2


def length_L(X: Complex2) -> int:
    """The boundary-length functional 2*f1 - 3*f2 (may be negative)."""
    return 2 * X.f1 - 3 * X.f2


def face_degree(X: Complex2, e) -> int:
    """Number of faces containing edge e."""
    a, b = _norm_edge(e)
    if not X.has_edge(a, b):
        raise MissingEdge(f"({a},{b}) is not an edge of the complex")
    return len(X.coface_map().get((a, b), ()))


def induced_subcomplex(X: Complex2, T) -> Complex2:
    """The subcomplex spanned by face subset T, relabeled to 1..k.

    Vertices are the vertices of T, renumbered in increasing order;
    edges are exactly the boundary edges of T (listed skeleton).
    """
    faces = set()
    for t in T:
        t = _norm_face(t)
        if t not in X.faces:
            raise UnknownFace(f"{t} is not a face of the complex")
        faces.add(t)
    verts = sorted({v for t in faces for v in t})
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    new_faces = [tuple(sorted(relabel[v] for v in t)) for t in faces]
    new_edges = {
        pair for t in new_faces for pair in itertools.combinations(t, 2)
    }
    return build_complex(len(verts), new_edges, new_faces)


def skeleton_graph(X: Complex2) -> Graph:
    """The 1-skeleton as an explicit Graph (materializes a full skeleton)."""
    return Graph(range(1, X.n + 1), X.iter_edges())


# ---------------------------------------------------------------------------
# graph utilities


def connected_components(G: Graph) -> list[frozenset]:
    """Partition of the vertex set into components, sorted by least vertex."""
    adj = G.adjacency()
    seen: set = set()
    parts = []
    for start in sorted(G.vertices):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def is_connected(G: Graph) -> bool:
    if not G.vertices:
        return True
    return len(connected_components(G)) == 1


def spanning_tree(G: Graph) -> set:
    """Edge set of a BFS spanning tree; raises Disconnected otherwise."""
    if not G.vertices:
        return set()
    adj = G.adjacency()
    root = min(G.vertices)
    seen = {root}
    tree = set()
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    tree.add((u, w) if u < w else (w, u))
                    nxt.append(w)
        frontier = nxt
    if len(seen) != len(G.vertices):
        raise Disconnected("graph is not connected")
    return tree
