import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randcomplex import (
    FULL,
    Graph,
    LoopWord,
    build_complex,
    connected_components,
    euler_characteristic,
    face_degree,
    induced_subcomplex,
    length_L,
    link,
    link_intersection_graph,
    skeleton_graph,
    spanning_tree,
)
from randcomplex.errors import (
    DegenerateSimplex,
    Disconnected,
    EqualVertices,
    InvalidLoop,
    MissingBoundaryEdge,
    MissingEdge,
    OutOfRange,
    UnknownFace,
)

from conftest import random_listed_complex, small_complexes


class TestBuild:
    def test_t1_counts(self, t1):
        assert (t1.f0, t1.f1, t1.f2) == (3, 3, 1)

    def test_tet_counts(self, tet):
        assert (tet.f0, tet.f1, tet.f2) == (4, 6, 4)

    def test_missing_boundary_edge(self):
        with pytest.raises(MissingBoundaryEdge):
            build_complex(3, [(1, 2)], [(1, 2, 3)])

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            build_complex(3, FULL, [(1, 2, 4)])
        with pytest.raises(OutOfRange):
            build_complex(3, [(0, 1)], [])

    def test_degenerate(self):
        with pytest.raises(DegenerateSimplex):
            build_complex(4, FULL, [(1, 2, 2)])
        with pytest.raises(DegenerateSimplex):
            build_complex(4, [(3, 3)], [])

    def test_deduplication(self):
        X = build_complex(4, [(1, 2), (2, 1)], [])
        assert X.f1 == 1

    def test_full_skeleton_is_implicit(self):
        # a huge full skeleton must build instantly without storing edges
        X = build_complex(10**6, FULL, [(1, 2, 3)])
        assert X.f1 == 10**6 * (10**6 - 1) // 2
        assert X.has_edge(123456, 999999)
        assert not X.has_edge(5, 5)


class TestLink:
    def test_tet_link_is_triangle(self, tet):
        g = link(tet, 1)
        assert g.vertices == frozenset({2, 3, 4})
        assert g.edges == frozenset({(2, 3), (2, 4), (3, 4)})

    def test_t1_link_single_edge(self, t1):
        g = link(t1, 1)
        assert g.edges == frozenset({(2, 3)})

    def test_k4_link_isolated(self, k4):
        g = link(k4, 1)
        assert g.vertices == frozenset({2, 3, 4})
        assert g.edges == frozenset()

    def test_out_of_range(self, tet):
        with pytest.raises(OutOfRange):
            link(tet, 5)


class TestLinkIntersection:
    def test_tet(self, tet):
        g = link_intersection_graph(tet, 1, 2)
        assert g.vertices == frozenset({3, 4})
        assert g.edges == frozenset({(3, 4)})

    def test_t1(self, t1):
        g = link_intersection_graph(t1, 1, 2)
        assert g.vertices == frozenset({3})
        assert g.edges == frozenset()

    def test_k4(self, k4):
        g = link_intersection_graph(k4, 1, 2)
        assert g.vertices == frozenset({3, 4})
        assert g.edges == frozenset()

    def test_equal_vertices(self, tet):
        with pytest.raises(EqualVertices):
            link_intersection_graph(tet, 2, 2)

    def test_edges_are_link_edge_intersection(self):
        rng = random.Random(11)
        for _ in range(25):
            X = random_listed_complex(rng)
            a, b = 1, 2
            if not (X.has_vertex(a) and X.has_vertex(b)):
                continue
            got = link_intersection_graph(X, a, b).edges
            expect = link(X, a).edges & link(X, b).edges
            assert got == expect


class TestCounts:
    def test_euler(self, t1, tet, rp6):
        assert euler_characteristic(t1) == 1
        assert euler_characteristic(tet) == 2
        assert euler_characteristic(rp6) == 1

    def test_length(self, t1, tet, k4):
        assert length_L(t1) == 3
        assert length_L(tet) == 0
        assert length_L(k4) == 12

    def test_face_degree(self, t1, tet, k4):
        assert face_degree(tet, (1, 2)) == 2
        assert face_degree(t1, (1, 2)) == 1
        assert face_degree(k4, (1, 2)) == 0

    def test_missing_edge(self):
        X = build_complex(4, [(1, 2)], [])
        with pytest.raises(MissingEdge):
            face_degree(X, (3, 4))

    def test_face_degree_sum_is_3f2(self):
        rng = random.Random(5)
        for _ in range(25):
            X = random_listed_complex(rng)
            total = sum(face_degree(X, e) for e in X.iter_edges())
            assert total == 3 * X.f2

    @given(small_complexes())
    @settings(max_examples=60, deadline=None)
    def test_length_two_formulas_agree(self, X):
        by_edges = sum(2 - face_degree(X, e) for e in X.iter_edges())
        assert by_edges == length_L(X) == 2 * X.f1 - 3 * X.f2


class TestInducedSubcomplex:
    def test_single_face_of_tet(self, tet, t1):
        sub = induced_subcomplex(tet, [(1, 2, 3)])
        assert (sub.f0, sub.f1, sub.f2) == (3, 3, 1)
        assert sub.faces == t1.faces

    def test_all_faces_of_tet(self, tet):
        sub = induced_subcomplex(tet, tet.faces)
        assert (sub.f0, sub.f1, sub.f2) == (4, 6, 4)

    def test_two_rp6_faces(self, rp6):
        sub = induced_subcomplex(rp6, [(1, 2, 3), (1, 2, 4)])
        assert (sub.f0, sub.f1, sub.f2) == (4, 5, 2)

    def test_relabeling(self, x5):
        sub = induced_subcomplex(x5, [(1, 4, 5)])
        assert sub.n == 3
        assert sub.faces == frozenset({(1, 2, 3)})

    def test_unknown_face(self, tet):
        with pytest.raises(UnknownFace):
            induced_subcomplex(tet, [(1, 2, 5)])

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(20):
            X = random_listed_complex(rng)
            once = induced_subcomplex(X, X.faces)
            twice = induced_subcomplex(once, once.faces)
            assert once == twice


def test_chi_and_length_additive_over_disjoint_union():
    rng = random.Random(8)
    for _ in range(20):
        A = random_listed_complex(rng, n_max=6)
        B = random_listed_complex(rng, n_max=6)
        shift = A.n
        edges = set(A.iter_edges()) | {(a + shift, b + shift) for a, b in B.iter_edges()}
        faces = set(A.faces) | {
            (a + shift, b + shift, c + shift) for a, b, c in B.faces
        }
        U = build_complex(A.n + B.n, edges, faces)
        assert euler_characteristic(U) == euler_characteristic(A) + euler_characteristic(B)
        assert length_L(U) == length_L(A) + length_L(B)


class TestGraphOps:
    def test_components_of_k4_lig(self, k4):
        g = link_intersection_graph(k4, 1, 2)
        assert connected_components(g) == [frozenset({3}), frozenset({4})]

    def test_components_of_triangle(self, tet):
        g = link(tet, 1)
        assert connected_components(g) == [frozenset({2, 3, 4})]

    def test_spanning_tree_size(self, k4):
        g = skeleton_graph(k4)
        tree = spanning_tree(g)
        assert len(tree) == 3
        assert tree <= g.edges

    def test_spanning_tree_disconnected(self):
        g = Graph([1, 2, 3, 4], [(1, 2)])
        with pytest.raises(Disconnected):
            spanning_tree(g)

    @given(st.integers(2, 40), st.random_module())
    @settings(max_examples=25, deadline=None)
    def test_spanning_tree_on_random_connected_graphs(self, n, rnd):
        rng = random.Random(rnd.seed)
        edges = {(i, i + 1) for i in range(1, n)}
        for _ in range(n):
            a, b = rng.randint(1, n), rng.randint(1, n)
            if a != b:
                edges.add((min(a, b), max(a, b)))
        g = Graph(range(1, n + 1), edges)
        tree = spanning_tree(g)
        assert len(tree) == n - 1
        assert len(connected_components(Graph(range(1, n + 1), tree))) == 1


class TestLoopWord:
    def test_too_short(self):
        with pytest.raises(InvalidLoop):
            LoopWord((1, 2))

    def test_repeated_consecutive(self):
        with pytest.raises(InvalidLoop):
            LoopWord((1, 1, 2))

    def test_validate_in(self, t1):
        LoopWord((1, 2, 3)).validate_in(t1)
        X = build_complex(4, [(1, 2), (2, 3)], [])
        with pytest.raises(InvalidLoop):
            LoopWord((1, 2, 3)).validate_in(X)
