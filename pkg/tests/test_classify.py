import itertools
import random
from fractions import Fraction

import pytest

from randcomplex import (
    betti,
    build_complex,
    collapse_core,
    homotopy_type,
    popped_bound_check,
)
from randcomplex.errors import (
    DenominatorNonpositive,
    NoFaces,
    NotAdmissible,
    OutOfRange,
)

from conftest import random_y


def _all_faces(n):
    return list(itertools.combinations(range(1, n + 1), 3))


class TestCollapse:
    def test_t1_collapses_to_points(self, t1):
        K = collapse_core(t1)
        assert (K.f0, K.f1, K.f2) == (3, 0, 0)

    def test_tet_unchanged(self, tet):
        K = collapse_core(tet)
        assert K.faces == tet.faces
        assert K.f1 == 6

    def test_extra_flap_removed(self):
        X = build_complex(
            5, "full", [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5)]
        )
        K = collapse_core(X)
        assert K.f2 == 4
        assert (1, 2, 5) not in K.faces
        assert not any(5 in e for e in K.iter_edges())

    def test_protected_edges_keep_single_faces(self, t1):
        K = collapse_core(t1, A=[(1, 2), (1, 3), (2, 3)])
        assert K.faces == t1.faces

    def test_protected_edge_without_face_still_dies(self, k4):
        K = collapse_core(k4, A=[(1, 2)])
        assert K.f1 == 0

    def test_bad_protected_edge(self, t1):
        with pytest.raises(OutOfRange):
            collapse_core(t1, A=[(1, 7)])

    def test_confluence_over_random_orders(self):
        for t in range(5):
            Y = random_y(9, "0.12", seed=80, trial=t)
            base = collapse_core(Y)
            for i in range(20):
                assert collapse_core(Y, order=random.Random(i)) == base

    def test_collapse_preserves_b2_and_projective_count(self):
        for t in range(12):
            Y = random_y(10, "0.1", seed=81, trial=t)
            K = collapse_core(Y)
            for coeff in ("gf2", "q"):
                assert betti(Y, coeff).b2 == betti(K, coeff).b2
            py = betti(Y, "gf2").b1 - betti(Y, "q").b1
            pk = betti(K, "gf2").b1 - betti(K, "q").b1
            assert py == pk


class TestHomotopyType:
    def test_tet_is_sphere(self, tet):
        ht = homotopy_type(tet)
        assert [k.as_tuple() for k in ht.components] == [(0, 1, 0)]

    def test_rp6_is_projective_plane(self, rp6):
        ht = homotopy_type(rp6)
        assert ht.totals() == (0, 0, 1)

    def test_k4_is_wedge_of_circles(self, k4):
        ht = homotopy_type(k4)
        assert ht.totals() == (3, 0, 0)

    def test_t1_is_contractible(self, t1):
        assert homotopy_type(t1).totals() == (0, 0, 0)

    def test_not_admissible(self):
        # the complete 2-skeleton on 5 vertices has e = 5/10 = 1/2 exactly
        X = build_complex(5, "full", _all_faces(5))
        with pytest.raises(NotAdmissible):
            homotopy_type(X)

    def test_disjoint_pieces_classified_per_component(self, tet):
        faces = list(tet.faces) + [(5, 6, 7)]
        edges = set(itertools.combinations(range(1, 5), 2)) | {
            (5, 6), (5, 7), (6, 7), (8, 9),
        }
        X = build_complex(10, edges, faces)
        ht = homotopy_type(X)
        signatures = sorted(k.as_tuple() for k in ht.components)
        # sphere, disk, edge, isolated vertex
        assert signatures == [(0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 1, 0)]
        assert len(ht.components) == 4

    def test_admissible_random_instances_are_consistent(self):
        # the classifier runs its own cross-checks; drive it over many
        # admissible samples and verify chi bookkeeping per component
        from randcomplex import euler_characteristic, is_admissible

        seen = 0
        trial = 0
        while seen < 100 and trial < 600:
            Y = random_y(12, "0.045", seed=82, trial=trial)
            trial += 1
            if Y.f2 == 0 or not is_admissible(Y, Fraction(1, 100)):
                continue
            seen += 1
            ht = homotopy_type(Y)
            c, s, p = ht.totals()
            assert euler_characteristic(Y) == len(ht.components) - c + s
            rep = popped_bound_check(Y, 0)
            assert rep.holds
        assert seen == 100


class TestPoppedBound:
    def test_t1_equality(self, t1):
        rep = popped_bound_check(t1, 0)
        assert (rep.f2, rep.bound, rep.holds) == (1, Fraction(1), True)

    def test_tet_equality(self, tet):
        rep = popped_bound_check(tet, 0)
        assert (rep.f2, rep.bound, rep.holds) == (4, Fraction(4), True)

    def test_rp6_equality(self, rp6):
        rep = popped_bound_check(rp6, 0)
        assert (rep.f2, rep.bound, rep.holds) == (10, Fraction(10), True)

    def test_x5_anchored_equality(self, x5):
        rep = popped_bound_check(x5, 3)
        assert (rep.f2, rep.bound, rep.holds) == (1, Fraction(1), True)

    def test_no_faces(self, k4):
        with pytest.raises(NoFaces):
            popped_bound_check(k4, 0)

    def test_denominator_nonpositive(self):
        X = build_complex(5, "full", _all_faces(5))
        with pytest.raises(DenominatorNonpositive):
            popped_bound_check(X, 0)
