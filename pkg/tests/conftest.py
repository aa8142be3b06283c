import itertools
import random

import pytest
from hypothesis import strategies as st

from randcomplex import FULL, RngSpec, build_complex, gen_Y
from randcomplex.examples import (
    k4_skeleton,
    lone_face_five,
    projective_plane_six,
    tetrahedron_boundary,
    triangle,
)


@pytest.fixture(scope="session")
def t1():
    return triangle()


@pytest.fixture(scope="session")
def tet():
    return tetrahedron_boundary()


@pytest.fixture(scope="session")
def k4():
    return k4_skeleton()


@pytest.fixture(scope="session")
def rp6():
    return projective_plane_six()


@pytest.fixture(scope="session")
def x5():
    return lone_face_five()


def random_listed_complex(rng: random.Random, n_max: int = 8):
    """A small random listed-mode complex (faces plus some stray edges)."""
    n = rng.randint(3, n_max)
    triples = [
        (a, b, c)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        for c in range(b + 1, n + 1)
    ]
    faces = [t for t in triples if rng.random() < 0.25]
    edges = {p for t in faces for p in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if rng.random() < 0.15:
                edges.add((a, b))
    return build_complex(n, edges, faces)


def random_y(n, p, seed, trial=0):
    return gen_Y(n, p, RngSpec(seed=seed, trial=trial))


@st.composite
def small_complexes(draw, max_n=8):
    """Hypothesis strategy: listed-mode complexes with stray edges."""
    n = draw(st.integers(3, max_n))
    triples = list(itertools.combinations(range(1, n + 1), 3))
    faces = draw(st.lists(st.sampled_from(triples), max_size=10, unique=True))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    stray = draw(st.lists(st.sampled_from(pairs), max_size=6, unique=True))
    edges = {p for t in faces for p in itertools.combinations(t, 2)}
    edges.update(stray)
    return build_complex(n, edges, faces)
