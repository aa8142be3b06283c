"""Small named complexes used throughout the tests and docs."""

from __future__ import annotations

from .complexes import FULL, Complex2, build_complex

#: Faces of a 6-vertex triangulation of the real projective plane:
#: 10 faces, every one of the 15 edges in exactly two of them, chi = 1.
RP6_FACES = (
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 5),
    (1, 4, 6),
    (1, 5, 6),
    (2, 3, 6),
    (2, 4, 5),
    (2, 5, 6),
    (3, 4, 5),
    (3, 4, 6),
)


def triangle() -> Complex2:
    """T1: the full skeleton on 3 vertices with its one face."""
    return build_complex(3, FULL, [(1, 2, 3)])


def tetrahedron_boundary() -> Complex2:
    """TET: all four faces on 4 vertices; a 2-sphere."""
    return build_complex(4, FULL, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def k4_skeleton() -> Complex2:
    """K4: the complete graph on 4 vertices, no faces."""
    return build_complex(4, FULL, [])


def projective_plane_six() -> Complex2:
    """RP6: the minimal triangulation of the projective plane."""
    return build_complex(6, FULL, RP6_FACES)


def lone_face_five() -> Complex2:
    """X5: n=5 full skeleton with the single face {1,4,5}."""
    return build_complex(5, FULL, [(1, 4, 5)])
