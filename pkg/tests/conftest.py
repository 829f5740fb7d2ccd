import pytest
from hypothesis import strategies as st

from alexdual import SimplicialComplex

# Four vertices, edges 12 13 14 23: an empty triangle 1-2-3 with a whisker to 4.
S_FACETS = [(1, 2), (1, 3), (1, 4), (2, 3)]

# Six-vertex triangulation of the real projective plane.
RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
]


@pytest.fixture
def S():
    return SimplicialComplex.from_faces(4, S_FACETS)


@pytest.fixture
def rp2():
    return SimplicialComplex.from_faces(6, RP2_FACETS)


@pytest.fixture
def triangle_boundary():
    return SimplicialComplex.from_faces(3, [(1, 2), (1, 3), (2, 3)])


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    faces = draw(st.lists(st.sets(st.integers(1, n), max_size=n) if n else st.just(set()), max_size=6))
    return SimplicialComplex.from_faces(n, faces)
