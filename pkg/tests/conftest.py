import pytest

from soclelab.fields import field_of
from soclelab.poly import PolyRing
from soclelab.rings import RingPresentation


@pytest.fixture(scope="session")
def gf101():
    return field_of(101)


@pytest.fixture(scope="session")
def ring_xy(gf101):
    return PolyRing(gf101, ("x", "y"))


@pytest.fixture(scope="session")
def presentation_xy(ring_xy):
    return RingPresentation(ring_xy)


@pytest.fixture(scope="session")
def ring_xyz(gf101):
    return PolyRing(gf101, ("x", "y", "z"))


@pytest.fixture(scope="session")
def presentation_xyz(ring_xyz):
    return RingPresentation(ring_xyz)


@pytest.fixture(scope="session")
def twisted_cubic(gf101):
    S = PolyRing(gf101, ("a", "b", "c", "d"))
    a, b, c, d = S.gens()
    return RingPresentation(S, [a * c - b**2, a * d - b * c, b * d - c**2])


@pytest.fixture(scope="session")
def twisted_cubic_gf2():
    S = PolyRing(field_of(2), ("a", "b", "c", "d"))
    a, b, c, d = S.gens()
    return RingPresentation(S, [a * c - b**2, a * d - b * c, b * d - c**2])
