from fractions import Fraction

import pytest

from soclelab.errors import DomainError
from soclelab.fields import field_of
from soclelab.frobenius import (
    canonical_frobenius_socle,
    cartier_degrees,
    fedder_module,
    gauge_scan,
    socle_gauge_identity,
)
from soclelab.groebner import Ideal, contains, frobenius_power, ideal_power
from soclelab.localcoh import canonical_ideal, ideal_as_module, socle_begin
from soclelab.poly import PolyRing
from soclelab.rings import RingPresentation


@pytest.fixture(scope="module")
def S2():
    return PolyRing(field_of(2), ("x", "y"))


@pytest.fixture(scope="module")
def RS2(S2):
    return RingPresentation(S2)


@pytest.fixture(scope="module")
def hypersurface(S2):
    x, y = S2.gens()
    return RingPresentation(S2, [x * y])


def test_fedder_polynomial_ring(RS2):
    rep = fedder_module(RS2, 1)
    assert rep.q == 2
    assert rep.colon.is_unit()
    assert rep.generator_degrees == (0,)
    assert rep.mu == 1


def test_fedder_hypersurface(S2, hypersurface):
    rep = fedder_module(hypersurface, 1)
    assert rep.generator_degrees == (2,)
    assert rep.mu == 1
    x, y = S2.gens()
    from soclelab.groebner import minimal_generators

    amb = RingPresentation(S2)
    assert minimal_generators(rep.colon) == [x * y]


def test_fedder_principal_char3():
    S = PolyRing(field_of(3), ("x", "y"))
    x, y = S.gens()
    R = RingPresentation(S, [x])  # a = (x); (x^3 : x) = (x^2)
    rep = fedder_module(R, 1)
    assert rep.generator_degrees == (2,)


def test_fedder_char_zero_rejected():
    S = PolyRing(field_of(0), ("x",))
    with pytest.raises(DomainError):
        fedder_module(RingPresentation(S), 1)


def test_fedder_colon_contains_bracket_and_multiplies_in(twisted_cubic_gf2):
    ring = twisted_cubic_gf2
    amb = RingPresentation(ring.ambient)
    a_ideal = Ideal(amb, list(ring.relations))
    for e in (1, 2):
        rep = fedder_module(ring, e)
        bracket = frobenius_power(a_ideal, rep.q)
        for g in bracket.generators:
            assert contains(rep.colon, g)
        from soclelab.groebner import minimal_generators

        for f in minimal_generators(rep.colon):
            for g in a_ideal.generators:
                assert contains(bracket, f * g)


def test_fedder_degrees_independent_of_generating_set(twisted_cubic_gf2):
    ring = twisted_cubic_gf2
    f1, f2, f3 = ring.relations
    fat = RingPresentation(ring.ambient, [f1, f2, f3, f1 + f2, f2 + f3])
    for e in (1, 2):
        assert (
            fedder_module(ring, e).generator_degrees
            == fedder_module(fat, e).generator_degrees
        )


def test_cartier_degrees_normalization(RS2, hypersurface):
    rep = fedder_module(RS2, 1)
    assert cartier_degrees(rep, 2) == (Fraction(-1),)
    rep2 = fedder_module(hypersurface, 1)
    assert cartier_degrees(rep2, 2) == (Fraction(0),)


def test_cartier_degrees_degenerate_exponent_zero(RS2):
    rep = fedder_module(RS2, 0)
    assert rep.q == 1
    assert cartier_degrees(rep, 2) == tuple(
        Fraction(d) for d in rep.generator_degrees
    )


def test_canonical_frobenius_socle_gorenstein(S2, hypersurface):
    can = canonical_ideal(hypersurface)
    assert canonical_frobenius_socle(hypersurface, can.ideal, 1) == socle_begin(
        1, ideal_as_module(Ideal(hypersurface, [S2.one]))
    )
    assert canonical_frobenius_socle(hypersurface, can.ideal, 1) == 0


def test_identity_regular_calibration():
    for p in (2, 3):
        S = PolyRing(field_of(p), ("x", "y"))
        R = RingPresentation(S)
        can = canonical_ideal(R)
        for e in (1, 2):
            holds, lhs, rhs = socle_gauge_identity(R, can, e)
            assert holds and lhs == rhs == -2


def test_identity_three_variables():
    S = PolyRing(field_of(2), ("x", "y", "z"))
    R = RingPresentation(S)
    can = canonical_ideal(R)
    for e in (1, 2):
        holds, lhs, rhs = socle_gauge_identity(R, can, e)
        assert holds and lhs == rhs == -3


def test_identity_gorenstein_hypersurfaces(hypersurface):
    can = canonical_ideal(hypersurface)
    for e in (1, 2):
        holds, lhs, rhs = socle_gauge_identity(hypersurface, can, e)
        assert holds and lhs == rhs == 0
    S = PolyRing(field_of(2), ("x", "y", "z"))
    x, y, z = S.gens()
    cubic = RingPresentation(S, [x**3 + y**2 * z + y * z**2])
    can2 = canonical_ideal(cubic)
    for e in (1, 2):
        holds, lhs, rhs = socle_gauge_identity(cubic, can2, e)
        assert holds


def test_identity_twisted_cubic(twisted_cubic_gf2):
    can = canonical_ideal(twisted_cubic_gf2)
    for e in (1, 2):
        holds, lhs, rhs = socle_gauge_identity(twisted_cubic_gf2, can, e)
        assert holds


def test_power_vs_bracket_socle_twisted_cubic(twisted_cubic_gf2):
    can = canonical_ideal(twisted_cubic_gf2)
    square = ideal_power(can.ideal, 2)
    bracket = frobenius_power(can.ideal, 2)
    s_power = socle_begin(2, ideal_as_module(square))
    s_bracket = socle_begin(2, ideal_as_module(bracket))
    assert s_power == s_bracket


def test_gauge_scan_regular(RS2):
    records, verdict = gauge_scan(RS2, 3)
    assert [r.max_alpha for r in records] == [
        Fraction(-1),
        Fraction(-3, 2),
        Fraction(-7, 4),
    ]
    assert verdict.consistent
    assert all(r.identity_holds for r in records)
    assert "measured" in verdict.note
    assert "prove" not in verdict.note


def test_gauge_scan_hypersurface(hypersurface):
    records, verdict = gauge_scan(hypersurface, 3)
    assert [r.max_alpha for r in records] == [Fraction(0)] * 3
    assert verdict.consistent
    assert verdict.witness == 0


def test_gauge_scan_twisted_cubic(twisted_cubic_gf2):
    records, verdict = gauge_scan(twisted_cubic_gf2, 3)
    assert all(r.identity_holds for r in records)
    assert verdict.consistent
    assert [r.max_alpha for r in records] == [
        Fraction(0),
        Fraction(-1, 2),
        Fraction(-1, 2),
    ]


def test_gauge_scan_char_zero_rejected():
    S = PolyRing(field_of(0), ("x",))
    with pytest.raises(DomainError):
        gauge_scan(RingPresentation(S), 2)
