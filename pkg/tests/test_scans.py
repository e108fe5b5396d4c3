import pytest

from soclelab.errors import HypothesisError
from soclelab.fields import field_of
from soclelab.groebner import Ideal
from soclelab.localcoh import lc_end, socle_begin
from soclelab.modules import quotient_module
from soclelab.poly import NEG_INF, PolyRing
from soclelab.rings import RingPresentation
from soclelab.scans import criterion_check, lemma37_scan, scan_powers


@pytest.fixture(scope="module")
def setting():
    S = PolyRing(field_of(101), ("x", "y"))
    return S, RingPresentation(S)


def test_scan_powers_truncation_family(setting):
    S, R = setting
    x, y = S.gens()
    msquare = Ideal(R, [x**2, x * y, y**2])
    rows, summary = scan_powers(R, msquare, 4)
    values = {(r.t, r.j): r.socle_beg for r in rows}
    assert [values[(t, 0)] for t in range(1, 5)] == [1, 3, 5, 7]
    assert summary.witnesses["c_0"] is not None
    assert any("measured" in note for note in summary.notes)


def test_scan_powers_principal(setting):
    S, R = setting
    x, _ = S.gens()
    rows, _ = scan_powers(R, Ideal(R, [x]), 3)
    ends = {(r.t, r.j): r.lc_end for r in rows}
    # H^1 of S/(x^t) tops out at t - 2 (duality on the cyclic resolution).
    assert [ends[(t, 1)] for t in (1, 2, 3)] == [-1, 0, 1]
    assert all(ends[(t, 0)] == NEG_INF for t in (1, 2, 3))


def test_scan_rows_match_direct_calls(setting):
    S, R = setting
    x, y = S.gens()
    ideal = Ideal(R, [x**2, x * y])
    rows, _ = scan_powers(R, ideal, 1)
    module = quotient_module(R, list(ideal.generators))
    for row in rows:
        assert row.socle_beg == socle_begin(row.j, module)
        assert row.lc_end == lc_end(row.j, module)


def test_scan_powers_oracle_mode(setting):
    S, R = setting
    x, y = S.gens()
    rows, _ = scan_powers(R, Ideal(R, [x**2, x * y, y**2]), 2, oracle=True)
    assert all(r.oracle_checked for r in rows)


def test_criterion_check_passes_on_edge_case(setting):
    S, R = setting
    x, y = S.gens()
    rows, verdicts, d = criterion_check(R, Ideal(R, [x**2, x * y, y**2]), 2)
    assert d == 0
    assert all(v.passed for v in verdicts)
    assert all(v.vacuous for v in verdicts)


def test_criterion_check_non_vacuous(setting):
    S, R = setting
    x, y = S.gens()
    rows, verdicts, d = criterion_check(R, Ideal(R, [x**2, x * y]), 3)
    assert d == 1
    assert all(v.passed for v in verdicts)
    assert not any(v.vacuous for v in verdicts)
    by_t = {v.t: v for v in verdicts}
    assert by_t[1].c_prime == 1


def test_criterion_rows_shape(setting):
    S, R = setting
    x, y = S.gens()
    rows, verdicts, d = criterion_check(R, Ideal(R, [x**2, x * y]), 2)
    for row in rows:
        if row.j < d:
            assert len(row.ext_k) == d + 2
        else:
            assert row.ext_k == ()


def test_lemma37_principal(setting):
    S, R = setting
    x, _ = S.gens()
    rows, summary = lemma37_scan(R, Ideal(R, [x]), 3)
    assert [r.socle_beg_quotient for r in rows] == [-1, 0, 1]
    assert [r.socle_beg_ideal for r in rows] == [-1, 0, 1]
    assert all(r.difference == 0 for r in rows)
    assert summary.witnesses["equivalent_within_range"] is True


def test_lemma37_regular_base_trivial_hypothesis(setting):
    S, R = setting
    x, y = S.gens()
    rows, summary = lemma37_scan(R, Ideal(R, [x**2, x * y, y**2]), 1)
    module = quotient_module(R, [x**2, x * y, y**2])
    assert rows[0].socle_beg_quotient == socle_begin(1, module)
    assert rows[0].socle_beg_ideal is not None


def test_lemma37_refuses_infinite_h_lower():
    S = PolyRing(field_of(101), ("x", "y", "z"))
    x, y, z = S.gens()
    R = RingPresentation(S, [x * y, x * z])
    with pytest.raises(HypothesisError):
        lemma37_scan(R, Ideal(R, [y]), 2)


def test_lemma37_accepts_hypersurface():
    S = PolyRing(field_of(101), ("x", "y"))
    x, y = S.gens()
    R = RingPresentation(S, [x * y])
    rows, summary = lemma37_scan(R, Ideal(R, [x]), 2)
    assert len(rows) == 2
