import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orthofact.errors import MissingMeet, SizeLimit
from orthofact.ortho import (OrthoAlgebra, boolean_omp, check_oa, check_omp, check_orthoposet,
                             hexagon_orthoposet, interval_oa, interval_oa_leaks, interval_omp,
                             mo_omp, oa_iso, oa_to_orthoposet, omp_iso, omp_to_oa,
                             wright_triangle_oa)
from orthofact.report import Report


def test_boolean_and_mo_are_omps():
    for P in (boolean_omp(0), boolean_omp(1), boolean_omp(3), mo_omp(1), mo_omp(3)):
        r = check_omp(P)
        assert r.ok, r.to_text()


def test_hexagon_is_orthoposet_but_not_omp():
    P = hexagon_orthoposet()
    assert check_orthoposet(P).ok
    r = check_omp(P)
    assert r.failures == ["orthomodular_law"]
    assert r.witnesses["orthomodular_law"]


def test_broken_ocomp_is_caught_with_witness():
    P = boolean_omp(2)
    bad = type(P)(P.poset, [3, 1, 2, 0], P.bot, P.top)
    r = check_orthoposet(bad)
    assert not r.ok
    for name in r.failures:
        assert r.witnesses[name]


def test_omp_oa_round_trip():
    for P in (boolean_omp(3), mo_omp(2), mo_omp(4)):
        A = omp_to_oa(P)
        assert check_oa(A).ok
        back, is_omp = oa_to_orthoposet(A)
        assert is_omp
        assert back.same_as(P)


def test_wright_triangle_is_oa_but_not_omp():
    A = wright_triangle_oa()
    assert A.n == 14
    assert check_oa(A).ok
    _, is_omp = oa_to_orthoposet(A)
    assert not is_omp


def test_interval_oa_filter_matters_on_wright_triangle():
    A = wright_triangle_oa()
    # the complement of e: the restricted sum a + c lands outside the down-set
    leaks = interval_oa_leaks(A, 11)
    assert (1, 3, 8) in leaks
    B, idx = interval_oa(A, 11)
    assert check_oa(B).ok
    assert all(0 <= t < B.n for t in B.table[B.defined])


def test_interval_omp():
    P = boolean_omp(3)
    Q, idx = interval_omp(P, 6)
    assert Q.n == 4 and check_omp(Q).ok
    assert omp_iso(Q, boolean_omp(2)) is not None


def test_interval_of_hexagon_breaks_without_orthomodularity():
    P = hexagon_orthoposet()
    # [0, b'] is the chain 0 < a < b' and a' ^ b' = 0, so a# = 0 is not period two
    Q, idx = interval_omp(P, 4)
    assert idx == (0, 1, 4)
    r = check_orthoposet(Q)
    assert "period_two" in r.failures
    for a in (0, 1, 2, 5):
        try:
            Q, _ = interval_omp(P, a)
        except MissingMeet as exc:
            assert exc.witness is not None
            continue
        assert check_orthoposet(Q).ok


def test_iso_search():
    assert omp_iso(boolean_omp(2), mo_omp(1)) is not None
    assert omp_iso(boolean_omp(3), mo_omp(3)) is None
    A, B = omp_to_oa(boolean_omp(2)), omp_to_oa(mo_omp(1))
    f = oa_iso(A, B)
    assert f is not None
    for a in range(A.n):
        for b in range(A.n):
            s = A.oplus(a, b)
            t = B.oplus(f[a], f[b])
            assert (s is None) == (t is None)
            if s is not None:
                assert f[s] == t
    with pytest.raises(SizeLimit):
        omp_iso(boolean_omp(5), boolean_omp(5), limit=24)


def test_oa_checks_catch_bad_tables():
    # 0, a, a', 1 with a + a defined
    triples = [(0, x, x) for x in range(4)] + [(x, 0, x) for x in range(4)]
    triples += [(1, 2, 3), (2, 1, 3), (1, 1, 3)]
    A = OrthoAlgebra.from_triples(4, 0, 3, sorted(set(triples)))
    r = check_oa(A)
    assert not r.ok
    assert "self_sum_is_zero" in r.failures or "unique_complement" in r.failures


def test_report_witnesses_for_every_failure():
    r = check_oa(wright_triangle_oa(), Report("x"))
    assert r.ok
    r = check_omp(hexagon_orthoposet())
    for name in r.failures:
        assert r.witnesses.get(name)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.data())
def test_boolean_cancellation_and_intervals(k, data):
    P = boolean_omp(k)
    A = omp_to_oa(P)
    a = data.draw(st.integers(0, P.n - 1))
    # a + b = a + c implies b = c
    row = A.table[a]
    vals = row[row >= 0]
    assert len(vals) == len(set(vals.tolist()))
    Q, idx = interval_omp(P, a)
    assert Q.n == 2 ** bin(a).count("1")
    assert check_omp(Q).ok
    np.testing.assert_array_equal(np.sort(idx), np.flatnonzero(P.leq[:, a]))
