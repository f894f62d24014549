import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from orthofact.eqrel import EqRel
from orthofact.errors import EmptySet, LimitExceeded, PreconditionFailed
from orthofact.finset_cat import (Decomposition, FinMap, PushoutSquare, cat_section, claims_check,
                                  compose, da_report, decomposition_oa, enumerate_D,
                                  honesty_spot_check, is_disjoint_product, is_pushout, oplus, pair,
                                  projection, pushout, terminal, ternary_decompositions)
from orthofact.ortho import check_oa

D_SIZES = {1: 1, 2: 2, 3: 2, 4: 8, 5: 2, 6: 122, 7: 2, 8: 1682}
TERNARY_COUNTS = {1: 1, 2: 3, 3: 3, 4: 21, 5: 3, 6: 363, 7: 3, 8: 10083}


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_counts(n):
    assert len(enumerate_D(n)) == D_SIZES[n] == oracles.count_decompositions(n, 2)
    assert len(ternary_decompositions(n)) == TERNARY_COUNTS[n] == oracles.count_decompositions(n, 3)


def test_enumeration_order_is_deterministic():
    a = enumerate_D(6)
    assert a == enumerate_D(6)
    assert a[0] == Decomposition(EqRel.nabla(6), EqRel.delta(6))
    assert a[-1] == Decomposition(EqRel.delta(6), EqRel.nabla(6))


maps = st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, 4), st.integers(1, 4))).flatmap(lambda t: st.tuples(
        st.just(t), st.lists(st.integers(0, t[1] - 1), min_size=t[0], max_size=t[0]),
        st.lists(st.integers(0, t[2] - 1), min_size=t[0], max_size=t[0])))


@settings(max_examples=80, deadline=None)
@given(maps)
def test_pushout_size_matches_naive_merge(data):
    (n, m, k), f, g = data
    size, lb, lc = pushout(FinMap(n, m, f), FinMap(n, k, g))
    assert size == oracles.brute_pushout_size(n, f, m, g, k)
    assert compose(lb, FinMap(n, m, f)) == compose(lc, FinMap(n, k, g))
    assert is_pushout(PushoutSquare(FinMap(n, m, f), FinMap(n, k, g), lb, lc))


def test_non_pushout_square():
    f = FinMap(2, 2, (0, 1))
    g = terminal(2)
    # collapsing everything to one point commutes but loses nothing only if the pushout is a point
    sq = PushoutSquare(f, g, terminal(2), terminal(1))
    assert is_pushout(sq)
    sq = PushoutSquare(f, f, FinMap(2, 3, (0, 1)), FinMap(2, 3, (0, 1)))
    assert not is_pushout(sq)


def test_pair_and_projection():
    p = projection([2, 3], 1)
    assert p.image == (0, 1, 2, 0, 1, 2)
    assert pair(projection([2, 3], 0), p).is_bijective()
    with pytest.raises(EmptySet):
        pushout(FinMap(0, 0, ()), FinMap(0, 0, ()))


@pytest.mark.parametrize("n", range(1, 9))
def test_D_is_oa(n):
    r = da_report(n)
    assert r.ok, r.to_text()


def test_table_and_search_routes_agree():
    D = decomposition_oa(6)
    rng = random.Random(0)
    idx = list(range(len(D)))
    for _ in range(400):
        i, j = rng.choice(idx), rng.choice(idx)
        s = oplus(D.decompositions[i], D.decompositions[j])
        t = D.oa.oplus(i, j)
        assert (s is None) == (t is None)
        if s is not None:
            assert D.index[s] == t


def test_self_sum_undefined():
    D = decomposition_oa(4)
    for i in range(len(D)):
        assert (D.oa.oplus(i, i) is not None) == (i == D.zero)


@pytest.mark.parametrize("n", [4, 6])
def test_honesty_exhaustive(n):
    r = honesty_spot_check(n)
    assert r.ok and r.stats["mode_exhaustive"] == 1


def test_honesty_sampling_needs_seed():
    with pytest.raises(PreconditionFailed):
        honesty_spot_check(12, samples=5)
    a = honesty_spot_check(12, samples=10, seed=7)
    b = honesty_spot_check(12, samples=10, seed=7)
    assert a.ok and a.to_json() == b.to_json() and a.seed == 7


def test_disjointness():
    for d in enumerate_D(6):
        assert is_disjoint_product(d)


@pytest.mark.parametrize("n", range(1, 7))
def test_claims_green(n):
    assert claims_check(n).ok


def test_claims_catch_injected_violation():
    # (p, q) with q bijective but p not a point: not a real product diagram
    p, q = EqRel.from_labels([0, 0, 1, 1]), EqRel.delta(4)
    r = claims_check(4, binaries=[(p, q)], ternaries=[(p, p, q)])
    assert set(r.failures) == {"iso_leg_forces_point", "repeated_leg_forces_point"}
    assert r.witnesses["iso_leg_forces_point"] == [[list(p.block_of), list(q.block_of)]]


def test_cat_sections_all_green_on_six():
    D = decomposition_oa(6)
    for h in range(len(D)):
        cert = cat_section(6, h)
        assert cert.ok, cert.report.to_text()


def test_cat_section_four_by_two():
    h = Decomposition(EqRel.from_labels([0, 1, 2, 3, 0, 1, 2, 3]), EqRel.from_labels([0, 0, 0, 0, 1, 1, 1, 1]))
    cert = cat_section(8, h)
    assert cert.ok
    assert cert.report.stats["interval_size"] == 8 == len(enumerate_D(4))
    assert cert.report.stats["target_orthoposet_is_omp"] == 1


def test_limit():
    with pytest.raises(LimitExceeded):
        enumerate_D(9)
    assert check_oa(decomposition_oa(9, limit=9).oa).ok
