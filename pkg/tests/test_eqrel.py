import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from orthofact.eqrel import (EqRel, canonical, partitions, permute, permute_matrix, refinement_matrix,
                             rel_compose, rel_join_is_total, rel_meet, uniform_partitions)


@pytest.mark.parametrize("n", range(0, 8))
def test_partition_counts(n):
    expected = [1, 1, 2, 5, 15, 52, 203, 877][n]
    got = list(partitions(n))
    assert len(got) == len(set(got)) == expected
    if n:
        assert got == sorted(got)
        assert sorted(p.block_of for p in got) == sorted(oracles.set_partitions(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_uniform_partitions(n):
    for k in range(1, n + 1):
        got = set(uniform_partitions(n, k))
        want = {p for p in partitions(n) if p.k == k and p.is_uniform()}
        assert got == want


def test_string_and_blocks():
    r = EqRel.from_blocks(4, [[0, 1], [2, 3]])
    assert str(r) == "01|23"
    assert r.k == 2
    assert r.refines(EqRel.nabla(4))
    assert EqRel.delta(4).refines(r)
    with pytest.raises(ValueError):
        EqRel((1, 0))


def test_matrices_match_relational_definitions():
    parts = list(partitions(4))
    ref = refinement_matrix(parts)
    per = permute_matrix(parts)
    for (i, p), (j, q) in itertools.product(enumerate(parts), repeat=2):
        a, b = oracles.as_pairs(p.block_of), oracles.as_pairs(q.block_of)
        assert ref[i, j] == (a <= b)
        assert per[i, j] == oracles.brute_permute(a, b)
        assert permute(p, q) == per[i, j]


labellings = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                        st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))


@given(labellings)
def test_meet_and_compose(pair):
    r, s = (EqRel(canonical(x)) for x in pair)
    a, b = oracles.as_pairs(r.block_of), oracles.as_pairs(s.block_of)
    assert oracles.as_pairs(rel_meet(r, s).block_of) == a & b
    comp = rel_compose(r, s)
    assert {(int(x), int(y)) for x, y in zip(*comp.nonzero())} == oracles.compose(a, b)
    assert rel_join_is_total(r, s) == (len(oracles.compose(a, b)) == r.n ** 2)
