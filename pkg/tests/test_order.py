import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from orthofact.errors import BadInterval, InvalidPoset, NotALattice, NotBounded
from orthofact.order import (FinPoset, SymmetryClass, build_lattice, dual_modular_pair,
                             find_modular_violation, gen_boolean, gen_chain, gen_m3, gen_mo,
                             gen_n5, gen_subspace_lattice, interval_lattice, is_modular,
                             lattice_from_order, modular_pair, modular_pair_witness,
                             symmetry_class, transitive_closure)

SMALL = [gen_chain(3), gen_boolean(2), gen_boolean(3), gen_m3(), gen_n5(), gen_mo(2),
         gen_subspace_lattice(2, 2)]


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_meet_join_match_brute_force(L):
    leq = L.leq.tolist()
    for x in range(L.n):
        for y in range(L.n):
            assert L.meet[x, y] == oracles.brute_glb(leq, x, y)
            assert L.join[x, y] == oracles.brute_lub(leq, x, y)


@pytest.mark.parametrize("L", SMALL, ids=lambda L: f"n{L.n}")
def test_modularity_matches_brute_force(L):
    assert is_modular(L) == oracles.brute_is_modular(L.leq.tolist())


@pytest.mark.parametrize("q,d,count", [(2, 2, 5), (2, 3, 16), (3, 2, 6)])
def test_subspace_lattice_sizes(q, d, count):
    assert oracles.brute_subspace_count(q, d) == count
    L = gen_subspace_lattice(q, d)
    assert L.n == count
    assert is_modular(L)


def test_generator_sizes():
    assert [gen_boolean(k).n for k in range(5)] == [1, 2, 4, 8, 16]
    assert [gen_mo(k).n for k in range(1, 5)] == [4, 6, 8, 10]
    assert gen_m3().n == 5 and gen_n5().n == 5
    assert gen_chain(4).n == 5


def test_n5_failure_witness():
    L = gen_n5()
    assert not is_modular(L)
    a, b, c = find_modular_violation(L)
    assert L.leq[c, b]
    assert L.join[c, L.meet[a, b]] != L.meet[L.join[c, a], b]
    # short atom 3 against the upper long element 2, witnessed by 1
    assert not modular_pair(L, 3, 2)
    assert modular_pair_witness(L, 3, 2) == 1
    assert symmetry_class(L) is SymmetryClass.NONE


def test_modular_lattices_have_all_pairs():
    for L in (gen_m3(), gen_boolean(3), gen_mo(3)):
        for a in range(L.n):
            for b in range(L.n):
                assert modular_pair(L, a, b) and dual_modular_pair(L, a, b)
        assert symmetry_class(L) is SymmetryClass.MODULAR


def test_interval_lattice():
    L = gen_boolean(3)
    sub, idx = interval_lattice(L, 0, 6)
    assert sub.n == 4 and set(idx) == {0, 2, 4, 6}
    with pytest.raises(BadInterval):
        interval_lattice(L, 1, 6)


def test_invalid_inputs():
    with pytest.raises(InvalidPoset, match=r"\(0, 1\)|\[0, 1\]|0.*1"):
        FinPoset.from_relation(2, [(0, 1), (1, 0)])
    # two maximal elements: no top
    with pytest.raises(NotBounded):
        build_lattice(FinPoset.from_relation(3, [(0, 1), (0, 2)]))
    # 0,1 < 2,3 < 4: no least upper bound of 0 and 1
    pairs = [(5, 0), (5, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    with pytest.raises(NotALattice):
        build_lattice(FinPoset.from_relation(6, pairs))


@st.composite
def random_orders(draw):
    n = draw(st.integers(1, 7))
    m = np.zeros((n, n), dtype=bool)
    # upper triangular relations are always acyclic
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = draw(st.booleans())
    return transitive_closure(m | np.eye(n, dtype=bool))


@settings(max_examples=60, deadline=None)
@given(random_orders())
def test_bounded_random_orders_give_lattice_tables(leq):
    n = len(leq)
    # add a fresh bottom and top so only the lattice property is in question
    big = np.zeros((n + 2, n + 2), dtype=bool)
    big[1:-1, 1:-1] = leq
    big[0, :] = True
    big[:, -1] = True
    np.fill_diagonal(big, True)
    rows = big.tolist()
    lattice = all(oracles.brute_glb(rows, x, y) is not None and oracles.brute_lub(rows, x, y) is not None
                  for x in range(n + 2) for y in range(n + 2))
    if not lattice:
        with pytest.raises(NotALattice):
            lattice_from_order(big)
        return
    L = lattice_from_order(big)
    for x in range(n + 2):
        for y in range(n + 2):
            assert L.meet[x, y] == oracles.brute_glb(rows, x, y)
            assert L.join[x, y] == oracles.brute_lub(rows, x, y)
