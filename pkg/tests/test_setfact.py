import pytest

import oracles
from orthofact.eqrel import EqRel
from orthofact.errors import EmptySet, LimitExceeded
from orthofact.ortho import check_omp, omp_iso
from orthofact.setfact import (build_FactX, factor_pairs, factx_report, factx_vs_decompositions,
                               from_decomposition, set_section, to_decomposition)

# frozen from oracles.count_factor_pairs_vectorized / count_decompositions
FACTX_SIZES = {1: 1, 2: 2, 3: 2, 4: 8, 5: 2, 6: 122, 7: 2, 8: 1682}


@pytest.mark.parametrize("n", range(1, 6))
def test_factor_pairs_match_relational_filter(n):
    got = sorted((a.block_of, b.block_of) for a, b in factor_pairs(n))
    assert got == sorted(oracles.brute_factor_pairs(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_sizes(n):
    assert len(factor_pairs(n)) == FACTX_SIZES[n] == oracles.count_decompositions(n)


def test_order_matches_definition_on_four():
    P = build_FactX(4)
    lab = [(a.block_of, b.block_of) for a, b in P.labels]
    for i, p in enumerate(lab):
        for j, q in enumerate(lab):
            assert P.leq[i, j] == oracles.brute_factx_leq(p, q)


@pytest.mark.parametrize("n", range(1, 8))
def test_factx_is_omp(n):
    r = factx_report(n)
    assert r.ok, r.to_text()


def test_four_element_set_is_mo3():
    P = build_FactX(4)
    # bounds plus three pairs of complementary atoms
    assert factx_report(4).stats["atoms"] == 6
    assert all(P.ocomp[P.ocomp] == range(P.n))


def test_limits():
    with pytest.raises(EmptySet):
        factor_pairs(0)
    with pytest.raises(LimitExceeded):
        factor_pairs(9)


def test_bridge_round_trip():
    for pair in factor_pairs(6):
        assert from_decomposition(to_decomposition(pair)) == pair


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_bridge(n):
    cert = factx_vs_decompositions(n)
    assert cert.ok, cert.report.to_text()


def test_set_sections_on_four_and_six():
    for n in (4, 6):
        P = build_FactX(n)
        for x in range(P.n):
            cert = set_section(n, x)
            assert cert.ok, cert.report.to_text()


def test_set_section_sizes():
    t1 = EqRel.from_labels([0, 0, 1, 1, 2, 2])
    t2 = EqRel.from_labels([0, 1, 0, 1, 0, 1])
    cert = set_section(6, (t1, t2))
    # the decomposition's first kernel is t2, whose quotient has 2 elements
    assert cert.report.stats["factor_size"] == 2
    assert cert.domain.n == cert.codomain.n == 2
    assert omp_iso(cert.domain, cert.codomain) is not None
    assert check_omp(cert.domain).ok
