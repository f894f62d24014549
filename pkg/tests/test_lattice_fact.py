import pytest

from orthofact.errors import PreconditionFailed
from orthofact.lattice_fact import Mode, build_L2, complementary_pairs, l2_report, lattice_section
from orthofact.order import gen_boolean, gen_m3, gen_mo, gen_n5, gen_subspace_lattice
from orthofact.ortho import check_omp


def _brute_pairs(L):
    return sorted((a, b) for a in range(L.n) for b in range(L.n)
                  if L.meet[a, b] == L.bot and L.join[a, b] == L.top)


@pytest.mark.parametrize("L", [gen_m3(), gen_boolean(2), gen_mo(3), gen_subspace_lattice(2, 2)],
                         ids=["m3", "2^2", "mo3", "gf2^2"])
def test_complementary_pairs_match_brute_force(L):
    assert complementary_pairs(L) == _brute_pairs(L)


def test_m3_pairs_and_L2():
    L = gen_m3()
    # bounds swap, plus each ordered pair of distinct atoms
    assert len(complementary_pairs(L)) == 2 + 6
    P = build_L2(L)
    assert P.n == 8
    assert check_omp(P).ok


@pytest.mark.parametrize("L,size", [(gen_subspace_lattice(2, 3), 58), (gen_mo(4), 58),
                                    (gen_boolean(3), 8)])
def test_L2_sizes(L, size):
    assert build_L2(L).n == size


def test_pair_order_and_complement():
    L = gen_m3()
    P = build_L2(L)
    lab = P.labels
    for i, (x1, x2) in enumerate(lab):
        assert lab[P.ocomp[i]] == (x2, x1)
        for j, (y1, y2) in enumerate(lab):
            assert P.leq[i, j] == (bool(L.leq[x1, y1]) and bool(L.leq[y2, x2]))


def test_sections_on_m3():
    L = gen_m3()
    for pair in complementary_pairs(L):
        cert = lattice_section(L, pair)
        assert cert.ok, cert.report.to_text()
        assert set(cert.gamma) == set(cert.phi.values())


def test_n5_is_refused():
    with pytest.raises(PreconditionFailed):
        build_L2(gen_n5(), Mode.MODULAR)
    with pytest.raises(PreconditionFailed):
        build_L2(gen_n5(), "symmetric")


def test_section_rejects_non_complements():
    with pytest.raises(PreconditionFailed):
        lattice_section(gen_m3(), (1, 1))


def test_symmetric_mode_agrees_on_modular_lattices():
    for L in (gen_m3(), gen_mo(2), gen_boolean(2)):
        assert build_L2(L, "symmetric").same_as(build_L2(L, "modular"))
        assert l2_report(L, "symmetric").ok
