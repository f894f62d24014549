"""Factor pairs of a finite set and the orthomodular poset they form.

A factor pair is an ordered pair of equivalence relations with trivial
intersection whose composite relates everything.  ``build_FactX`` orders
them by ``(t1, t2) <= (p1, p2)`` iff ``t1`` refines ``p1``, ``p2`` refines
``t2`` and every pair among the four relations permutes.

The bridge to decompositions sends ``(t1, t2)`` to the decomposition with
kernel pair ``(t2, t1)``; see :data:`BRIDGE_SWAP`.
"""

from __future__ import annotations

import numpy as np

from .eqrel import EqRel, divisors, permute_matrix, refinement_matrix
from .errors import EmptySet, LimitExceeded
from .finset_cat import Decomposition, _product_tuples, cat_section, decomposition_oa
from .order import FinPoset
from .ortho import (OrthoPoset, check_omp, interval_omp, oa_to_orthoposet,
                    omp_iso, omp_iso_violations, omp_to_oa)
from .report import Report, SectionCertificate

DEFAULT_LIMIT = 8

#: (t1, t2) corresponds to the decomposition [f1, f2] with ker f1 = t2, ker f2 = t1
BRIDGE_SWAP = True


def _check(n: int, limit: int) -> None:
    if n < 1:
        raise EmptySet("Fact X needs a non-empty set")
    if n > limit:
        raise LimitExceeded(f"set size {n} exceeds the limit {limit}")


def factor_pairs(n: int, limit: int = DEFAULT_LIMIT) -> list[tuple[EqRel, EqRel]]:
    """All factor pairs on ``{0..n-1}``, ordered lexicographically by block labellings.

    Only partitions with equal-sized blocks can take part, and the pair must
    map the set bijectively onto the product of its block sets.
    """
    _check(n, limit)
    out = []
    for k in divisors(n):
        out.extend(_product_tuples(n, (k, n // k)))
    return sorted(out)


def to_decomposition(pair: tuple[EqRel, EqRel]) -> Decomposition:
    t1, t2 = pair
    return Decomposition(t2, t1) if BRIDGE_SWAP else Decomposition(t1, t2)


def from_decomposition(d: Decomposition) -> tuple[EqRel, EqRel]:
    return (d.kernel2, d.kernel1) if BRIDGE_SWAP else (d.kernel1, d.kernel2)


def build_FactX(n: int, limit: int = DEFAULT_LIMIT) -> OrthoPoset:
    """Fact X for an ``n``-element set; labels are the factor pairs."""
    pairs = factor_pairs(n, limit)
    parts = sorted({p for pr in pairs for p in pr})
    pid = {p: i for i, p in enumerate(parts)}
    i1 = np.array([pid[a] for a, _ in pairs], dtype=np.int64)
    i2 = np.array([pid[b] for _, b in pairs], dtype=np.int64)
    ref = refinement_matrix(parts)
    per = permute_matrix(parts)
    leq = ref[i1[:, None], i1[None, :]] & ref[i2[None, :], i2[:, None]]
    # every pair among t1, t2, p1, p2 permutes
    for u, v in ((i1, i1), (i1, i2), (i2, i1), (i2, i2)):
        leq &= per[u[:, None], v[None, :]]
    own = per[i1, i2]
    leq &= own[:, None] & own[None, :]
    pos = {p: i for i, p in enumerate(pairs)}
    ocomp = [pos[(b, a)] for a, b in pairs]
    bot = pos[(EqRel.delta(n), EqRel.nabla(n))]
    top = pos[(EqRel.nabla(n), EqRel.delta(n))]
    return OrthoPoset(FinPoset(leq, tuple(pairs)), ocomp, bot, top)


def factx_report(n: int, limit: int = DEFAULT_LIMIT) -> Report:
    P = build_FactX(n, limit)
    r = check_omp(P, Report(f"Fact X for the {n}-element set"))
    atoms = np.flatnonzero(P.downsize == 2)
    r.stats.update(carrier=P.n, atoms=int(atoms.size))
    return r


def factx_vs_decompositions(n: int, limit: int = DEFAULT_LIMIT) -> SectionCertificate:
    """Match Fact X with D(X) element by element and compare every structure map."""
    F = build_FactX(n, limit)
    D = decomposition_oa(n, limit)
    r = Report(f"Fact X vs D(X) for the {n}-element set")
    r.stats.update(factx_size=F.n, decompositions=len(D))

    fwd = {}
    r.require("bijection")
    for i, pr in enumerate(F.labels):
        d = to_decomposition(pr)
        if d in D.index:
            fwd[i] = D.index[d]
        else:
            r.fail("bijection", ("no decomposition for", [p.block_of for p in pr]))
    if len(set(fwd.values())) != len(D) or len(fwd) != F.n:
        r.fail("bijection", ("sizes", F.n, len(D)))
    bwd = {v: k for k, v in fwd.items()}

    if r.ok:
        f = np.array([fwd[i] for i in range(F.n)], dtype=np.int64)
        r.check("bounds", f[F.bot] == D.zero and f[F.top] == D.one,
                (int(f[F.bot]), int(f[F.top])))
        Pd, is_omp = oa_to_orthoposet(D.oa, check=False)
        r.check("induced_orthoposet_is_omp", is_omp, "some sum is not a least upper bound")
        bad = np.argwhere(F.leq != Pd.leq[np.ix_(f, f)])
        r.check("order_agrees", not bad.size, bad[:1].tolist())
        bad = np.flatnonzero(f[F.ocomp] != Pd.ocomp[f])
        r.check("ocomp_agrees", not bad.size, bad[:1].tolist())
        A = omp_to_oa(F, check=False)
        image = np.where(A.defined, f[np.maximum(A.table, 0)], -1)
        bad = np.argwhere(image != D.oa.table[np.ix_(f, f)])
        r.check("oplus_agrees", not bad.size, bad[:1].tolist())
    return SectionCertificate(r, F, D, fwd, bwd)


def set_section(n: int, element: int | tuple[EqRel, EqRel],
                limit: int = DEFAULT_LIMIT, search_limit: int = 24) -> SectionCertificate:
    """Down-set of a factor pair in Fact X against Fact X of the matching factor.

    The map is transported: factor pair -> decomposition -> the categorical
    section map -> decomposition of the factor -> factor pair.
    """
    F = build_FactX(n, limit)
    x = F.index(element) if isinstance(element, tuple) else int(element)
    t1, t2 = F.labels[x]
    h = to_decomposition((t1, t2))
    k = h.kernel1.k
    down, down_index = interval_omp(F, x)
    Fk = build_FactX(k, max(limit, k))
    cert = cat_section(n, h, limit)
    D = decomposition_oa(n, limit)
    Dk = decomposition_oa(k, max(limit, k))

    r = Report(f"set section at {t1}, {t2}")
    r.merge(cert.report, prefix="cat_")
    r.stats.update(interval_size=down.n, target_size=Fk.n, factor_size=k)
    local = {j: i for i, j in enumerate(cert.domain_index)}
    gamma = {}
    r.require("transport_defined")
    for i, j in enumerate(down_index):
        dj = D.index[to_decomposition(F.labels[j])]
        t = cert.gamma.get(local.get(dj, -1))
        if t is None:
            r.fail("transport_defined", (i,))
            continue
        gamma[i] = Fk.index(from_decomposition(Dk.decompositions[t]))
    if len(gamma) == down.n:
        f = [gamma[i] for i in range(down.n)]
        bad = omp_iso_violations(down, Fk, f)
        r.check("omp_isomorphism", not bad, bad[:1])
        if down.n <= search_limit:
            r.check("search_agrees", omp_iso(down, Fk, search_limit) is not None,
                    "generic search found no isomorphism")
    phi = {t: i for i, t in gamma.items()}
    return SectionCertificate(r, down, Fk, gamma, phi, down_index)

