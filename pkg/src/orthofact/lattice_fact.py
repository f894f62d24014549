"""Complementary-pair OMPs of bounded modular or symmetric lattices.

``build_L2`` turns a lattice into the OMP of ordered complementary pairs;
``lattice_section`` certifies that the down-set of a pair ``(a, b)`` is the
pair OMP of the lattice interval ``[0, a]``, through the explicit maps
``(x, y) -> (x, y ^ a)`` and ``(u, v) -> (u, v v b)``.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import PreconditionFailed
from .order import (FinLattice, FinPoset, SymmetryClass, dual_modular_pair_matrix,
                    interval_lattice, is_modular, modular_pair_matrix, symmetry_class)
from .ortho import (OrthoPoset, check_omp, interval_omp, omp_iso_violations)
from .report import Report, SectionCertificate


class Mode(enum.Enum):
    MODULAR = "modular"
    SYMMETRIC = "symmetric"


def complementary_pairs(L: FinLattice, mode: Mode = Mode.MODULAR) -> list[tuple[int, int]]:
    """Admissible ordered pairs, sorted lexicographically."""
    comp = (L.meet == L.bot) & (L.join == L.top)
    if mode is Mode.SYMMETRIC:
        M, Ms = modular_pair_matrix(L), dual_modular_pair_matrix(L)
        comp &= M & M.T & Ms & Ms.T
    return [(int(x), int(y)) for x, y in np.argwhere(comp)]


def _require_mode(L: FinLattice, mode: Mode) -> None:
    if mode is Mode.MODULAR:
        if not is_modular(L):
            raise PreconditionFailed("modular mode needs a modular lattice")
    else:
        cls = symmetry_class(L)
        if cls not in (SymmetryClass.MODULAR, SymmetryClass.SYMMETRIC):
            raise PreconditionFailed(f"symmetric mode needs a symmetric lattice, got {cls.value}")


def build_L2(L: FinLattice, mode: Mode | str = Mode.MODULAR) -> OrthoPoset:
    """The OMP of complementary pairs; labels are the ``(x1, x2)`` pairs."""
    mode = Mode(mode)
    _require_mode(L, mode)
    return _pair_omp(L, complementary_pairs(L, mode))


def _pair_omp(L: FinLattice, pairs: list[tuple[int, int]]) -> OrthoPoset:
    arr = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    x1, x2 = arr[:, 0], arr[:, 1]
    # (x1, x2) <= (y1, y2) iff x1 <= y1 and y2 <= x2
    leq = L.leq[np.ix_(x1, x1)] & L.leq[np.ix_(x2, x2)].T
    pos = {p: i for i, p in enumerate(pairs)}
    ocomp = [pos[(y, x)] for x, y in pairs]
    return OrthoPoset(FinPoset(leq, tuple(pairs)), ocomp,
                      pos[(L.bot, L.top)], pos[(L.top, L.bot)])


def lattice_section(L: FinLattice, pair: tuple[int, int],
                    mode: Mode | str = Mode.MODULAR) -> SectionCertificate:
    """Build and check both maps between ``pair``'s down-set and ``(a-down)^(2)``."""
    mode = Mode(mode)
    a, b = (int(v) for v in pair)
    _require_mode(L, mode)
    if (a, b) not in complementary_pairs(L, mode):
        raise PreconditionFailed(f"{(a, b)} is not an admissible complementary pair")

    big = build_L2(L, mode)
    p = big.index((a, b))
    down, down_index = interval_omp(big, p)

    sub, sub_index = interval_lattice(L, L.bot, a)
    small = _pair_omp(sub, complementary_pairs(sub, mode))
    # ambient ids of the pairs living in a-down
    small_pairs = [(sub_index[u], sub_index[v]) for u, v in small.labels]
    small_pos = {q: i for i, q in enumerate(small_pairs)}
    down_pos = {big.labels[j]: i for i, j in enumerate(down_index)}

    r = Report(f"lattice section at {(a, b)} ({mode.value})")
    r.stats.update(interval_size=down.n, target_size=small.n, lattice_size=L.n)

    gamma, phi = {}, {}
    r.require("gamma_well_defined")
    for i, j in enumerate(down_index):
        x, y = big.labels[j]
        image = (x, int(L.meet[y, a]))
        if image in small_pos:
            gamma[i] = small_pos[image]
        else:
            r.fail("gamma_well_defined", ((x, y), image))
    r.require("phi_well_defined")
    for k, (u, v) in enumerate(small_pairs):
        image = (u, int(L.join[v, b]))
        if image in down_pos:
            phi[k] = down_pos[image]
        else:
            r.fail("phi_well_defined", ((u, v), image))

    r.require("mutually_inverse")
    for i, k in gamma.items():
        if phi.get(k) != i:
            r.fail("mutually_inverse", ("phi(gamma)", big.labels[down_index[i]]))
    for k, i in phi.items():
        if gamma.get(i) != k:
            r.fail("mutually_inverse", ("gamma(phi)", small_pairs[k]))

    r.require("order_preserving")
    for i in gamma:
        for i2 in gamma:
            if down.leq[i, i2] != small.leq[gamma[i], gamma[i2]]:
                r.fail("order_preserving", ("gamma", i, i2))
    for k in phi:
        for k2 in phi:
            if small.leq[k, k2] != down.leq[phi[k], phi[k2]]:
                r.fail("order_preserving", ("phi", k, k2))

    # gamma(q#) = gamma(q)' and phi(w') = phi(w)#
    r.require("ortho_compatible")
    for i, k in gamma.items():
        img = gamma.get(int(down.ocomp[i]))
        if img != small.ocomp[k]:
            r.fail("ortho_compatible", ("gamma", big.labels[down_index[i]]))
    for k, i in phi.items():
        img = phi.get(int(small.ocomp[k]))
        if img != down.ocomp[i]:
            r.fail("ortho_compatible", ("phi", small_pairs[k]))

    # interval complement matches (x, y)' ^ (a, b) = (y ^ a, x v b)
    r.require("interval_complement_formula")
    for i, j in enumerate(down_index):
        x, y = big.labels[j]
        expect = (int(L.meet[y, a]), int(L.join[x, b]))
        got = big.labels[down_index[down.ocomp[i]]]
        if got != expect:
            r.fail("interval_complement_formula", ((x, y), got, expect))

    if r.ok:
        f = [gamma[i] for i in range(down.n)]
        bad = omp_iso_violations(down, small, f)
        r.check("omp_isomorphism", not bad, bad[:1])
    return SectionCertificate(r, down, small, gamma, phi, down_index)


def l2_report(L: FinLattice, mode: Mode | str = Mode.MODULAR) -> Report:
    mode = Mode(mode)
    P = build_L2(L, mode)
    r = check_omp(P, Report(f"L2 of {L.n}-element lattice ({mode.value})"))
    r.stats["pairs"] = P.n
    return r
