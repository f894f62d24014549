"""Product decompositions of non-empty finite sets.

A binary decomposition ``[f1, f2]`` of ``A`` is stored by the kernels of
its two legs; the legs themselves are the canonical quotient maps onto the
block indices.  Kernels are complete invariants of surjections up to an
isomorphism of the codomain, so these values *are* the equivalence classes
of product diagrams.

The partial sum ``d + e`` is defined when a ternary decomposition
``[c1, c2, c3]`` has ``d = [c1, (c2, c3)]`` and ``e = [c2, (c1, c3)]``; the
sum is then ``[(c1, c2), c3]``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .eqrel import EqRel, divisors, rel_meet, uniform_partitions
from .errors import EmptySet, LimitExceeded, PreconditionFailed, SizeMismatch
from .ortho import (UNDEF, OrthoAlgebra, interval_oa, oa_iso_violations,
                    oa_to_orthoposet)
from .report import Report, SectionCertificate

DEFAULT_LIMIT = 8
SAMPLE_DEFAULT = 200


# maps

@dataclass(frozen=True)
class FinMap:
    dom: int
    cod: int
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if len(image) != self.dom:
            raise ValueError(f"map needs {self.dom} images, got {len(image)}")
        if any(not 0 <= v < self.cod for v in image):
            raise ValueError(f"image outside codomain of size {self.cod}")
        object.__setattr__(self, "image", image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.cod

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.dom

    def is_bijective(self) -> bool:
        return self.dom == self.cod and self.is_injective()

    def kernel(self) -> EqRel:
        return EqRel.from_labels(self.image)


def identity(n: int) -> FinMap:
    return FinMap(n, n, tuple(range(n)))


def terminal(n: int) -> FinMap:
    """The unique map to the one-element set."""
    return FinMap(n, 1, (0,) * n)


def quotient(rel: EqRel) -> FinMap:
    return FinMap(rel.n, rel.k, rel.block_of)


def compose(g: FinMap, f: FinMap) -> FinMap:
    """``g`` after ``f``."""
    if f.cod != g.dom:
        raise SizeMismatch(f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}")
    return FinMap(f.dom, g.cod, tuple(g.image[v] for v in f.image))


def pair(*maps: FinMap) -> FinMap:
    """Map into the product of the codomains (mixed radix, first factor most significant)."""
    dom = maps[0].dom
    if any(m.dom != dom for m in maps):
        raise SizeMismatch("paired maps need a common domain")
    cod = math.prod(m.cod for m in maps)
    image = []
    for x in range(dom):
        v = 0
        for m in maps:
            v = v * m.cod + m.image[x]
        image.append(v)
    return FinMap(dom, cod, tuple(image))


def projection(sizes: Sequence[int], i: int) -> FinMap:
    """The ``i``-th projection out of a mixed-radix product set."""
    coords = list(itertools.product(*(range(s) for s in sizes)))
    return FinMap(len(coords), sizes[i], tuple(c[i] for c in coords))


def _nonempty(*sizes: int) -> None:
    if any(s <= 0 for s in sizes):
        raise EmptySet("the empty set is not an object of this category")


# pushouts

@dataclass(frozen=True)
class PushoutSquare:
    """``j . f == k . g`` for a span ``B <-f- A -g-> C`` and corner maps into ``D``."""

    f: FinMap
    g: FinMap
    j: FinMap
    k: FinMap

    def commutes(self) -> bool:
        return compose(self.j, self.f) == compose(self.k, self.g)


def pushout(f: FinMap, g: FinMap) -> tuple[int, FinMap, FinMap]:
    """Quotient of ``B + C`` by the equivalence generated by ``f(a) ~ g(a)``."""
    if f.dom != g.dom:
        raise SizeMismatch("span legs need a common domain")
    _nonempty(f.dom, f.cod, g.cod)
    nb = f.cod
    ds = DisjointSet(range(nb + g.cod))
    for a in range(f.dom):
        ds.merge(f.image[a], nb + g.image[a])
    labels = EqRel.from_labels(ds[x] for x in range(nb + g.cod)).block_of
    size = max(labels) + 1
    return size, FinMap(nb, size, labels[:nb]), FinMap(g.cod, size, labels[nb:])


def is_pushout(sq: PushoutSquare) -> bool:
    """The comparison map from the computed pushout to the corner is a bijection."""
    if not sq.commutes():
        return False
    size, lb, lc = pushout(sq.f, sq.g)
    u = [-1] * size
    for leg, corner in ((lb, sq.j), (lc, sq.k)):
        for x in range(leg.dom):
            p, d = leg.image[x], corner.image[x]
            if u[p] not in (-1, d):
                return False
            u[p] = d
    return FinMap(size, sq.j.cod, u).is_bijective()


# decompositions

@dataclass(frozen=True, order=True)
class Decomposition:
    """A binary decomposition ``[f1, f2]`` as its kernel pair."""

    kernel1: EqRel
    kernel2: EqRel

    @property
    def n(self) -> int:
        return self.kernel1.n

    @property
    def f1(self) -> FinMap:
        return quotient(self.kernel1)

    @property
    def f2(self) -> FinMap:
        return quotient(self.kernel2)

    def is_product(self) -> bool:
        return is_product_diagram(self.kernel1, self.kernel2)

    def __str__(self):
        return f"[{self.kernel1}, {self.kernel2}]"


def is_product_diagram(*kernels: EqRel) -> bool:
    """``x -> (f1 x, ..., fm x)`` is a bijection onto the product of block sets."""
    n = kernels[0].n
    if any(k.n != n for k in kernels):
        return False
    if math.prod(k.k for k in kernels) != n:
        return False
    return pair(*(quotient(k) for k in kernels)).is_injective()


@lru_cache(maxsize=None)
def _uniform(n: int, k: int) -> tuple[EqRel, ...]:
    return tuple(uniform_partitions(n, k))


def _product_tuples(n: int, ks: Sequence[int]) -> list[tuple[EqRel, ...]]:
    """Kernel tuples with block counts ``ks`` forming a product diagram.

    Grows the tuples one factor at a time, keeping only those whose partial
    map is onto the product of the block sets seen so far.
    """
    tuples: list[tuple[EqRel, ...]] = [()]
    codes = np.zeros((1, n), dtype=np.int64)
    radix = 1
    for k in ks:
        parts = _uniform(n, k)
        if not parts:
            return []
        arr = np.array([p.block_of for p in parts], dtype=np.int64)
        radix *= k
        new = (codes[:, None, :] * k + arr[None, :, :]).reshape(-1, n)
        srt = np.sort(new, axis=1)
        distinct = 1 + (np.diff(srt, axis=1) != 0).sum(axis=1)
        keep = np.flatnonzero(distinct == radix)
        tuples = [tuples[i // len(parts)] + (parts[i % len(parts)],) for i in keep]
        codes = new[keep]
    return tuples


def _check_size(n: int, limit: int) -> None:
    _nonempty(n)
    if n > limit:
        raise LimitExceeded(f"set size {n} exceeds the limit {limit}")


def _sorted_decompositions(decs):
    return sorted(decs, key=lambda d: (d.kernel1.k, d.kernel1, d.kernel2))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Decomposition, ...]:
    out = []
    for k1 in divisors(n):
        out.extend(Decomposition(a, b) for a, b in _product_tuples(n, (k1, n // k1)))
    return tuple(_sorted_decompositions(out))


def enumerate_D(a_size: int, limit: int = DEFAULT_LIMIT) -> list[Decomposition]:
    """All binary decompositions of an ``a_size``-element set, deterministic order.

    The first entry is the zero ``[tau, 1]`` and the last the one ``[1, tau]``.
    """
    _check_size(a_size, limit)
    return list(_enumerate(a_size))


@lru_cache(maxsize=None)
def _ternaries(n: int) -> tuple[tuple[EqRel, EqRel, EqRel], ...]:
    out = []
    for k1 in divisors(n):
        for k2 in divisors(n // k1):
            out.extend(_product_tuples(n, (k1, k2, n // (k1 * k2))))
    return tuple(sorted(out, key=lambda t: (t[0].k, t[1].k, t)))


def ternary_decompositions(a_size: int, limit: int = DEFAULT_LIMIT) -> list[tuple[EqRel, EqRel, EqRel]]:
    """All ternary decompositions ``[c1, c2, c3]`` as kernel triples."""
    _check_size(a_size, limit)
    return list(_ternaries(a_size))


def oplus(d: Decomposition, e: Decomposition) -> Decomposition | None:
    """Search the canonical ternaries for a witness of ``d + e``; None when undefined."""
    n = d.n
    if e.n != n:
        raise SizeMismatch("decompositions of different sets")
    c1, c2 = d.kernel1, e.kernel1
    if n % (c1.k * c2.k):
        return None
    for c3 in _uniform(n, n // (c1.k * c2.k)):
        if not is_product_diagram(c1, c2, c3):
            continue
        if rel_meet(c2, c3) == d.kernel2 and rel_meet(c1, c3) == e.kernel2:
            return Decomposition(rel_meet(c1, c2), c3)
    return None


@dataclass(frozen=True, eq=False)
class DecompositionAlgebra:
    """``D(A)`` as an orthoalgebra, with the bookkeeping of how it was built."""

    n: int
    decompositions: tuple[Decomposition, ...]
    oa: OrthoAlgebra
    index: dict = field(repr=False)
    ternary_count: int = 0
    witness_conflicts: tuple = ()

    def __len__(self):
        return len(self.decompositions)

    @property
    def zero(self) -> int:
        return self.oa.zero

    @property
    def one(self) -> int:
        return self.oa.one


@lru_cache(maxsize=None)
def _algebra(n: int) -> DecompositionAlgebra:
    decs = _enumerate(n)
    index = {d: i for i, d in enumerate(decs)}
    table = np.full((len(decs), len(decs)), UNDEF, dtype=np.int64)
    conflicts = []
    terns = _ternaries(n)
    for c1, c2, c3 in terns:
        d = index[Decomposition(c1, rel_meet(c2, c3))]
        e = index[Decomposition(c2, rel_meet(c1, c3))]
        v = index[Decomposition(rel_meet(c1, c2), c3)]
        if table[d, e] not in (UNDEF, v):
            conflicts.append((d, e, int(table[d, e]), v))
        table[d, e] = v
    zero = index[Decomposition(EqRel.nabla(n), EqRel.delta(n))]
    one = index[Decomposition(EqRel.delta(n), EqRel.nabla(n))]
    oa = OrthoAlgebra(table, zero, one, decs)
    return DecompositionAlgebra(n, decs, oa, index, len(terns), tuple(conflicts))


def decomposition_oa(a_size: int, limit: int = DEFAULT_LIMIT) -> DecompositionAlgebra:
    _check_size(a_size, limit)
    return _algebra(a_size)


# honesty and the two claims

def is_disjoint_product(d: Decomposition) -> bool:
    f1, f2 = d.f1, d.f2
    return is_pushout(PushoutSquare(f1, f2, terminal(f1.cod), terminal(f2.cod)))


def ternary_square(c1: EqRel, c2: EqRel, c3: EqRel) -> PushoutSquare:
    """``((f1, f3), (f2, f3), pi2, pi2)`` for a ternary product diagram."""
    f1, f2, f3 = quotient(c1), quotient(c2), quotient(c3)
    return PushoutSquare(pair(f1, f3), pair(f2, f3),
                         projection((f1.cod, f3.cod), 1), projection((f2.cod, f3.cod), 1))


def _random_ternary(n: int, rng: random.Random) -> tuple[EqRel, EqRel, EqRel]:
    shapes = [(a, b, n // (a * b)) for a in divisors(n) for b in divisors(n // a)]
    k1, k2, k3 = rng.choice(shapes)
    perm = list(range(n))
    rng.shuffle(perm)
    coords = [np.unravel_index(perm[x], (k1, k2, k3)) for x in range(n)]
    return tuple(EqRel.from_labels(int(c[i]) for c in coords) for i in range(3))


def _random_binary(n: int, rng: random.Random) -> Decomposition:
    k1 = rng.choice(divisors(n))
    perm = list(range(n))
    rng.shuffle(perm)
    coords = [divmod(perm[x], n // k1) for x in range(n)]
    return Decomposition(EqRel.from_labels(c[0] for c in coords),
                         EqRel.from_labels(c[1] for c in coords))


def honesty_spot_check(a_size: int, samples: int | None = None, seed: int | None = None,
                       limit: int = DEFAULT_LIMIT) -> Report:
    """Pushout, epic-projection and disjointness conditions on ``a_size``.

    Exhaustive when ``samples`` is None (``a_size`` must be within ``limit``);
    otherwise draws that many random ternary and binary diagrams from a
    generator seeded with ``seed``, which is then mandatory.
    """
    _nonempty(a_size)
    r = Report(f"honesty of the {a_size}-element set", seed=seed)
    if samples is None:
        _check_size(a_size, limit)
        terns = ternary_decompositions(a_size, limit)
        binaries = enumerate_D(a_size, limit)
        r.stats["mode_exhaustive"] = 1
    else:
        if seed is None:
            raise PreconditionFailed("sampling needs an explicit seed")
        rng = random.Random(seed)
        terns = [_random_ternary(a_size, rng) for _ in range(samples)]
        binaries = [_random_binary(a_size, rng) for _ in range(samples)]
        r.stats["mode_exhaustive"] = 0
    r.stats.update(ternaries=len(terns), binaries=len(binaries))
    for name in ("ternary_square_is_pushout", "projections_epic", "binary_products_disjoint"):
        r.require(name)
    for c in terns:
        if not is_product_diagram(*c):
            r.fail("ternary_square_is_pushout", ("not a product diagram", [t.block_of for t in c]))
            continue
        sq = ternary_square(*c)
        if not is_pushout(sq):
            r.fail("ternary_square_is_pushout", [t.block_of for t in c])
        maps = [quotient(t) for t in c] + [sq.j, sq.k]
        if not all(m.is_surjective() for m in maps):
            r.fail("projections_epic", [t.block_of for t in c])
    for d in binaries:
        if not is_disjoint_product(d):
            r.fail("binary_products_disjoint", [d.kernel1.block_of, d.kernel2.block_of])
    return r


def claims_check(a_size: int, binaries: Iterable[Sequence[EqRel]] | None = None,
                 ternaries: Iterable[Sequence[EqRel]] | None = None,
                 limit: int = DEFAULT_LIMIT) -> Report:
    """Instance check of the two lemmas behind ``d + d => d = 0``.

    (p, q) a product diagram with q bijective forces P to be a point; a
    ternary (p, p, q) forces P to be a point and q bijective.  Diagrams are
    given as kernel tuples; by default all of them on ``a_size`` are used.
    """
    _check_size(a_size, limit)
    if binaries is None:
        binaries = [(d.kernel1, d.kernel2) for d in enumerate_D(a_size, limit)]
    if ternaries is None:
        ternaries = ternary_decompositions(a_size, limit)
    r = Report(f"claims on the {a_size}-element set")
    r.require("iso_leg_forces_point")
    r.require("repeated_leg_forces_point")
    seen_b = seen_t = 0
    for p, q in binaries:
        if q.k == q.n:  # q injective, hence bijective onto its blocks
            seen_b += 1
            r.check("iso_leg_forces_point", p.k == 1, (p.block_of, q.block_of))
    for p, p2, q in ternaries:
        if p == p2:
            seen_t += 1
            r.check("repeated_leg_forces_point", p.k == 1 and q.k == q.n,
                    (p.block_of, q.block_of))
    r.stats.update(iso_leg_diagrams=seen_b, repeated_leg_diagrams=seen_t)
    return r


# section theorem

def _gamma(h: Decomposition, f: Decomposition, g: Decomposition):
    """Solve ``gamma . h1 = (f1, g1)``; returns the kernel pair on H1 or a reason."""
    h1 = h.f1
    f1, g1 = f.f1, g.f1
    gam = [None] * h1.cod
    for x in range(h.n):
        val = (f1(x), g1(x))
        b = h1(x)
        if gam[b] is not None and gam[b] != val:
            return None, ("gamma not well defined", x)
        gam[b] = val
    if None in gam:
        return None, ("h1 not surjective",)
    k1 = EqRel.from_labels(v[0] for v in gam)
    k2 = EqRel.from_labels(v[1] for v in gam)
    if len(set(gam)) != len(gam) or k1.k * k2.k != len(gam):
        return None, ("gamma not a product isomorphism",)
    return Decomposition(k1, k2), None


def _phi(h: Decomposition, m: Decomposition) -> Decomposition:
    """``[m1 h1, (m2 h1, h2)]``."""
    h1 = h.f1
    m1h1 = compose(m.f1, h1).kernel()
    m2h1 = compose(m.f2, h1).kernel()
    return Decomposition(m1h1, rel_meet(m2h1, h.kernel2))


def cat_section(a_size: int, h: Decomposition | int, limit: int = DEFAULT_LIMIT) -> SectionCertificate:
    """Certify ``h``'s down-set in D(A) against D(H1) through both explicit maps."""
    D = decomposition_oa(a_size, limit)
    if isinstance(h, (int, np.integer)):
        if not 0 <= h < len(D):
            raise PreconditionFailed(f"decomposition index {h} outside 0..{len(D) - 1}")
        h = D.decompositions[int(h)]
    if h not in D.index:
        raise PreconditionFailed(f"{h} is not a decomposition of the {a_size}-element set")
    hid = D.index[h]
    down, down_index = interval_oa(D.oa, hid)
    k = h.kernel1.k
    T = decomposition_oa(k, max(limit, k))
    r = Report(f"categorical section at {h}")
    r.stats.update(set_size=a_size, factor_size=k, interval_size=down.n, target_size=len(T))

    table = D.oa.table
    gamma, phi = {}, {}
    r.require("complement_in_interval_unique")
    r.require("gamma_well_defined")
    r.require("gamma_unique")
    r.check("gamma_unique", h.f1.is_surjective(), "h1 not surjective")
    for i, j in enumerate(down_index):
        gs = np.flatnonzero(table[j] == hid)
        if gs.size != 1:
            r.fail("complement_in_interval_unique", (j, gs.tolist()))
            continue
        f, g = D.decompositions[j], D.decompositions[int(gs[0])]
        img, why = _gamma(h, f, g)
        if img is None or img not in T.index:
            r.fail("gamma_well_defined", (str(f), why or str(img)))
            continue
        gamma[i] = T.index[img]

    r.require("phi_well_defined")
    local = {j: i for i, j in enumerate(down_index)}
    for t, m in enumerate(T.decompositions):
        img = _phi(h, m)
        if img not in D.index or D.index[img] not in local:
            r.fail("phi_well_defined", (str(m), str(img)))
            continue
        phi[t] = local[D.index[img]]

    r.require("mutually_inverse")
    for i, t in gamma.items():
        if phi.get(t) != i:
            r.fail("mutually_inverse", ("phi(gamma)", i))
    for t, i in phi.items():
        if gamma.get(i) != t:
            r.fail("mutually_inverse", ("gamma(phi)", t))

    for name, src, dst, mp in (("gamma_preserves_oplus", down, T.oa, gamma),
                               ("phi_preserves_oplus", T.oa, down, phi)):
        r.require(name)
        for x, y in np.argwhere(src.defined):
            x, y = int(x), int(y)
            if x not in mp or y not in mp:
                continue
            v = dst.table[mp[x], mp[y]]
            if v == UNDEF or mp.get(int(src.table[x, y])) != v:
                r.fail(name, (x, y))

    r.check("bounds_preserved",
            gamma.get(down.zero) == T.zero and gamma.get(down.one) == T.one,
            (gamma.get(down.zero), gamma.get(down.one)))

    if len(gamma) == down.n and r.ok:
        f = [gamma[i] for i in range(down.n)]
        bad = oa_iso_violations(down, T.oa, f)
        r.check("oa_isomorphism", not bad, bad[:1])
    _, is_omp = oa_to_orthoposet(T.oa, check=False)
    r.stats["target_orthoposet_is_omp"] = int(is_omp)
    return SectionCertificate(r, down, T, gamma, phi, down_index)


def da_report(a_size: int, limit: int = DEFAULT_LIMIT) -> Report:
    from .ortho import check_oa

    D = decomposition_oa(a_size, limit)
    r = check_oa(D.oa, Report(f"D(A) for the {a_size}-element set"))
    r.check("oplus_witness_unique", not D.witness_conflicts, list(D.witness_conflicts[:1]))
    r.require("self_sum_undefined_off_zero")
    for i in range(len(D)):
        if i != D.zero and D.oa.defined[i, i]:
            r.fail("self_sum_undefined_off_zero", (i,))
    r.stats.update(decompositions=len(D), ternaries=D.ternary_count)
    return r
