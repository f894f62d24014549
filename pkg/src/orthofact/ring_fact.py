"""Finite rings with unit, their idempotent OMPs, and corner rings.

Rings are given by full addition and multiplication tables on ids
``0..n-1``.  Generators cover cyclic rings, direct products and small
matrix rings over prime fields.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ._gf import gf_tables
from .errors import InvalidRing, LimitExceeded, NotIdempotent
from .order import FinPoset
from .ortho import OrthoPoset, check_omp, omp_to_oa
from .report import Report, SectionCertificate

MAX_RING_SIZE = 1024


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class FinRing:
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    labels: tuple | None = None

    def __post_init__(self):
        add, mul = np.asarray(self.add), np.asarray(self.mul)
        n = add.shape[0]
        if add.shape != (n, n) or mul.shape != (n, n):
            raise InvalidRing("add and mul must be square tables of equal size")
        if n == 0 or add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise InvalidRing("table entries outside the carrier")
        object.__setattr__(self, "add", _frozen(add))
        object.__setattr__(self, "mul", _frozen(mul))

    @property
    def n(self) -> int:
        return self.add.shape[0]

    @property
    def neg(self) -> np.ndarray:
        hits = self.add == self.zero
        return np.argmax(hits, axis=1)

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def label(self, x: int):
        return x if self.labels is None else self.labels[x]


def ring_violations(R: FinRing) -> Report:
    """Abelian group, associative multiplication, two-sided distributivity, unit."""
    r = Report(f"ring (n={R.n})")
    a, m, n = R.add, R.mul, R.n
    idx = np.arange(n)
    r.check("add_commutative", (a == a.T).all(), np.argwhere(a != a.T)[:1].tolist())
    r.check("add_identity", (a[R.zero] == idx).all(), R.zero)
    r.check("additive_inverses", ((a == R.zero).sum(axis=1) == 1).all(),
            np.flatnonzero((a == R.zero).sum(axis=1) != 1)[:1].tolist())
    for name in ("add_associative", "mul_associative", "left_distributive",
                 "right_distributive"):
        r.require(name)
    # one slice per leading element keeps memory at O(n^2)
    for x in range(n):
        for name, t in (("add_associative", a), ("mul_associative", m)):
            bad = np.argwhere(t[t[x]] != t[x][t])        # (xy)z vs x(yz)
            if bad.size:
                r.fail(name, (x, *bad[0].tolist()))
        bad = np.argwhere(m[x][a] != a[m[x][:, None], m[x][None, :]])  # x(y+z)
        if bad.size:
            r.fail("left_distributive", (x, *bad[0].tolist()))
        bad = np.argwhere(m[a[x]] != a[m[x][None, :], m])             # (x+y)z
        if bad.size:
            r.fail("right_distributive", (x, *bad[0].tolist()))
    r.check("unit", (m[R.one] == idx).all() and (m[:, R.one] == idx).all(), R.one)
    return r


def validate_ring(R: FinRing) -> FinRing:
    rep = ring_violations(R)
    if not rep.ok:
        raise InvalidRing(f"not a ring with unit: {rep.failures}")
    return R


# generators

def ring_zn(n: int) -> FinRing:
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    if n > MAX_RING_SIZE:
        raise LimitExceeded(f"Z_{n} exceeds ring size limit {MAX_RING_SIZE}")
    r = np.arange(n)
    return FinRing((r[:, None] + r[None, :]) % n, (r[:, None] * r[None, :]) % n, 0, 1 % n)


def ring_product(*rings: FinRing) -> FinRing:
    """Direct product; element ids are mixed-radix with the first factor most significant."""
    if not rings:
        return ring_zn(1)
    sizes = [R.n for R in rings]
    total = int(np.prod(sizes))
    if total > MAX_RING_SIZE:
        raise LimitExceeded(f"product of size {total} exceeds {MAX_RING_SIZE}")
    coords = list(itertools.product(*(range(s) for s in sizes)))
    cidx = np.array(coords, dtype=np.int64).reshape(total, len(sizes))

    def encode(parts):
        return reduce(lambda acc, ps: acc * ps[1] + ps[0], zip(parts, sizes), 0)

    def table(kind):
        cols = [getattr(R, kind)[np.ix_(cidx[:, k], cidx[:, k])] for k, R in enumerate(rings)]
        return encode(cols)

    labels = tuple(tuple(R.label(c) for R, c in zip(rings, cs)) for cs in coords)
    return FinRing(table("add"), table("mul"),
                   int(encode([R.zero for R in rings])), int(encode([R.one for R in rings])),
                   labels)


def ring_zn_product(*ns: int) -> FinRing:
    return ring_product(*(ring_zn(n) for n in ns))


def ring_matrix(k: int, p: int) -> FinRing:
    """k-by-k matrices over GF(p); labels are row-major entry tuples."""
    fadd, fmul = gf_tables(p)
    size = p ** (k * k)
    if size > MAX_RING_SIZE:
        raise LimitExceeded(f"{k}x{k} matrices over GF({p}) have {size} elements")
    mats = np.array(list(itertools.product(range(p), repeat=k * k)), dtype=np.int64)
    mats = mats.reshape(size, k, k)
    weights = p ** np.arange(k * k - 1, -1, -1)

    def encode(ms):
        return ms.reshape(ms.shape[:-2] + (k * k,)) @ weights

    add = encode(fadd[mats[:, None], mats[None, :]])
    prod = fmul[mats[:, None, :, :, None], mats[None, :, None, :, :]]  # (x, y, i, j, l)
    mul = np.zeros((size, size, k, k), dtype=np.int64)
    for j in range(k):
        mul = fadd[mul, prod[:, :, :, j, :]]
    mul = encode(mul)
    eye = encode(np.eye(k, dtype=np.int64))
    labels = tuple(tuple(int(v) for v in m.ravel()) for m in mats)
    return FinRing(add, mul, 0, int(eye), labels)


# idempotents

def idempotents(R: FinRing) -> list[int]:
    return [int(x) for x in np.flatnonzero(np.diagonal(R.mul) == np.arange(R.n))]


def build_ER(R: FinRing) -> OrthoPoset:
    """Idempotents ordered by ``e <= f iff ef = e = fe`` with ``e' = 1 - e``.

    Labels are the ring ids of the idempotents.
    """
    E = np.array(idempotents(R), dtype=np.int64)
    ef = R.mul[np.ix_(E, E)]
    fe = R.mul[np.ix_(E, E)].T
    leq = (ef == E[:, None]) & (fe == E[:, None])
    pos = {int(e): i for i, e in enumerate(E)}
    ocomp = [pos[R.sub(R.one, int(e))] for e in E]
    return OrthoPoset(FinPoset(leq, tuple(int(e) for e in E)), ocomp, pos[R.zero], pos[R.one])


def corner_ring(R: FinRing, e: int) -> tuple[FinRing, tuple[int, ...]]:
    """``{x : ex = x = xe}`` with unit ``e``, and its embedding into ``R``."""
    if R.mul[e, e] != e:
        raise NotIdempotent(f"{e} is not idempotent")
    idx = np.arange(R.n)
    carrier = np.flatnonzero((R.mul[e] == idx) & (R.mul[:, e] == idx))
    back = np.full(R.n, -1, dtype=np.int64)
    back[carrier] = np.arange(carrier.size)
    sub = np.ix_(carrier, carrier)
    add, mul = back[R.add[sub]], back[R.mul[sub]]
    if (add < 0).any() or (mul < 0).any():
        raise InvalidRing(f"corner at {e} is not closed")
    labels = tuple(R.label(int(c)) for c in carrier)
    S = FinRing(add, mul, int(back[R.zero]), int(back[e]), labels)
    return S, tuple(int(c) for c in carrier)


def ring_section(R: FinRing, e: int) -> SectionCertificate:
    """Compare the down-set of ``e`` in E(R) with E(R_e), literally.

    The interval complement of ``f`` is taken as ``f' ^ e`` when that meet
    exists in E(R), otherwise as the unique ``d <= e`` with ``f + d = e``;
    when both exist they must agree.  It must equal ``e - f`` and also the
    product ``(1 - f) e`` evaluated in ``R``.
    """
    if R.mul[e, e] != e:
        raise NotIdempotent(f"{e} is not idempotent")
    r = Report(f"ring section at e={R.label(e)}")
    P = build_ER(R)
    pe = P.index(e)
    down = [int(P.labels[i]) for i in np.flatnonzero(P.leq[:, pe])]
    S, embed = corner_ring(R, e)
    PS = build_ER(S)
    corner_idem = [embed[int(i)] for i in PS.labels]
    r.stats.update(ring_size=R.n, interval_size=len(down), corner_size=S.n,
                   corner_idempotents=len(corner_idem))

    r.check("carrier_equality", sorted(down) == sorted(corner_idem),
            {"interval": sorted(down), "corner": sorted(corner_idem)})

    # order: both are gh = g = hg, compare the two matrices on common ids
    r.require("order_coincides")
    spos = {v: i for i, v in enumerate(corner_idem)}
    for g in down:
        for h in down:
            if g in spos and h in spos:
                if P.leq[P.index(g), P.index(h)] != PS.leq[spos[g], spos[h]]:
                    r.fail("order_coincides", (g, h))

    oa = omp_to_oa(P, check=False)
    r.require("complement_is_e_minus_f")
    r.require("complement_is_one_minus_f_times_e")
    r.require("meet_and_oa_routes_agree")
    r.require("corner_complement_matches")
    for f in down:
        pf = P.index(f)
        e_minus_f = R.sub(e, f)
        literal = int(R.mul[R.sub(R.one, f), e])
        meet = P.glb(int(P.ocomp[pf]), pe)
        ds = [int(P.labels[d]) for d in np.flatnonzero(oa.table[pf] == pe) if P.leq[d, pe]]
        via_oa = ds[0] if len(ds) == 1 else None
        via_meet = None if meet is None else int(P.labels[meet])
        if via_meet is not None and via_oa is not None and via_meet != via_oa:
            r.fail("meet_and_oa_routes_agree", (f, via_meet, via_oa))
        sharp = via_meet if via_meet is not None else via_oa
        r.check("complement_is_e_minus_f", sharp == e_minus_f, (f, sharp, e_minus_f))
        r.check("complement_is_one_minus_f_times_e", literal == e_minus_f, (f, literal, e_minus_f))
        # e - f is also the orthocomplement inside E(R_e)
        if f in spos:
            in_corner = embed[int(PS.labels[PS.ocomp[spos[f]]])]
            r.check("corner_complement_matches", in_corner == e_minus_f,
                    (f, in_corner, e_minus_f))
    return SectionCertificate(r, P, PS, {P.index(f): spos.get(f, -1) for f in down},
                              {i: P.index(v) for v, i in spos.items()})


def er_report(R: FinRing) -> Report:
    P = build_ER(R)
    r = check_omp(P, Report(f"E(R) for ring of size {R.n}"))
    r.stats["idempotents"] = P.n
    return r


def orthogonal_idempotents_report(R: FinRing) -> Report:
    """If ``ef = fe = 0`` then ``e + f`` is idempotent and equals the orthogonal sum in E(R)."""
    P = build_ER(R)
    A = omp_to_oa(P, check=False)
    E = [int(e) for e in P.labels]
    r = Report(f"orthogonal idempotents in ring of size {R.n}")
    r.require("sum_is_idempotent")
    r.require("sum_is_oplus")
    pairs = 0
    for i, e in enumerate(E):
        for j, f in enumerate(E):
            if R.mul[e, f] != R.zero or R.mul[f, e] != R.zero:
                continue
            pairs += 1
            s = int(R.add[e, f])
            if R.mul[s, s] != s:
                r.fail("sum_is_idempotent", (e, f, s))
                continue
            o = A.oplus(i, j)
            if o is None or E[o] != s:
                r.fail("sum_is_oplus", (e, f, s, None if o is None else E[o]))
    r.stats["orthogonal_pairs"] = pairs
    return r
