"""Finite posets and bounded lattices.

Elements are dense integer ids ``0..n-1``.  The order is a boolean matrix
with ``leq[i, j]`` true iff ``i <= j``; lattices add total meet and join
tables.  Everything is immutable once built.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from ._gf import gf_tables
from .errors import (BadInterval, InvalidPoset, LimitExceeded, NotALattice,
                     NotBounded)

DEFAULT_MAX_SIZE = 512
MAX_SUBSPACE_DIM = 4
MAX_VECTORS = 4096


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


def transitive_closure(leq: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation matrix."""
    r = np.array(leq, dtype=bool, copy=True)
    np.fill_diagonal(r, True)
    for k in range(r.shape[0]):
        r |= r[:, k, None] & r[None, k, :]
    return r


def poset_violations(leq: np.ndarray) -> list[tuple[str, tuple]]:
    """List (axiom, witness) pairs for every failed partial-order axiom.

    At most one witness per axiom is returned.
    """
    out = []
    n = leq.shape[0]
    diag = np.flatnonzero(~np.diagonal(leq))
    if diag.size:
        out.append(("reflexive", (int(diag[0]),)))
    anti = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
    if anti.size:
        i, j = anti[0]
        out.append(("antisymmetric", (int(i), int(j))))
    if n:
        f = leq.astype(np.float32)
        two_step = (f @ f) > 0
        bad = np.argwhere(two_step & ~leq)
        if bad.size:
            i, k = (int(v) for v in bad[0])
            j = int(np.flatnonzero(leq[i] & leq[:, k])[0])
            out.append(("transitive", (i, j, k)))
    return out


@dataclass(frozen=True, eq=False)
class FinPoset:
    """A finite partial order given by its full order matrix."""

    leq: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        leq = np.asarray(self.leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise InvalidPoset(f"order matrix must be square, got shape {leq.shape}")
        object.__setattr__(self, "leq", _frozen(leq))
        if self.labels is not None and len(self.labels) != leq.shape[0]:
            raise InvalidPoset("labels do not match element count")

    @property
    def n(self) -> int:
        return self.leq.shape[0]

    def validate(self) -> FinPoset:
        bad = poset_violations(self.leq)
        if bad:
            axiom, pair = bad[0]
            raise InvalidPoset(f"order is not {axiom}: offending elements {pair}")
        return self

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[Sequence[int]], labels=None) -> FinPoset:
        """Build from ``(i, j)`` pairs meaning ``i <= j``; closes transitively."""
        m = np.zeros((n, n), dtype=bool)
        for pair in pairs:
            i, j = _pair(pair, n)
            m[i, j] = True
        return cls(transitive_closure(m), labels).validate()

    from_covers = from_relation

    def index(self, label: Hashable) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def __eq__(self, other):
        if not isinstance(other, FinPoset):
            return NotImplemented
        return np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.leq.tobytes())


def _pair(pair, n):
    if len(pair) != 2:
        raise InvalidPoset(f"expected a pair, got {pair!r}")
    i, j = (int(v) for v in pair)
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidPoset(f"pair {[i, j]} has an element outside 0..{n - 1}")
    return i, j


def _bounds_of(leq):
    below_all = np.flatnonzero(leq.all(axis=1))
    above_all = np.flatnonzero(leq.all(axis=0))
    return below_all, above_all


def _extremal_table(leq: np.ndarray, sizes: np.ndarray):
    """Greatest common lower bound of every pair, or the first pair lacking one.

    ``sizes`` must be strictly monotone along the order (down-set sizes work);
    the candidate with the largest size is the only possible glb.
    """
    n = leq.shape[0]
    table = np.empty((n, n), dtype=np.int64)
    cols = np.arange(n)
    for i in range(n):
        lower = leq[:, i, None] & leq  # lower[z, j]: z <= i and z <= j
        score = np.where(lower, sizes[:, None], -1)
        best = score.argmax(axis=0)
        exists = lower[best, cols]
        dominated = ~(lower & ~leq[:, best]).any(axis=0)
        bad = np.flatnonzero(~(exists & dominated))
        if bad.size:
            return None, (i, int(bad[0]))
        table[i] = best
    return table, None


@dataclass(frozen=True, eq=False)
class FinLattice:
    poset: FinPoset
    meet: np.ndarray
    join: np.ndarray
    bot: int
    top: int

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @property
    def labels(self):
        return self.poset.labels

    def complements(self, x: int) -> np.ndarray:
        return np.flatnonzero((self.meet[x] == self.bot) & (self.join[x] == self.top))

    def atoms(self) -> list[int]:
        return [int(z) for z in np.flatnonzero(self.leq.sum(axis=0) == 2)]


def build_lattice(poset: FinPoset, max_size: int = DEFAULT_MAX_SIZE) -> FinLattice:
    """Compute meet/join tables and bounds of a finite poset.

    Raises NotBounded when there is no global bottom or top, and NotALattice
    naming the first pair without a unique glb or lub.
    """
    n = poset.n
    if n > max_size:
        raise LimitExceeded(f"lattice has {n} elements, limit is {max_size}")
    leq = poset.leq
    bots, tops = _bounds_of(leq)
    if n == 0 or bots.size != 1 or tops.size != 1:
        raise NotBounded("poset has no bottom" if n == 0 or bots.size != 1
                         else "poset has no top")
    down = leq.sum(axis=0)
    up = leq.sum(axis=1)
    meet, bad = _extremal_table(leq, down)
    if bad:
        raise NotALattice(f"elements {bad} have no greatest lower bound")
    join, bad = _extremal_table(leq.T, up)
    if bad:
        raise NotALattice(f"elements {bad} have no least upper bound")
    return FinLattice(poset, _frozen(meet), _frozen(join), int(bots[0]), int(tops[0]))


def lattice_from_order(leq, labels=None, max_size: int = DEFAULT_MAX_SIZE) -> FinLattice:
    return build_lattice(FinPoset(np.asarray(leq, dtype=bool), labels), max_size)


# modularity

def find_modular_violation(L: FinLattice) -> tuple[int, int, int] | None:
    """First triple (a, b, c) with c <= b and c v (a ^ b) != (c v a) ^ b."""
    meet, join = L.meet, L.join
    for b in range(L.n):
        cs = np.flatnonzero(L.leq[:, b])
        lhs = join[cs[:, None], meet[:, b][None, :]]
        rhs = meet[join[cs], b]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            ci, a = bad[0]
            return int(a), b, int(cs[ci])
    return None


def is_modular(L: FinLattice) -> bool:
    return find_modular_violation(L) is None


def modular_pair_witness(L: FinLattice, a: int, b: int) -> int | None:
    """A ``c <= b`` breaking ``(a, b)M``, or None when the pair is modular."""
    cs = np.flatnonzero(L.leq[:, b])
    lhs = L.join[cs, L.meet[a, b]]
    rhs = L.meet[L.join[cs, a], b]
    bad = np.flatnonzero(lhs != rhs)
    return int(cs[bad[0]]) if bad.size else None


def dual_modular_pair_witness(L: FinLattice, a: int, b: int) -> int | None:
    """A ``c >= b`` breaking ``(a, b)M*``, or None."""
    cs = np.flatnonzero(L.leq[b, :])
    lhs = L.meet[cs, L.join[a, b]]
    rhs = L.join[L.meet[cs, a], b]
    bad = np.flatnonzero(lhs != rhs)
    return int(cs[bad[0]]) if bad.size else None


def modular_pair(L: FinLattice, a: int, b: int) -> bool:
    return modular_pair_witness(L, a, b) is None


def dual_modular_pair(L: FinLattice, a: int, b: int) -> bool:
    return dual_modular_pair_witness(L, a, b) is None


def modular_pair_matrix(L: FinLattice) -> np.ndarray:
    """``M[a, b]`` is true iff ``(a, b)M``."""
    n = L.n
    out = np.empty((n, n), dtype=bool)
    for b in range(n):
        cs = np.flatnonzero(L.leq[:, b])
        lhs = L.join[cs[:, None], L.meet[:, b][None, :]]
        rhs = L.meet[L.join[cs], b]
        out[:, b] = (lhs == rhs).all(axis=0)
    return out


def dual_modular_pair_matrix(L: FinLattice) -> np.ndarray:
    """``M*[a, b]`` is true iff ``(a, b)M*``."""
    n = L.n
    out = np.empty((n, n), dtype=bool)
    for b in range(n):
        cs = np.flatnonzero(L.leq[b, :])
        lhs = L.meet[cs[:, None], L.join[:, b][None, :]]
        rhs = L.join[L.meet[cs], b]
        out[:, b] = (lhs == rhs).all(axis=0)
    return out


class SymmetryClass(enum.Enum):
    MODULAR = "modular"
    SYMMETRIC = "symmetric"
    M_SYMMETRIC_ONLY = "m-symmetric-only"
    M_STAR_SYMMETRIC_ONLY = "m*-symmetric-only"
    NONE = "none"


def _transfers(rel: np.ndarray) -> bool:
    # rel[a, b] implies rel[b, a]
    return not (rel & ~rel.T).any()


def symmetry_class(L: FinLattice) -> SymmetryClass:
    if is_modular(L):
        return SymmetryClass.MODULAR
    m_sym = _transfers(modular_pair_matrix(L))
    ms_sym = _transfers(dual_modular_pair_matrix(L))
    if m_sym and ms_sym:
        return SymmetryClass.SYMMETRIC
    if m_sym:
        return SymmetryClass.M_SYMMETRIC_ONLY
    if ms_sym:
        return SymmetryClass.M_STAR_SYMMETRIC_ONLY
    return SymmetryClass.NONE


def interval_lattice(L: FinLattice, lo: int, hi: int) -> tuple[FinLattice, tuple[int, ...]]:
    """The sublattice ``[lo, hi]`` and the map from its ids back to ``L``."""
    if not L.leq[lo, hi]:
        raise BadInterval(f"{lo} is not below {hi}")
    index = np.flatnonzero(L.leq[lo, :] & L.leq[:, hi])
    back = np.full(L.n, -1, dtype=np.int64)
    back[index] = np.arange(index.size)
    sub = np.ix_(index, index)
    labels = None if L.labels is None else tuple(L.labels[i] for i in index)
    poset = FinPoset(L.leq[sub], labels)
    meet = back[L.meet[sub]]
    join = back[L.join[sub]]
    return (FinLattice(poset, _frozen(meet), _frozen(join), int(back[lo]), int(back[hi])),
            tuple(int(i) for i in index))


# generators

def gen_chain(k: int) -> FinLattice:
    """The (k+1)-element chain 0 < 1 < ... < k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    r = np.arange(k + 1)
    return lattice_from_order(r[:, None] <= r[None, :])


def gen_boolean(k: int, max_size: int = DEFAULT_MAX_SIZE) -> FinLattice:
    """The Boolean lattice of subsets of a k-set; element ids are bitmasks."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if 2**k > max_size:
        raise LimitExceeded(f"2^{k} elements exceeds limit {max_size}")
    r = np.arange(2**k)
    return lattice_from_order((r[:, None] & r[None, :]) == r[:, None])


def gen_mo(k: int) -> FinLattice:
    """MO_k: bottom 0, atoms 1..2k, top 2k+1.

    Atoms ``2i+1`` and ``2i+2`` are the orthocomplementary pairs used by
    :func:`orthofact.ortho.mo_omp`.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = 2 * k + 2
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    return lattice_from_order(leq)


def gen_m3() -> FinLattice:
    """The diamond: bottom 0, atoms 1, 2, 3, top 4."""
    return lattice_from_order(_diamond(3))


def _diamond(atoms):
    n = atoms + 2
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    return leq


def gen_n5() -> FinLattice:
    """The pentagon: 0 < 1 < 2 < 4 on the long side, 0 < 3 < 4 on the short side."""
    return build_lattice(FinPoset.from_relation(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]))


def subspaces(q: int, d: int) -> list[frozenset]:
    """All subspaces of GF(q)^d as frozensets of coordinate tuples."""
    add, mul = gf_tables(q)
    if d < 0 or d > MAX_SUBSPACE_DIM:
        raise LimitExceeded(f"dimension {d} outside 0..{MAX_SUBSPACE_DIM}")
    if q**d > MAX_VECTORS:
        raise LimitExceeded(f"{q}^{d} vectors exceeds limit {MAX_VECTORS}")
    vectors = list(itertools.product(range(q), repeat=d))
    zero = tuple([0] * d)

    def span_with(space, v):
        out = set(space)
        for s in space:
            for c in range(1, q):
                out.add(tuple(int(add[x, mul[c, y]]) for x, y in zip(s, v)))
        return frozenset(out)

    seen = {frozenset([zero])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for space in frontier:
            for v in vectors:
                if v in space:
                    continue
                bigger = span_with(space, v)
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def gen_subspace_lattice(q: int, d: int, max_size: int = DEFAULT_MAX_SIZE) -> FinLattice:
    """Subspaces of GF(q)^d ordered by inclusion; labels are sorted vector tuples."""
    spaces = subspaces(q, d)
    if len(spaces) > max_size:
        raise LimitExceeded(f"{len(spaces)} subspaces exceeds limit {max_size}")
    leq = np.array([[s <= t for t in spaces] for s in spaces], dtype=bool)
    labels = tuple(tuple(sorted(s)) for s in spaces)
    return lattice_from_order(leq, labels, max_size)
