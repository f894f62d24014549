"""Equivalence relations on ``{0..n-1}`` as canonical block labellings.

A relation is stored as ``block_of``: the block id of every element, with
ids numbered in order of first occurrence (a restricted growth string).
Two labellings describe the same relation iff their canonical forms are
equal, so ``EqRel`` values compare and hash structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import SizeMismatch


def canonical(labels: Sequence) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


@dataclass(frozen=True, order=True)
class EqRel:
    block_of: tuple[int, ...]

    def __post_init__(self):
        if tuple(self.block_of) != canonical(self.block_of):
            raise ValueError(f"{self.block_of} is not a canonical block labelling")
        object.__setattr__(self, "block_of", tuple(int(b) for b in self.block_of))

    @classmethod
    def from_labels(cls, labels: Iterable) -> EqRel:
        return cls(canonical(list(labels)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> EqRel:
        lab = [-1] * n
        for i, blk in enumerate(blocks):
            for x in blk:
                lab[x] = i
        if -1 in lab:
            raise ValueError("blocks do not cover the set")
        return cls.from_labels(lab)

    @classmethod
    def delta(cls, n: int) -> EqRel:
        return cls(tuple(range(n)))

    @classmethod
    def nabla(cls, n: int) -> EqRel:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def k(self) -> int:
        """Number of blocks."""
        return max(self.block_of) + 1 if self.block_of else 0

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return [tuple(b) for b in out]

    @cached_property
    def matrix(self) -> np.ndarray:
        b = np.asarray(self.block_of)
        m = b[:, None] == b[None, :]
        m.flags.writeable = False
        return m

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def refines(self, other: EqRel) -> bool:
        """``self`` is contained in ``other`` as a set of pairs."""
        _same_n(self, other)
        return len(set(zip(self.block_of, other.block_of))) == self.k

    def is_uniform(self) -> bool:
        sizes = np.bincount(self.block_of)
        return bool((sizes == sizes[0]).all())

    def __str__(self) -> str:
        return "|".join("".join(map(str, b)) for b in self.blocks())


def _same_n(r: EqRel, s: EqRel) -> None:
    if r.n != s.n:
        raise SizeMismatch(f"relations on {r.n} and {s.n} elements")


def rel_meet(r: EqRel, s: EqRel) -> EqRel:
    """Intersection of two equivalence relations (their common refinement)."""
    _same_n(r, s)
    return EqRel.from_labels(zip(r.block_of, s.block_of))


def rel_compose(r: EqRel, s: EqRel) -> np.ndarray:
    """Relational composition ``{(x, z) : x r y and y s z for some y}``."""
    _same_n(r, s)
    return (r.matrix.astype(np.int64) @ s.matrix.astype(np.int64)) > 0


def permute(r: EqRel, s: EqRel) -> bool:
    return bool(np.array_equal(rel_compose(r, s), rel_compose(s, r)))


def rel_join_is_total(r: EqRel, s: EqRel) -> bool:
    return bool(rel_compose(r, s).all())


def partitions(n: int) -> Iterator[EqRel]:
    """All partitions of ``{0..n-1}`` in restricted-growth-string order."""
    if n == 0:
        yield EqRel(())
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield EqRel(tuple(rgs))
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def uniform_partitions(n: int, k: int) -> Iterator[EqRel]:
    """Partitions into exactly ``k`` blocks of equal size, in RGS order."""
    if k <= 0 or n % k:
        return
    size = n // k
    counts = [0] * k
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield EqRel(tuple(rgs))
            return
        for b in range(min(top + 2, k)):
            if counts[b] == size:
                continue
            # leave room: remaining elements must be able to open the unused blocks
            if b > top and k - (top + 1) > n - i:
                continue
            rgs[i] = b
            counts[b] += 1
            yield from rec(i + 1, max(top, b))
            counts[b] -= 1

    yield from rec(0, -1)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def relation_stack(parts: Sequence[EqRel]) -> np.ndarray:
    """Block labellings of several partitions as one ``(m, n)`` int array."""
    if not parts:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array([p.block_of for p in parts], dtype=np.int64)


def refinement_matrix(parts: Sequence[EqRel]) -> np.ndarray:
    """``R[i, j]`` iff ``parts[i]`` refines ``parts[j]``."""
    lab = relation_stack(parts)
    m = lab.shape[0]
    if m == 0:
        return np.zeros((0, 0), dtype=bool)
    n = lab.shape[1]
    ks = lab.max(axis=1) + 1
    codes = lab[:, None, :] * (n + 1) + lab[None, :, :]   # (i, j, x)
    codes = np.sort(codes, axis=2)
    distinct = 1 + (np.diff(codes, axis=2) != 0).sum(axis=2)
    return distinct == ks[:, None]


def permute_matrix(parts: Sequence[EqRel]) -> np.ndarray:
    """``P[i, j]`` iff ``parts[i]`` and ``parts[j]`` permute."""
    rel = np.array([p.matrix for p in parts], dtype=np.float32)
    comp = np.einsum("ixy,jyz->ijxz", rel, rel) > 0
    return (comp == comp.transpose(1, 0, 2, 3)).all(axis=(2, 3))
