"""Brute-force reference implementations used to freeze expected values.

Nothing here imports the package's algorithms; each oracle works straight
from the definitions, trading speed for obviousness.
"""

from __future__ import annotations

import itertools
from math import factorial, prod

import numpy as np


# orders

def brute_glb(leq, x, y):
    n = len(leq)
    lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
    best = [z for z in lower if all(leq[w][z] for w in lower)]
    return best[0] if best else None


def brute_lub(leq, x, y):
    n = len(leq)
    upper = [z for z in range(n) if leq[x][z] and leq[y][z]]
    best = [z for z in upper if all(leq[z][w] for w in upper)]
    return best[0] if best else None


def brute_is_modular(leq):
    n = len(leq)
    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[a][c]:
            lhs = brute_glb(leq, brute_lub(leq, a, b), c)
            rhs = brute_lub(leq, a, brute_glb(leq, b, c))
            if lhs != rhs:
                return False
    return True


def brute_subspace_count(q, d):
    """Count subsets of GF(q)^d that contain 0 and are closed under + and scalars."""
    vecs = list(itertools.product(range(q), repeat=d))
    zero = vecs[0]
    count = 0
    for mask in range(1 << len(vecs)):
        s = {v for i, v in enumerate(vecs) if mask >> i & 1}
        if zero not in s:
            continue
        ok = all(tuple((a + b) % q for a, b in zip(u, v)) in s for u in s for v in s)
        ok = ok and all(tuple(c * a % q for a in u) in s for u in s for c in range(q))
        count += ok
    return count


# rings

def idempotents_zn(n):
    return [x for x in range(n) if x * x % n == x]


def idempotents_matrix2(p):
    out = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        sq = ((a * a + b * c) % p, (a * b + b * d) % p, (c * a + d * c) % p, (c * b + d * d) % p)
        if sq == (a, b, c, d):
            out.append((a, b, c, d))
    return out


# partitions

def set_partitions(n):
    """All partitions of range(n) as label tuples, by plain recursion."""
    def rec(i, labels, k):
        if i == n:
            yield tuple(labels)
            return
        for b in range(k + 1):
            yield from rec(i + 1, labels + [b], max(k, b + 1))
    yield from rec(0, [], 0)


def bell(n):
    return sum(1 for _ in set_partitions(n))


def as_pairs(labels):
    n = len(labels)
    return {(x, y) for x in range(n) for y in range(n) if labels[x] == labels[y]}


def compose(r, s):
    return {(x, z) for (x, y) in r for (y2, z) in s if y == y2}


def brute_factor_pairs(n):
    """Pairs of partitions with trivial intersection and total composite.

    Straight from the relational definition, on sets of pairs.  Fine for n <= 5.
    """
    parts = list(set_partitions(n))
    rels = [as_pairs(p) for p in parts]
    delta = {(x, x) for x in range(n)}
    total = {(x, y) for x in range(n) for y in range(n)}
    out = []
    for (p, r), (q, s) in itertools.product(zip(parts, rels), repeat=2):
        if r & s == delta and compose(r, s) == total:
            out.append((p, q))
    return out


def count_factor_pairs_vectorized(n, chunk=200):
    """Same filter as ``brute_factor_pairs`` but on label arrays; fine for n <= 7.

    Trivial intersection: the n codes (l1, l2) are distinct.  Total composite:
    every block of one meets every block of the other, i.e. k1*k2 codes occur.
    """
    labels = np.array(list(set_partitions(n)), dtype=np.int64)
    ks = labels.max(axis=1) + 1
    total = 0
    for start in range(0, len(labels), chunk):
        a = labels[start:start + chunk]
        codes = np.sort(a[:, None, :] * n + labels[None, :, :], axis=2)
        distinct = 1 + (np.diff(codes, axis=2) != 0).sum(axis=2)
        kk = ks[start:start + chunk, None] * ks[None, :]
        total += int(((distinct == n) & (kk == distinct)).sum())
    return total


def ordered_factorizations(n, parts):
    if parts == 1:
        return [(n,)]
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out += [(d,) + rest for rest in ordered_factorizations(n // d, parts - 1)]
    return out


def count_decompositions(n, parts=2):
    """Bijections X -> K1 x ... x Kp up to relabelling each K_i: n! / prod(k_i!)."""
    return sum(factorial(n) // prod(factorial(k) for k in ks)
               for ks in ordered_factorizations(n, parts))


def brute_permute(r, s):
    return compose(r, s) == compose(s, r)


def brute_factx_leq(p, q):
    """(t1, t2) <= (p1, p2) on label tuples, from the definition."""
    t1, t2 = (as_pairs(x) for x in p)
    p1, p2 = (as_pairs(x) for x in q)
    if not (t1 <= p1 and p2 <= t2):
        return False
    rels = [t1, t2, p1, p2]
    return all(brute_permute(a, b) for a in rels for b in rels)


def brute_pushout_size(n, f, m, g, k):
    """Size of the pushout of f: n -> m and g: n -> k via naive class merging."""
    cls = list(range(m + k))
    changed = True
    while changed:
        changed = False
        for x in range(n):
            a, b = cls[f[x]], cls[m + g[x]]
            if a != b:
                lo, hi = min(a, b), max(a, b)
                cls = [lo if c == hi else c for c in cls]
                changed = True
    return len(set(cls))
