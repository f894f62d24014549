"""JSON readers and writers for lattices, orthoposets, orthoalgebras and rings."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .errors import FactError, FormatError
from .order import FinLattice, FinPoset, build_lattice, transitive_closure
from .ortho import OrthoAlgebra, OrthoPoset
from .ring_fact import FinRing, validate_ring


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _field(data: dict, name: str, kind=None):
    if not isinstance(data, dict):
        raise FormatError("top level must be a JSON object")
    if name not in data:
        raise FormatError(f"missing field {name!r}")
    value = data[name]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise FormatError(f"field {name!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise FormatError(f"field {name!r} must be a list")
    return value


def _size(data) -> int:
    n = _field(data, "n", int)
    if n < 1:
        raise FormatError("field 'n' must be positive")
    return n


def _pairs(data, name, n, arity=2):
    out = []
    for k, item in enumerate(_field(data, name, list)):
        if (not isinstance(item, list) or len(item) != arity
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)):
            raise FormatError(f"{name}[{k}] = {item!r} is not a list of {arity} integers")
        bad = [v for v in item if not 0 <= v < n]
        if bad:
            raise FormatError(f"{name}[{k}] = {item!r} names element {bad[0]} outside 0..{n - 1}")
        out.append(tuple(item))
    return out


def poset_from_dict(data: dict) -> FinPoset:
    """``{"n", "covers": [[i, j], ...]}`` (i covered by j) or ``{"n", "leq": [...]}``."""
    n = _size(data)
    if "covers" in data:
        name = "covers"
    elif "leq" in data:
        name = "leq"
    else:
        raise FormatError("need either 'covers' or 'leq'")
    pairs = _pairs(data, name, n)
    m = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        m[i, j] = True
    closed = transitive_closure(m)
    for i, j in pairs:
        if i != j and closed[j, i]:
            raise FormatError(f"{name} pair {[i, j]} closes a cycle")
    labels = data.get("labels")
    return FinPoset(closed, tuple(labels) if labels else None).validate()


def lattice_from_dict(data: dict) -> FinLattice:
    try:
        return build_lattice(poset_from_dict(data))
    except FormatError:
        raise
    except FactError as exc:
        raise FormatError(str(exc)) from exc


def lattice_to_dict(L: FinLattice) -> dict:
    pairs = [[int(i), int(j)] for i, j in np.argwhere(L.leq) if i != j]
    return {"n": L.n, "leq": pairs}


def omp_from_dict(data: dict) -> OrthoPoset:
    P = poset_from_dict(data)
    oc = _field(data, "ocomp", list)
    if len(oc) != P.n or not all(isinstance(v, int) and 0 <= v < P.n for v in oc):
        raise FormatError(f"'ocomp' must list {P.n} element ids")
    bots = np.flatnonzero(P.leq.all(axis=1))
    tops = np.flatnonzero(P.leq.all(axis=0))
    if bots.size != 1 or tops.size != 1:
        raise FormatError("orthoposet needs a unique bottom and top")
    return OrthoPoset(P, oc, int(bots[0]), int(tops[0]))


def omp_to_dict(P: OrthoPoset) -> dict:
    pairs = [[int(i), int(j)] for i, j in np.argwhere(P.leq) if i != j]
    return {"n": P.n, "leq": pairs, "ocomp": [int(v) for v in P.ocomp]}


def oa_from_dict(data: dict) -> OrthoAlgebra:
    n = _size(data)
    zero, one = _field(data, "zero", int), _field(data, "one", int)
    for name, v in (("zero", zero), ("one", one)):
        if not 0 <= v < n:
            raise FormatError(f"field {name!r} = {v} outside 0..{n - 1}")
    triples = _pairs(data, "oplus", n, arity=3)
    seen = {}
    for k, (a, b, c) in enumerate(triples):
        if seen.get((a, b), c) != c:
            raise FormatError(f"oplus[{k}] redefines {a}+{b}")
        seen[(a, b)] = c
    return OrthoAlgebra.from_triples(n, zero, one, triples)


def oa_to_dict(A: OrthoAlgebra) -> dict:
    return {"n": A.n, "zero": A.zero, "one": A.one,
            "oplus": [list(t) for t in A.triples()]}


def ring_from_dict(data: dict) -> FinRing:
    n = _size(data)
    tables = {}
    for name in ("add", "mul"):
        t = _field(data, name, list)
        arr = np.asarray(t, dtype=object)
        if arr.shape != (n, n):
            raise FormatError(f"field {name!r} must be an {n}x{n} table")
        for (i, j), v in np.ndenumerate(arr):
            if not isinstance(v, int) or not 0 <= v < n:
                raise FormatError(f"{name}[{i}][{j}] = {v!r} outside 0..{n - 1}")
        tables[name] = arr.astype(np.int64)
    zero, one = _field(data, "zero", int), _field(data, "one", int)
    try:
        return validate_ring(FinRing(tables["add"], tables["mul"], zero, one))
    except FactError as exc:
        raise FormatError(str(exc)) from exc


def ring_to_dict(R: FinRing) -> dict:
    return {"n": R.n, "add": R.add.tolist(), "mul": R.mul.tolist(),
            "zero": R.zero, "one": R.one}


def load(path: str | Path, kind: str):
    readers = {"lattice": lattice_from_dict, "omp": omp_from_dict,
               "oa": oa_from_dict, "ring": ring_from_dict}
    data = read_json(path)
    try:
        return readers[kind](data)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def dump(obj_dict: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(obj_dict, indent=1) + "\n", encoding="utf-8")
