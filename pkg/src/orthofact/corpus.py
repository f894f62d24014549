"""Generated test corpora and the aggregate invariant run over them.

A corpus is a plain list of generator calls.  Serialising it gives a
canonical JSON document, and rebuilding from that document reproduces the
same bytes, so a config file pins the exact instances that were checked.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FactError, FormatError, PreconditionFailed
from .finset_cat import DEFAULT_LIMIT, cat_section, claims_check, da_report, decomposition_oa, honesty_spot_check
from .lattice_fact import Mode, build_L2, complementary_pairs, lattice_section
from .order import (FinLattice, gen_boolean, gen_chain, gen_m3, gen_mo, gen_n5,
                    gen_subspace_lattice)
from .ortho import (OrthoPoset, check_oa, check_omp, interval_oa,
                    interval_omp, oa_to_orthoposet, omp_to_oa)
from .report import Report
from .ring_fact import (FinRing, build_ER, idempotents, orthogonal_idempotents_report,
                        ring_matrix, ring_section, ring_zn, ring_zn_product)
from .setfact import build_FactX, factx_vs_decompositions

LATTICE_GENS = {
    "boolean": (gen_boolean, ("k",)),
    "mo": (gen_mo, ("k",)),
    "m3": (gen_m3, ()),
    "n5": (gen_n5, ()),
    "chain": (gen_chain, ("k",)),
    "subspace": (gen_subspace_lattice, ("q", "d")),
}
RING_GENS = {
    "zn": (ring_zn, ("n",)),
    "product": (ring_zn_product, ("ns",)),
    "matrix": (ring_matrix, ("k", "p")),
}
# D(A) beyond this size is only sampled, never built
SET_LIMIT = DEFAULT_LIMIT
CLAIMS_LIMIT = 6


def _params(entry: dict, keys, where: str) -> list:
    missing = [k for k in keys if k not in entry]
    if missing:
        raise FormatError(f"{where}: missing field {missing[0]!r}")
    extra = set(entry) - set(keys) - {"gen", "mode"}
    if extra:
        raise FormatError(f"{where}: unknown field {sorted(extra)[0]!r}")
    return [entry[k] for k in keys]


@dataclass
class Corpus:
    lattices: list[dict] = field(default_factory=list)
    rings: list[dict] = field(default_factory=list)
    sets: list[int] = field(default_factory=list)
    seed: int | None = None

    @classmethod
    def from_dict(cls, data: dict) -> Corpus:
        if not isinstance(data, dict):
            raise FormatError("corpus config must be a JSON object")
        unknown = set(data) - {"lattices", "rings", "sets", "seed"}
        if unknown:
            raise FormatError(f"unknown corpus field {sorted(unknown)[0]!r}")
        c = cls([dict(e) for e in data.get("lattices", [])],
                [dict(e) for e in data.get("rings", [])],
                list(data.get("sets", [])), data.get("seed"))
        c.validate()
        return c

    @classmethod
    def from_json(cls, text: str) -> Corpus:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {exc.lineno}:{exc.colno}: {exc.msg}") from exc

    @classmethod
    def load(cls, path: str | Path) -> Corpus:
        try:
            return cls.from_json(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise FormatError(f"{path}: cannot read ({exc.strerror})") from exc
        except FormatError as exc:
            raise FormatError(f"{path}: {exc}") from exc

    def to_dict(self) -> dict:
        return {"lattices": self.lattices, "rings": self.rings,
                "sets": self.sets, "seed": self.seed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def validate(self) -> None:
        for i, e in enumerate(self.lattices):
            where = f"lattices[{i}]"
            if e.get("gen") not in LATTICE_GENS:
                raise FormatError(f"{where}: unknown generator {e.get('gen')!r}")
            _params(e, LATTICE_GENS[e["gen"]][1], where)
            if e.get("mode", "modular") not in ("modular", "symmetric"):
                raise FormatError(f"{where}: mode must be 'modular' or 'symmetric'")
        for i, e in enumerate(self.rings):
            where = f"rings[{i}]"
            if e.get("gen") not in RING_GENS:
                raise FormatError(f"{where}: unknown generator {e.get('gen')!r}")
            _params(e, RING_GENS[e["gen"]][1], where)
        for i, n in enumerate(self.sets):
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise FormatError(f"sets[{i}] = {n!r} is not a positive integer")

    # instances

    def lattice(self, i: int) -> tuple[FinLattice, Mode]:
        e = self.lattices[i]
        gen, keys = LATTICE_GENS[e["gen"]]
        return gen(*_params(e, keys, f"lattices[{i}]")), Mode(e.get("mode", "modular"))

    def ring(self, i: int) -> FinRing:
        e = self.rings[i]
        gen, keys = RING_GENS[e["gen"]]
        args = _params(e, keys, f"rings[{i}]")
        return gen(*args[0]) if e["gen"] == "product" else gen(*args)


def lattice_corpus() -> list[dict]:
    out = [{"gen": "boolean", "k": k} for k in range(5)]
    out += [{"gen": "mo", "k": k} for k in range(1, 5)]
    out += [{"gen": "m3"}]
    out += [{"gen": "subspace", "q": q, "d": d} for q, d in ((2, 2), (2, 3), (3, 2))]
    return out


def ring_corpus() -> list[dict]:
    out = [{"gen": "zn", "n": n} for n in range(1, 25)]
    seen = set()
    # products of two or three non-trivial cyclic rings up to size 64
    for a in range(2, 33):
        for b in range(a, 33):
            if a * b <= 64:
                seen.add((a, b))
            for c in range(b, 17):
                if a * b * c <= 64:
                    seen.add((a, b, c))
    out += [{"gen": "product", "ns": list(t)} for t in sorted(seen)]
    out += [{"gen": "matrix", "k": 2, "p": p} for p in (2, 3)]
    return out


def default_corpus() -> Corpus:
    return Corpus(lattice_corpus(), ring_corpus(), list(range(1, 9)))


# invariants shared by every orthostructure

def structure_checks(P: OrthoPoset, report: Report, intervals: bool = True) -> None:
    """Round trip through the OA form and axiom checks on every interval."""
    A = omp_to_oa(P, check=False)
    back, is_omp = oa_to_orthoposet(A, check=False)
    report.check("roundtrip_identity", back.same_as(P) and is_omp, report.subject)
    report.check("oa_axioms", check_oa(A).ok, report.subject)
    if not intervals:
        return
    report.require("interval_omp_axioms")
    report.require("interval_oa_axioms")
    for a in range(P.n):
        Q, _ = interval_omp(P, a)
        sub = check_omp(Q)
        if not sub.ok:
            report.fail("interval_omp_axioms", (report.subject, a, sub.failures))
        B, _ = interval_oa(A, a)
        sub = check_oa(B)
        if not sub.ok:
            report.fail("interval_oa_axioms", (report.subject, a, sub.failures))


def lattice_checks(L: FinLattice, mode: Mode, name: str) -> Report:
    r = Report(f"lattice {name} ({mode.value})")
    try:
        P = build_L2(L, mode)
    except PreconditionFailed as exc:
        r.fail("precondition", (name, str(exc)))
        return r
    r.merge(check_omp(P), prefix="L2_")
    structure_checks(P, r)
    r.require("sections")
    for pair in complementary_pairs(L, mode):
        cert = lattice_section(L, pair, mode)
        if not cert.ok:
            r.fail("sections", (name, list(pair), cert.report.failures))
    r.stats.update(L2_size=P.n)
    return r


def ring_checks(R: FinRing, name: str) -> Report:
    r = Report(f"ring {name}")
    P = build_ER(R)
    r.merge(check_omp(P), prefix="ER_")
    r.check("idempotents_scan", sorted(idempotents(R)) == sorted(int(v) for v in P.labels), name)
    structure_checks(P, r)
    r.merge(orthogonal_idempotents_report(R))
    r.require("sections")
    for e in P.labels:
        cert = ring_section(R, int(e))
        if not cert.ok:
            r.fail("sections", (name, int(e), cert.report.failures))
    r.stats.update(idempotents=P.n)
    return r


def set_checks(n: int, seed: int | None = None) -> Report:
    r = Report(f"set of size {n}", seed=seed)
    if n > SET_LIMIT:
        if seed is None:
            r.fail("precondition", (n, "sizes above the enumeration limit need a seed"))
        else:
            r.merge(honesty_spot_check(n, samples=50, seed=seed), prefix="honesty_")
        return r
    F = build_FactX(n)
    r.merge(check_omp(F), prefix="factx_")
    structure_checks(F, r)
    r.merge(factx_vs_decompositions(n).report, prefix="bridge_")
    r.merge(da_report(n), prefix="D_")
    D = decomposition_oa(n)
    r.require("D_interval_oa_axioms")
    for a in range(len(D)):
        B, _ = interval_oa(D.oa, a)
        if not check_oa(B).ok:
            r.fail("D_interval_oa_axioms", (n, a))
    r.merge(honesty_spot_check(n), prefix="honesty_")
    if n <= CLAIMS_LIMIT:
        r.merge(claims_check(n), prefix="claims_")
    r.require("cat_sections")
    for h in range(len(D)):
        cert = cat_section(n, h)
        if not cert.ok:
            r.fail("cat_sections", (n, h, cert.report.failures))
    r.stats.update(factx_size=F.n)
    return r


def corpus_run(config: Corpus | dict | str | Path | None = None) -> Report:
    """Run every module's invariants over the corpus; verdicts are ANDed per name."""
    if config is None:
        corpus = default_corpus()
    elif isinstance(config, Corpus):
        corpus = config
    elif isinstance(config, dict):
        corpus = Corpus.from_dict(config)
    else:
        corpus = Corpus.load(config)
    r = Report("corpus", seed=corpus.seed)
    r.stats.update(lattices=0, rings=0, sets=0, elapsed_ms=0)
    t0 = time.perf_counter()
    for i, e in enumerate(corpus.lattices):
        L, mode = corpus.lattice(i)
        name = json.dumps(e, sort_keys=True)
        r.merge(lattice_checks(L, mode, name), prefix="lattice_")
        r.stats["lattices"] += 1
    for i, e in enumerate(corpus.rings):
        try:
            R = corpus.ring(i)
        except FactError as exc:
            r.fail("ring_precondition", (i, str(exc)))
            continue
        r.merge(ring_checks(R, json.dumps(e, sort_keys=True)), prefix="ring_")
        r.stats["rings"] += 1
    for n in corpus.sets:
        r.merge(set_checks(n, corpus.seed), prefix="set_")
        r.stats["sets"] += 1
    if corpus.lattices or corpus.rings or corpus.sets:
        r.stats["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    return r
