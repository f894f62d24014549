"""The ``fact`` command.

Exit status is 0 when every verdict holds, 1 when some verdict fails and
2 for usage or input-format errors.  A text summary goes to stdout; with
``--out`` the JSON report is written as well.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .corpus import Corpus, corpus_run
from .errors import FactError, FormatError, LimitExceeded, UsageError
from .finset_cat import DEFAULT_LIMIT, cat_section, claims_check, da_report, enumerate_D, honesty_spot_check
from .lattice_fact import Mode, l2_report, lattice_section
from .ortho import check_oa, check_omp, oa_to_orthoposet
from .report import Report
from .ring_fact import er_report, ring_matrix, ring_section, ring_zn
from .setfact import factx_report, factx_vs_decompositions, set_section

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    p.add_argument("--out", type=Path, default=None, help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fact", description="Check orthomodular structures built from factorizations.")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("lattice", help="L^(2) of a lattice file")
    p.add_argument("file", type=Path)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="modular")
    p.add_argument("--section", nargs=2, type=int, metavar=("A", "B"))
    _common(p)

    p = sub.add_parser("ring", help="E(R) of a ring: zn <n> | mat <k> <p> | <file>")
    p.add_argument("source", nargs="+")
    p.add_argument("--section", type=int, metavar="E", help="ring id of an idempotent")
    _common(p)

    p = sub.add_parser("set", help="Fact X of an n-element set")
    p.add_argument("n", type=int)
    p.add_argument("--bridge", action="store_true", help="compare with D(X)")
    p.add_argument("--section", type=int, metavar="I", help="index into Fact X")
    _common(p)

    p = sub.add_parser("cat", help="D(A) of an n-element set")
    p.add_argument("n", type=int)
    p.add_argument("--honesty", action="store_true")
    p.add_argument("--claims", action="store_true")
    p.add_argument("--section", type=int, metavar="IDX", help="decomposition index from --list")
    p.add_argument("--list", action="store_true", help="print the decomposition enumeration")
    p.add_argument("--samples", type=int, default=None, help="sample honesty (needs --seed)")
    _common(p)

    for name in ("omp", "oa"):
        p = sub.add_parser(name, help=f"check an {name.upper()} file")
        p.add_argument("file", type=Path)
        _common(p)

    p = sub.add_parser("corpus", help="run every invariant over a corpus config")
    p.add_argument("config", type=Path)
    _common(p)
    return parser


def _ring(source: list[str]):
    try:
        if source[0] == "zn" and len(source) == 2:
            return ring_zn(int(source[1]))
        if source[0] == "mat" and len(source) == 3:
            return ring_matrix(int(source[1]), int(source[2]))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if len(source) == 1:
        return io.load(source[0], "ring")
    raise UsageError("ring takes 'zn <n>', 'mat <k> <p>' or a file")


def _cmd_lattice(a) -> list[Report]:
    L = io.load(a.file, "lattice")
    out = [l2_report(L, a.mode)]
    if a.section:
        out.append(lattice_section(L, tuple(a.section), a.mode).report)
    return out


def _cmd_ring(a) -> list[Report]:
    R = _ring(a.source)
    out = [er_report(R)]
    if a.section is not None:
        if not 0 <= a.section < R.n:
            raise UsageError(f"--section {a.section} is outside 0..{R.n - 1}")
        out.append(ring_section(R, a.section).report)
    return out


def _cmd_set(a) -> list[Report]:
    out = [factx_report(a.n)]
    if a.bridge:
        out.append(factx_vs_decompositions(a.n).report)
    if a.section is not None:
        out.append(set_section(a.n, a.section).report)
    return out


def _cmd_cat(a) -> list[Report]:
    if a.list:
        for i, d in enumerate(enumerate_D(a.n)):
            print(f"{i}\t{d.kernel1}\t{d.kernel2}")
    if a.samples is not None and a.seed is None:
        raise UsageError("--samples needs an explicit --seed")
    sampled_only = a.samples is not None and a.n > DEFAULT_LIMIT
    out = [] if sampled_only else [da_report(a.n)]
    if a.honesty or sampled_only:
        out.append(honesty_spot_check(a.n, samples=a.samples, seed=a.seed))
    if a.claims:
        out.append(claims_check(a.n))
    if a.section is not None:
        out.append(cat_section(a.n, a.section).report)
    return out


def _cmd_omp(a) -> list[Report]:
    return [check_omp(io.load(a.file, "omp"), Report(f"OMP {a.file}"))]


def _cmd_oa(a) -> list[Report]:
    A = io.load(a.file, "oa")
    r = check_oa(A, Report(f"OA {a.file}"))
    if r.ok:
        _, is_omp = oa_to_orthoposet(A, check=False)
        r.stats["induced_orthoposet_is_omp"] = int(is_omp)
    return [r]


def _cmd_corpus(a) -> list[Report]:
    corpus = Corpus.load(a.config)
    if a.seed is not None:
        corpus.seed = a.seed
    return [corpus_run(corpus)]


COMMANDS = {"lattice": _cmd_lattice, "ring": _cmd_ring, "set": _cmd_set, "cat": _cmd_cat,
            "omp": _cmd_omp, "oa": _cmd_oa, "corpus": _cmd_corpus}


def _combine(reports: list[Report], argv: list[str]) -> Report:
    if len(reports) == 1:
        return reports[0]
    seed = next((x.seed for x in reports if x.seed is not None), None)
    r = Report("fact " + " ".join(argv), seed=seed)
    for i, sub in enumerate(reports):
        r.merge(sub, prefix=f"{i}.")
    return r


def run(argv: list[str] | None = None) -> tuple[int, Report | None]:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        reports = COMMANDS[args.cmd](args)
    except (UsageError, FormatError, LimitExceeded) as exc:
        print(f"fact: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    except FactError as exc:
        # a structural precondition failed: report it as a red verdict
        r = Report("fact " + " ".join(argv))
        r.fail("precondition", [type(exc).__name__, str(exc)])
        reports = [r]
    except ValueError as exc:
        print(f"fact: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    for r in reports:
        if args.seed is not None and r.seed is None:
            r.seed = args.seed
        print(r.to_text())
    report = _combine(reports, argv)
    if args.out is not None:
        try:
            args.out.write_text(report.to_json() + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"fact: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE, report
    return (EXIT_OK if report.ok else EXIT_FAIL), report


def main(argv: list[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
