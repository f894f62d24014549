"""Verdict reports and section certificates.

A :class:`Report` collects named boolean verdicts, the witnesses that
explain every failed verdict, integer statistics and an optional seed.
Reports serialize to a versioned JSON document and parse back to an equal
object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA = "fact-report/1"

#: witnesses kept per verdict; the total count is still recorded in stats
MAX_WITNESSES = 8


def _plain(value):
    # JSON has no tuples; normalise so parse(emit(r)) == r
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if hasattr(value, "item"):  # numpy scalar
        return value.item()
    return value


@dataclass
class Report:
    subject: str
    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, list] = field(default_factory=dict)
    stats: dict[str, int] = field(default_factory=dict)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, v in self.verdicts.items() if not v]

    def check(self, name: str, passed: bool, witness: Any = None) -> bool:
        """Record one verdict; ``witness`` is required when it fails."""
        passed = bool(passed)
        self.verdicts[name] = self.verdicts.get(name, True) and passed
        if not passed:
            self.witness(name, witness if witness is not None else "unspecified")
        return passed

    def witness(self, name: str, item: Any) -> None:
        bucket = self.witnesses.setdefault(name, [])
        if len(bucket) < MAX_WITNESSES:
            bucket.append(_plain(item))
        key = f"{name}_violations"
        self.stats[key] = self.stats.get(key, 0) + 1

    def require(self, name: str) -> None:
        """Register a verdict that starts green and may later be failed."""
        self.verdicts.setdefault(name, True)

    def fail(self, name: str, witness: Any) -> None:
        self.check(name, False, witness)

    def merge(self, other: Report, prefix: str = "") -> None:
        for name, v in other.verdicts.items():
            key = prefix + name
            self.verdicts[key] = self.verdicts.get(key, True) and v
        for name, items in other.witnesses.items():
            bucket = self.witnesses.setdefault(prefix + name, [])
            bucket.extend(items[: MAX_WITNESSES - len(bucket)])
        for name, value in other.stats.items():
            self.stats[prefix + name] = self.stats.get(prefix + name, 0) + value

    # serialization

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "subject": self.subject,
            "ok": self.ok,
            "verdicts": dict(self.verdicts),
            "witnesses": _plain(self.witnesses),
            "stats": {k: int(v) for k, v in self.stats.items()},
            "seed": self.seed,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            subject=data["subject"],
            verdicts={k: bool(v) for k, v in data["verdicts"].items()},
            witnesses={k: list(v) for k, v in data["witnesses"].items()},
            stats={k: int(v) for k, v in data["stats"].items()},
            seed=data.get("seed"),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"]
        for name, v in self.verdicts.items():
            lines.append(f"  [{'ok' if v else 'FAIL'}] {name}")
            if not v:
                for w in self.witnesses.get(name, []):
                    lines.append(f"        witness: {w}")
        if self.stats:
            stats = ", ".join(f"{k}={v}" for k, v in self.stats.items())
            lines.append(f"  stats: {stats}")
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()


@dataclass
class SectionCertificate:
    """An explicit pair of maps between an interval and a derived structure.

    ``gamma`` sends interval ids to codomain ids, ``phi`` goes back.  The
    structures themselves are kept so callers can re-verify the maps.
    """

    report: Report
    domain: Any
    codomain: Any
    gamma: dict[int, int]
    phi: dict[int, int]
    domain_index: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return self.report.ok
