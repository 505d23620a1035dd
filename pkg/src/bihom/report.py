"""Per-axiom verdicts with concrete witnesses on every failure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CheckEntry:
    axiom: str
    passed: bool
    # witness = (index tuple, evaluated left side, evaluated right side)
    witness: Optional[tuple] = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failing axiom {self.axiom!r} needs a witness")


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)

    def add(self, axiom: str, passed: bool, witness=None):
        self.entries.append(CheckEntry(axiom, bool(passed), witness))
        return self

    def add_eq(self, axiom: str, index, lhs, rhs):
        """Record an equality check; lhs/rhs may be scalars or vectors."""
        ok = lhs == rhs
        self.entries.append(
            CheckEntry(axiom, ok, None if ok else (index, lhs, rhs))
        )
        return self

    def merge(self, other: "CheckReport", prefix: str = ""):
        for e in other.entries:
            self.entries.append(
                CheckEntry(prefix + e.axiom if prefix else e.axiom, e.passed, e.witness)
            )
        return self

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def axiom_ids(self):
        return [e.axiom for e in self.entries]

    def entry(self, axiom: str) -> CheckEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def format(self, fmt=str, verbose=False, witness_limit=None) -> str:
        """Render as one PASS/FAIL line per axiom.

        fmt formats a scalar/vector witness component; verbose includes
        passing axioms; witness_limit caps the number of detailed failures.
        """
        lines = []
        shown = 0
        for e in self.entries:
            if e.passed:
                if verbose:
                    lines.append(f"PASS {e.axiom}")
                continue
            if witness_limit is not None and shown >= witness_limit:
                lines.append(f"FAIL {e.axiom}")
                continue
            idx, lhs, rhs = e.witness
            lines.append(
                f"FAIL {e.axiom} @ {idx}: lhs={_fmt_val(lhs, fmt)} rhs={_fmt_val(rhs, fmt)}"
            )
            shown += 1
        summary = "ALL PASS" if self.ok else f"{len(self.failures())} FAILED"
        lines.append(f"{summary} ({len(self.entries)} axioms checked)")
        return "\n".join(lines)

    def __str__(self):
        return self.format(verbose=False)


def _fmt_val(v, fmt):
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_fmt_val(x, fmt) for x in v) + ")"
    return fmt(v)
