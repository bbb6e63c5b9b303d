"""Residual reports shared by every checker in the package."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

from .exactlinalg import format_rational


def basis_label(grade: int, index: int) -> str:
    """``e3`` for the third basis vector of degree 0, ``f1`` for degree -1."""
    return f"{'e' if grade == 0 else 'f'}{index + 1}"


def _exact(v) -> str:
    try:
        return format_rational(v)
    except (TypeError, ValueError):
        return repr(v)


def _fmt(v) -> str:
    """Human display; ``LIE2_RATIONAL_STYLE=decimal`` shows rounded decimals."""
    if os.environ.get("LIE2_RATIONAL_STYLE", "fraction") == "decimal":
        try:
            return f"{float(v):.6g}"
        except (TypeError, ValueError):
            pass
    return _exact(v)


@dataclass(frozen=True)
class Violation:
    """One basis tuple on which an identity does not hold."""

    condition: str
    basis: tuple[str, ...]
    residual: tuple

    def describe(self) -> str:
        res = ", ".join(_fmt(v) for v in self.residual)
        return f"{self.condition} fails at ({', '.join(self.basis)}): residual [{res}]"


@dataclass
class AxiomReport:
    """Per-condition verdicts with exact residual witnesses.

    A condition passes iff it recorded no violation, i.e. all its residuals
    were exactly zero.
    """

    conditions: dict[str, list[Violation]] = field(default_factory=dict)

    def declare(self, name: str) -> None:
        self.conditions.setdefault(name, [])

    def record(self, name: str, basis: Iterable[str], residual) -> None:
        self.conditions.setdefault(name, []).append(
            Violation(name, tuple(basis), tuple(residual)))

    @property
    def passed(self) -> bool:
        return not any(self.conditions.values())

    def ok(self, name: str) -> bool:
        return not self.conditions[name]

    def failed(self) -> list[str]:
        return [k for k, v in self.conditions.items() if v]

    def first_failure(self) -> Violation | None:
        for v in self.conditions.values():
            if v:
                return v[0]
        return None

    def merge(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for k, v in other.conditions.items():
            name = prefix + k
            self.declare(name)
            self.conditions[name].extend(
                Violation(name, w.basis, w.residual) for w in v)
        return self

    def lines(self) -> list[str]:
        out = []
        for name, viol in self.conditions.items():
            if viol:
                out.append(f"FAIL {name}: {viol[0].describe()}"
                           + (f" (+{len(viol) - 1} more)" if len(viol) > 1 else ""))
            else:
                out.append(f"PASS {name}")
        return out

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "conditions": {
                name: {
                    "passed": not viol,
                    "witnesses": [
                        {"basis": list(w.basis), "residual": [_exact(r) for r in w.residual]}
                        for w in viol[:10]
                    ],
                    "violations": len(viol),
                }
                for name, viol in self.conditions.items()
            },
        }


class StructureError(ValueError):
    """Input data violates an identity it is required to satisfy.

    ``report`` holds the failing :class:`AxiomReport`, so the witness tuple
    and exact residual are available to callers.
    """

    def __init__(self, message: str, report: AxiomReport | None = None):
        self.report = report
        if report is not None and report.first_failure() is not None:
            message = f"{message}: {report.first_failure().describe()}"
        super().__init__(message)
