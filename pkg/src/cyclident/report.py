"""Structured verification results and their JSON / CSV encodings."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

IDENTITY_IDS = (
    "eq11", "eq12", "eq13", "eq14", "eq15", "eq16", "eq17", "eq18",
    "lemma21", "eq22", "cos_sum", "sine_ratio", "cor11_expanded",
)
STATUSES = ("pass", "fail", "inapplicable")
JSON_KEYS = (
    "identity", "params", "mode", "expected", "computed_real",
    "computed_imag", "residual", "status", "micros",
)
PARAM_ORDER = ("l", "m", "n", "delta", "order", "a", "theta", "x", "precision_bits", "tolerance", "normalization")


class Inapplicable(ValueError):
    """Parameters fall outside an identity's hypotheses."""


def _text(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return str(value)


@dataclass
class IdentityReport:
    identity: str
    params: dict[str, Any]
    mode: str
    expected: Fraction
    computed_real: Fraction | str | None = None
    computed_imag: Fraction | str | None = None
    residual: str | None = None
    status: str = "fail"
    micros: int = 0
    detail: str = ""  # human-readable note; not part of the JSON schema

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        params = {k: (v if isinstance(v, int) else _text(v)) for k, v in self.params.items()}
        return {
            "identity": self.identity,
            "params": params,
            "mode": self.mode,
            "expected": _text(self.expected),
            "computed_real": _text(self.computed_real),
            "computed_imag": _text(self.computed_imag),
            "residual": self.residual,
            "status": self.status,
            "micros": int(self.micros),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "IdentityReport":
        return cls(
            identity=data["identity"],
            params=dict(data["params"]),
            mode=data["mode"],
            expected=Fraction(data["expected"]),
            computed_real=data["computed_real"],
            computed_imag=data["computed_imag"],
            residual=data["residual"],
            status=data["status"],
            micros=data["micros"],
        )

    def human(self) -> str:
        params = " ".join(f"{k}={_text(v)}" for k, v in self.params.items())
        line = (
            f"{'[' + self.status.upper() + ']':<14} {self.identity:<14} {self.mode:<7} {params}"
            f" | expected {_text(self.expected)}"
        )
        if self.computed_real is not None:
            line += f" computed {_text(self.computed_real)}"
        if self.computed_imag is not None:
            line += f" imag {_text(self.computed_imag)}"
        if self.residual is not None:
            line += f" residual {self.residual}"
        if self.detail:
            line += f" ({self.detail})"
        return line


CSV_COLUMNS_TAIL = ("mode", "expected", "computed_real", "computed_imag", "residual", "status", "micros")


def csv_header(param_names) -> list[str]:
    return ["identity_id", *param_names, *CSV_COLUMNS_TAIL]


def csv_row(report: IdentityReport, param_names) -> list[str]:
    d = report.to_dict()
    row = [report.identity]
    row += ["" if d["params"].get(p) is None else str(d["params"][p]) for p in param_names]
    row += ["" if d[k] is None else str(d[k]) for k in CSV_COLUMNS_TAIL]
    return row


def canonical_param_order(names) -> list[str]:
    known = [p for p in PARAM_ORDER if p in names]
    return known + sorted(p for p in names if p not in PARAM_ORDER)


@contextmanager
def timed(report: IdentityReport):
    """Time the body; an Inapplicable raised inside marks the report."""
    start = time.perf_counter_ns()
    try:
        yield report
    except Inapplicable as exc:
        report.status = "inapplicable"
        report.detail = str(exc)
    finally:
        report.micros = (time.perf_counter_ns() - start) // 1000

