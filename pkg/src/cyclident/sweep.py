"""Parameter grids over one identity, evaluated in deterministic order."""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .cyclotomic import multiplicative_order
from .identities import ANGLE_PARAM, REGISTRY, default_mode, run_identity, sun_order
from .numeric import DEFAULT_PRECISION_BITS, SamplePlan, derive_seed, draw_sample_points
from .report import IdentityReport, canonical_param_order

SYMBOLIC_EXPONENTS = ("all", "primitive", "admissible")


@dataclass
class SweepSpec:
    identity: str
    ranges: dict[str, list | str] = field(default_factory=dict)
    mode: str | None = None  # exact, numeric, both; None picks the identity's default
    precision_bits: int = DEFAULT_PRECISION_BITS
    output_format: str = "human"
    parallelism: int = 1
    seed: int = 0
    samples: int = 1  # seeded angles per cell when no angle range is given
    cap: int | None = None  # max root exponents per order for symbolic ranges


def parse_range(text: str) -> tuple[str, list | str]:
    """``n=1:49:2`` (inclusive), ``m=1,2,5``, ``a=primitive``, ``theta=1/3pi,0.5``."""
    if "=" not in text:
        raise ValueError(f"range {text!r} must look like name=values")
    name, spec = (s.strip() for s in text.split("=", 1))
    if not name or not spec:
        raise ValueError(f"range {text!r} is empty")
    if name == "root_exp":
        name = "a"
    if spec in SYMBOLIC_EXPONENTS:
        if name != "a":
            raise ValueError(f"{spec!r} is only meaningful for the root exponent a")
        return name, spec
    if name in ("theta", "x"):
        return name, [v.strip() for v in spec.split(",") if v.strip()]
    if ":" in spec:
        parts = [int(p) for p in spec.split(":")]
        if len(parts) == 2:
            parts.append(1)
        if len(parts) != 3 or parts[2] == 0:
            raise ValueError(f"bad range {spec!r}; use min:max[:step]")
        lo, hi, step = parts
        values = list(range(lo, hi + (1 if step > 0 else -1), step))
    else:
        values = [int(v) for v in spec.split(",") if v.strip()]
    if not values:
        raise ValueError(f"range {text!r} has no values")
    return name, values


def implied_order(identity: str, params: dict) -> int | None:
    """Order of the root of unity the identity is evaluated at."""
    n = params.get("n")
    if identity == "eq11":
        return 3 * n + 2
    if identity in ("eq12", "eq18"):
        return 6 * n + 4
    if identity == "eq13":
        return sun_order(params["m"], n, params["delta"])
    if identity == "eq17":
        return params["m"] * n + params["l"]
    return params.get("order")


def _exponents(identity: str, kind: str, params: dict, cap: int | None) -> list[int]:
    order = implied_order(identity, params)
    if order is None or order < 1:
        return []
    if kind == "all":
        exps = list(range(order))
    elif kind == "primitive":
        exps = [a for a in range(order) if math.gcd(a, order) == 1]
    else:
        n = params.get("n", 0)
        step = 2 if identity == "sine_ratio" else 1
        exps = [a for a in range(order) if multiplicative_order(order, step * a) > n]
    return exps[:cap] if cap else exps


def _modes(spec: SweepSpec) -> list[str]:
    available = REGISTRY[spec.identity]
    if spec.mode in (None, ""):
        return [default_mode(spec.identity)]
    if spec.mode == "both":
        return [m for m in ("exact", "numeric") if m in available]
    if spec.mode not in available:
        raise ValueError(f"identity {spec.identity} has no {spec.mode} mode")
    return [spec.mode]


def expand(spec: SweepSpec) -> Iterator[tuple[str, dict]]:
    """Yield (mode, params) cells in grid order."""
    if spec.identity not in REGISTRY:
        raise ValueError(f"unknown identity {spec.identity!r}")
    for mode in _modes(spec):
        names, _ = REGISTRY[spec.identity][mode]
        angle = ANGLE_PARAM.get(spec.identity) if mode == "numeric" else None
        fixed = [p for p in names if p not in ("a", angle)]
        missing = [p for p in fixed if p not in spec.ranges]
        if missing:
            raise ValueError(f"sweep over {spec.identity} ({mode}) needs range(s) for: {', '.join(missing)}")
        grids = [spec.ranges[p] for p in fixed]
        if any(isinstance(g, str) for g in grids):
            raise ValueError("symbolic ranges are only allowed for a")
        for combo in itertools.product(*grids):
            params = dict(zip(fixed, combo))
            if "a" in names:
                arange = spec.ranges.get("a", "primitive")
                exps = _exponents(spec.identity, arange, params, spec.cap) if isinstance(arange, str) else arange
                for a in exps:
                    yield mode, {**params, "a": a}
            elif angle:
                if angle in spec.ranges:
                    points = spec.ranges[angle]
                else:
                    plan_cls = SamplePlan.for_unit_circle if angle == "theta" else SamplePlan.for_cot_argument
                    n = params.get("n", 1)
                    plan = plan_cls(max(n, 1), derive_seed(spec.seed, spec.identity, n), spec.samples)
                    points = [f"{t}pi" for t in draw_sample_points(plan)]
                for p in points:
                    yield mode, {**params, angle: p}
            else:
                yield mode, params


def _evaluate(job: tuple[str, str, dict, int]) -> IdentityReport:
    identity, mode, params, precision_bits = job
    return run_identity(identity, mode, params, precision_bits)


def run_sweep(spec: SweepSpec) -> list[IdentityReport]:
    """Evaluate every cell; results come back in grid order."""
    jobs = [(spec.identity, mode, params, spec.precision_bits) for mode, params in expand(spec)]
    if spec.parallelism > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.parallelism) as pool:
            chunk = max(1, len(jobs) // (4 * spec.parallelism))
            return list(pool.map(_evaluate, jobs, chunksize=chunk))
    return [_evaluate(j) for j in jobs]


def summarize(reports: list[IdentityReport]) -> dict[str, int]:
    counts = {"total": len(reports), "passed": 0, "failed": 0, "inapplicable": 0}
    for r in reports:
        key = {"pass": "passed", "fail": "failed"}.get(r.status, "inapplicable")
        counts[key] += 1
    return counts


def param_columns(reports: list[IdentityReport]) -> list[str]:
    names = set()
    for r in reports:
        names.update(r.params)
    return canonical_param_order(names)
