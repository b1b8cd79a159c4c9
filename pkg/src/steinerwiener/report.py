"""Report assembly and JSON serialisation; exact numbers always travel as strings."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from fractions import Fraction
from importlib import resources
from typing import Any

SCHEMA_VERSION = "1.0"
KEY_ORDER = (
    "schema_version",
    "command",
    "graph",
    "suite",
    "k_range",
    "metrics",
    "identities",
    "diagnostics",
    "skipped",
    "passed",
)


def exact(value: int | Fraction) -> str:
    """Integers as decimal strings, rationals as ``p/q`` in lowest terms."""
    if isinstance(value, bool):
        raise TypeError("booleans are not exact numbers")
    return str(Fraction(value))


def exact_vector(values) -> dict[str, str]:
    return {str(v): exact(x) for v, x in enumerate(values)}


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("steinerwiener").joinpath("report.schema.json").read_text())


class Report:
    def __init__(self, command: str, graph, timings: bool = False):
        self.data: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "graph": {
                "n": graph.n,
                "m": graph.m,
                "family": graph.family,
                "is_tree": graph.is_tree(),
            },
            "metrics": {},
            "identities": [],
        }
        self._timings: dict[str, float] | None = {} if timings else None

    def __setitem__(self, key: str, value: Any) -> None:
        self.data[key] = value

    @contextmanager
    def timed(self, label: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            if self._timings is not None:
                elapsed = (time.perf_counter() - start) * 1000.0
                self._timings[label] = round(self._timings.get(label, 0.0) + elapsed, 3)

    def metric(self, name: str, value: Any) -> None:
        self.data["metrics"][name] = value

    def identity(self, name: str, theorem: str, lhs, rhs) -> bool:
        """Record lhs = rhs; vectors compare entrywise, residual is the largest gap."""
        if isinstance(lhs, (list, tuple)):
            gaps = [Fraction(a) - Fraction(b) for a, b in zip(lhs, rhs)]
            residual = max(gaps, key=abs, default=Fraction(0))
            ok = len(lhs) == len(rhs) and all(g == 0 for g in gaps)
            if len(lhs) != len(rhs):
                residual = Fraction(max(len(lhs), len(rhs)))
            lhs_s = "[" + ", ".join(exact(x) for x in lhs) + "]"
            rhs_s = "[" + ", ".join(exact(x) for x in rhs) + "]"
        else:
            residual = Fraction(lhs) - Fraction(rhs)
            ok = residual == 0
            lhs_s, rhs_s = exact(lhs), exact(rhs)
        self.data["identities"].append(
            {
                "name": name,
                "theorem": theorem,
                "lhs": lhs_s,
                "rhs": rhs_s,
                "residual": exact(residual),
                "pass": ok,
            }
        )
        return ok

    def diagnostic(self, name: str, lhs, rhs, note: str | None = None) -> None:
        entry: dict[str, Any] = {"name": name}
        if note:
            entry["note"] = note
        entry.update(lhs=exact(lhs), rhs=exact(rhs), difference=exact(Fraction(lhs) - Fraction(rhs)))
        self.data.setdefault("diagnostics", []).append(entry)

    def skip(self, suite: str, reason: str) -> None:
        self.data.setdefault("skipped", []).append({"suite": suite, "reason": reason})

    @property
    def all_passed(self) -> bool:
        return all(entry["pass"] for entry in self.data["identities"])

    def to_json(self) -> str:
        out = {key: self.data[key] for key in KEY_ORDER if key in self.data}
        if self._timings is not None:
            out["timings_ms"] = dict(self._timings)
        return json.dumps(out, indent=2)
