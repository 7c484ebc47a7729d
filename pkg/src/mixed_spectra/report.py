from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

IDENTITY = "identity"
BOUND = "bound"
EXPLORATORY = "exploratory"


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one check on one graph.

    ``kind`` separates exact identities (a failure is a bug), proven bounds
    (a failure is a finding) and exploratory evaluations that are recorded
    without pass/fail consequences.
    """

    name: str
    kind: str
    applicable: bool
    holds: bool
    lhs: Any = None
    rhs: Any = None
    slack: float | None = None
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.holds and not self.applicable:
            raise ValueError(f"{self.name}: holds=True on an inapplicable check")

    @classmethod
    def inapplicable(cls, name: str, kind: str, reason: str) -> TheoremReport:
        return cls(name, kind, applicable=False, holds=False, witness=reason)

    @property
    def failed(self) -> bool:
        return self.applicable and not self.holds

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "applicable": self.applicable,
            "holds": self.holds,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "slack": _jsonable(self.slack),
            "witness": _jsonable(self.witness),
            "details": _jsonable(self.details),
        }

    def line(self) -> str:
        parts = [
            f"{self.name:<28}",
            f"applicable={str(self.applicable).lower()}",
            f"holds={str(self.holds).lower()}",
        ]
        for key, val in self.details.items():
            if isinstance(val, bool):
                parts.append(f"{key}={str(val).lower()}")
        if self.lhs is not None:
            parts.append(f"lhs={_fmt(self.lhs)}")
        if self.rhs is not None:
            parts.append(f"rhs={_fmt(self.rhs)}")
        if self.slack is not None:
            parts.append(f"slack={self.slack:.3e}")
        if self.failed and self.kind == EXPLORATORY:
            parts.append("FINDING")
        return " ".join(parts)


def _fmt(x: Any) -> str:
    if isinstance(x, float):
        return f"{x:.6f}"
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_fmt(v) for v in x) + "]"
    return str(x)


def _jsonable(x: Any) -> Any:
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return round(x, 12)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, frozenset, set)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if hasattr(x, "item"):
        return _jsonable(x.item())
    return str(x)
