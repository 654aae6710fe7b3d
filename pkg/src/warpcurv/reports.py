"""Structured pass/fail records shared by every verification routine."""

from dataclasses import dataclass, field

__all__ = ["CheckReport"]


@dataclass
class CheckReport:
    """Outcome of one identity or inequality check.

    For identities ``pass`` means |residual| <= tolerance; for one-sided
    inequality checks it means residual >= -tolerance (the residual is the
    slack, nonnegative when the inequality holds).
    """

    name: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool
    kind: str = "identity"  # "identity" | "inequality"
    metadata: dict = field(default_factory=dict)

    @classmethod
    def identity(cls, name, lhs, rhs, tolerance, **metadata):
        residual = lhs - rhs
        return cls(name, float(lhs), float(rhs), float(residual), tolerance,
                   abs(residual) <= tolerance, "identity", metadata)

    @classmethod
    def inequality(cls, name, slack, tolerance, **metadata):
        return cls(name, float(slack), 0.0, float(slack), tolerance,
                   slack >= -tolerance, "inequality", metadata)

    def to_dict(self):
        return {
            "name": self.name,
            "kind": self.kind,
            "lhs": float(self.lhs),
            "rhs": float(self.rhs),
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "pass": bool(self.passed),
            "metadata": {k: _plain(v) for k, v in self.metadata.items()},
        }


def _plain(value):
    """Coerce numpy scalars/arrays to JSON-friendly builtins."""
    if hasattr(value, "tolist"):
        return value.tolist()
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value
