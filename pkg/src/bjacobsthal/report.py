from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

from .jsonio import encode


@dataclass
class IdentityReport:
    """Verdict of one identity check: both sides and whether they agree exactly."""

    identity: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    equal: bool
    detail: str = field(default="", compare=False)

    @classmethod
    def compare(cls, identity: str, params: dict, lhs, rhs, detail: str = "") -> IdentityReport:
        # canonical forms make structural equality decide lhs - rhs == 0
        return cls(identity, dict(params), lhs, rhs, lhs == rhs, detail)

    def sort_key(self) -> tuple:
        return (self.identity, tuple(sorted(self.params.items())))

    def without_sides(self) -> IdentityReport:
        return replace(self, lhs=None, rhs=None)

    def to_json(self, sides: bool = True) -> dict:
        out = {"identity": self.identity, "params": self.params, "equal": self.equal}
        if sides:
            out["lhs"] = encode(self.lhs)
            out["rhs"] = encode(self.rhs)
        if self.detail:
            out["detail"] = self.detail
        return out
