"""
Result records for action tables and verification runs.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from .algebra import LieType, Weight


@dataclass(frozen=True)
class ActionTable:
    """Per-coweight maps on the admissible weights of one (type, level)"""
    lie_type: LieType
    level: int
    admissible: Tuple[Weight, ...]
    maps: Dict[int, Dict[Weight, Weight]] = field(default_factory=dict)

    @property
    def coweights(self) -> List[int]:
        return sorted(self.maps)

    def image(self, coweight: int, weight: Weight) -> Weight:
        return self.maps[coweight][weight]

    def coweight_map(self, coweight: int) -> Dict[str, Any]:
        """One coweight's map in the exported table schema."""
        return {
            "algebra": {"family": self.lie_type.family, "rank": self.lie_type.rank},
            "level": self.level,
            "coweight": coweight,
            "map": [{"from": list(w), "to": list(self.image(coweight, w))} for w in self.admissible],
        }

    def to_dict(self) -> List[Dict[str, Any]]:
        """Every coweight map, by increasing coweight index."""
        return [self.coweight_map(i) for i in self.coweights]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named verification check"""
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    """All checks run for one Lie type"""
    lie_type: LieType
    levels: Tuple[int, ...]
    checks: Tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        # No checks at all is a vacuous pass
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": str(self.lie_type),
            "levels": list(self.levels),
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }
