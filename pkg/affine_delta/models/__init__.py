"""Value types, job description and result records."""

from .algebra import CartanMatrix, CoweightVector, LevelWeight, LieType, RootVector, Weight, WeylWord
from .jobs import JobSpec
from .results import ActionTable, CheckResult, VerificationReport

__all__ = [
    "LieType",
    "LevelWeight",
    "Weight",
    "RootVector",
    "CoweightVector",
    "WeylWord",
    "CartanMatrix",
    "JobSpec",
    "ActionTable",
    "CheckResult",
    "VerificationReport",
]
