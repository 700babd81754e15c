"""
Root system value types.

Weights, root vectors and Weyl words are plain tuples of ints so they hash and
compare exactly. LieType and LevelWeight are validated pydantic models.
"""

import re
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..exceptions import InvalidLieTypeError

Weight = Tuple[int, ...]          # coefficients of the fundamental weights lambda_1..lambda_l
RootVector = Tuple[int, ...]      # coefficients of the simple roots alpha_1..alpha_l
CoweightVector = Tuple[int, ...]  # coefficients of the fundamental coweights H^(1)..H^(l)
WeylWord = Tuple[int, ...]        # simple reflection indices, rightmost acts first
CartanMatrix = Tuple[Tuple[int, ...], ...]

Family = Literal["A", "B", "C", "D", "E", "F", "G"]

_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])(\d+)\s*$")


class LieType(BaseModel):
    """Finite-type root system label such as A5 or E7"""
    model_config = ConfigDict(frozen=True)

    family: Family
    rank: int = Field(gt=0)

    @field_validator("family", mode="before")
    @classmethod
    def _upper_family(cls, value):
        if isinstance(value, str):
            return value.strip().upper()
        return value

    @model_validator(mode="after")
    def _check_rank(self) -> "LieType":
        family, rank = self.family, self.rank
        valid = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": rank in (6, 7, 8),
            "F": rank == 4,
            "G": rank == 2,
        }[family]
        if not valid:
            raise InvalidLieTypeError(f"{family}{rank} is not a finite-type root system")
        return self

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """
        Parse a type label: a family letter immediately followed by the rank.

        Args:
            text: label such as "D6" or "e7" (case-insensitive)

        Returns:
            The validated LieType

        Raises:
            InvalidLieTypeError: if the label is malformed or not a valid type
        """
        match = _TYPE_PATTERN.match(text or "")
        if not match:
            raise InvalidLieTypeError(f"Cannot parse Lie type label {text!r}")
        try:
            return cls(family=match.group(1), rank=int(match.group(2)))
        except ValidationError as e:
            raise InvalidLieTypeError(f"{text.strip().upper()} is not a finite-type root system") from e

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


class LevelWeight(BaseModel):
    """A level k together with a dominant weight lambda satisfying <lambda, theta> <= k"""
    model_config = ConfigDict(frozen=True)

    lie_type: LieType
    level: int = Field(ge=0)
    weight: Weight

    @model_validator(mode="after")
    def _check_admissible(self) -> "LevelWeight":
        from ..action.delta import check_admissible

        check_admissible(self.lie_type, self.level, self.weight)
        return self
