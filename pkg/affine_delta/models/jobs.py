"""
Validated description of one command-line job.
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidInputError,
    NotMinisculeError,
)
from .algebra import CoweightVector, LieType, Weight, WeylWord

Command = Literal["info", "reflect", "delta", "verify", "orbits", "table"]


class JobSpec(BaseModel):
    """Flags of one invocation, checked before any computation"""
    model_config = ConfigDict(frozen=True)

    command: Command
    lie_type: Optional[LieType] = None
    level: Optional[int] = None
    weight: Optional[Weight] = None
    word: Optional[WeylWord] = None
    coweight: Optional[int] = None
    coweight_vector: Optional[CoweightVector] = None
    oracle: bool = False
    output_format: Literal["text", "json"] = "text"
    verbose: bool = False
    workers: int = 4

    @model_validator(mode="after")
    def _check_flags(self) -> "JobSpec":
        command = self.command
        if command != "verify" and self.lie_type is None:
            raise InvalidInputError(f"{command} needs --type")
        if command in ("delta", "verify", "orbits", "table"):
            if self.level is None:
                raise InvalidInputError(f"{command} needs --level")
            if self.level < 1:
                raise InvalidInputError(f"--level must be at least 1, got {self.level}")
        if command == "verify" and self.workers < 1:
            raise InvalidInputError(f"--workers must be at least 1, got {self.workers}")
        if command in ("reflect", "delta"):
            if self.weight is None:
                raise InvalidInputError(f"{command} needs --weight")
            if len(self.weight) != self.lie_type.rank:
                raise DimensionMismatchError(
                    f"--weight has {len(self.weight)} entries, {self.lie_type} needs {self.lie_type.rank}"
                )
        if command == "reflect":
            for letter in self.word or ():
                if not 1 <= letter <= self.lie_type.rank:
                    raise IndexOutOfRangeError(f"word letter {letter} outside 1..{self.lie_type.rank}")
        if command == "delta":
            self._check_coweight()
        return self

    def _check_coweight(self) -> None:
        from ..roots.root_system import miniscule_coweight_indices

        if (self.coweight is None) == (self.coweight_vector is None):
            raise InvalidInputError("delta needs exactly one of --coweight and --coweight-vector")
        if self.coweight is not None and self.coweight not in miniscule_coweight_indices(self.lie_type):
            raise NotMinisculeError(f"H^({self.coweight}) is not a miniscule coweight of {self.lie_type}")
        if self.coweight_vector is not None and len(self.coweight_vector) != self.lie_type.rank:
            raise DimensionMismatchError(
                f"--coweight-vector has {len(self.coweight_vector)} entries, {self.lie_type} needs {self.lie_type.rank}"
            )
        if self.oracle and self.coweight is None:
            raise InvalidInputError("--oracle needs --coweight")
