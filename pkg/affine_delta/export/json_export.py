"""
Canonical JSON for action tables and command results.

Keys keep insertion order and only ints, strings, bools and lists appear, so
parsing and re-serialising any output reproduces it byte for byte.
"""

import json
from typing import Any, Dict, List

from ..models.algebra import LieType, Weight
from ..models.results import ActionTable


def dumps(payload: Any) -> str:
    """Compact deterministic serialisation."""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=True)


def algebra_dict(lie_type: LieType) -> Dict[str, Any]:
    return {"family": lie_type.family, "rank": lie_type.rank}


def table_to_json(table: ActionTable) -> str:
    """All coweight maps of a table as a JSON array, by increasing coweight index."""
    return dumps(table.to_dict())


def orbits_payload(lie_type: LieType, level: int, orbits: List[tuple]) -> Dict[str, Any]:
    return {
        "algebra": algebra_dict(lie_type),
        "level": level,
        "orbits": [[list(w) for w in members] for members in orbits],
    }


def weight_payload(lie_type: LieType, weight: Weight, **extra: Any) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"algebra": algebra_dict(lie_type)}
    payload.update(extra)
    payload["weight"] = list(weight)
    return payload
