"""
Exhaustive verification of the closed forms against the Weyl-word oracle.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from ..action.delta import delta_brute_force, delta_closed_form, iterate
from ..action.tables import action_table, permutation_order
from ..exceptions import InconsistencyError, InvalidInputError
from ..models.algebra import LieType
from ..models.results import ActionTable, CheckResult, VerificationReport
from ..roots.root_system import (
    coweight_in_coroot_lattice,
    fundamental_group_order,
    miniscule_coweight_indices,
    simple_root_lengths,
    unit_vector,
)
from ..weyl.permutations import affine_permutation, expected_permutation
from ..weyl.words import canonical_word

logger = logging.getLogger(__name__)

DEFAULT_LEVELS: Tuple[int, ...] = (1, 2, 3)


def supported_types(max_rank: int = 8) -> List[LieType]:
    """Every valid type of rank <= max_rank, grouped by family."""
    out = [LieType(family="A", rank=n) for n in range(1, max_rank + 1)]
    out += [LieType(family="B", rank=n) for n in range(2, max_rank + 1)]
    out += [LieType(family="C", rank=n) for n in range(2, max_rank + 1)]
    out += [LieType(family="D", rank=n) for n in range(4, max_rank + 1)]
    out += [LieType(family="E", rank=n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(LieType(family="F", rank=4))
    if max_rank >= 2:
        out.append(LieType(family="G", rank=2))
    return out


def _run(name: str, check: Callable[[], Optional[str]]) -> CheckResult:
    # A check returns None on success or a short failure description
    try:
        problem = check()
    except InconsistencyError as e:
        problem = str(e)
    if problem:
        logger.warning(f"check {name} failed: {problem}")
        return CheckResult(name=name, passed=False, detail=problem)
    return CheckResult(name=name, passed=True)


class Verifier:
    """
    Runs the permutation, coset and oracle checks for Lie types.

    Args:
        levels: levels k at which action checks run
        max_workers: thread count for multi-type sweeps

    Raises:
        InvalidInputError: if max_workers is below 1
    """

    def __init__(self, levels: Sequence[int] = DEFAULT_LEVELS, max_workers: int = 4):
        if max_workers < 1:
            raise InvalidInputError(f"max_workers must be at least 1, got {max_workers}")
        self.levels = tuple(levels)
        self.max_workers = max_workers

    def verify(self, lie_type: LieType) -> VerificationReport:
        """Run every check for one type; no miniscule coweights means no checks."""
        indices = miniscule_coweight_indices(lie_type)
        checks: List[CheckResult] = []
        for i in indices:
            checks.append(_run(f"permutation[{i}]", lambda i=i: self._permutation(lie_type, i)))
            checks.append(_run(f"hwvec[{i}]", lambda i=i: self._sends_zero_to_index(lie_type, i)))
            checks.append(_run(f"root-length[{i}]", lambda i=i: self._unit_length(lie_type, i)))
        if indices:
            checks.append(_run("cosets", lambda: self._cosets(lie_type)))
        for k in self.levels:
            if not indices:
                break
            table_holder: List[ActionTable] = []
            checks.append(_run(f"bijection[k={k}]", lambda k=k: self._bijection(lie_type, k, table_holder)))
            table = table_holder[0] if table_holder else None
            for i in indices:
                checks.append(_run(f"oracle[{i},k={k}]", lambda i=i, k=k: self._oracle(lie_type, k, i, table)))
                checks.append(_run(f"order[{i},k={k}]", lambda i=i, k=k: self._order(lie_type, k, i, table)))
                checks.append(_run(f"vacuum[{i},k={k}]", lambda i=i, k=k: self._vacuum(lie_type, k, i)))
            if lie_type.family == "A" and table is not None:
                checks.append(_run(f"composition[k={k}]", lambda k=k: self._composition(lie_type, k, table)))
        report = VerificationReport(lie_type=lie_type, levels=self.levels, checks=tuple(checks))
        logger.info(f"{lie_type}: {len(checks) - len(report.failures)}/{len(checks)} checks passed")
        return report

    def verify_all(self, lie_types: Iterable[LieType]) -> List[VerificationReport]:
        """Verify several types on a thread pool; reports come back in input order."""
        types = list(lie_types)
        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            return list(pool.map(self.verify, types))

    @staticmethod
    def _permutation(lie_type: LieType, i: int) -> Optional[str]:
        found = affine_permutation(lie_type, canonical_word(lie_type, i))
        expected = expected_permutation(lie_type, i)
        if found != expected:
            return f"word gives {found}, closed form gives {expected}"
        return None

    @staticmethod
    def _sends_zero_to_index(lie_type: LieType, i: int) -> Optional[str]:
        image = expected_permutation(lie_type, i)[0]
        return None if image == i else f"alpha_0 -> alpha_{image}"

    @staticmethod
    def _unit_length(lie_type: LieType, i: int) -> Optional[str]:
        d = simple_root_lengths(lie_type)[i - 1]
        return None if d == 1 else f"|alpha_{i}|^2 = {2 * d}"

    @staticmethod
    def _cosets(lie_type: LieType) -> Optional[str]:
        indices = miniscule_coweight_indices(lie_type)
        for i in indices:
            if coweight_in_coroot_lattice(lie_type, unit_vector(lie_type, i)):
                return f"H^({i}) lies in Q^v"
        for a in indices:
            for b in indices:
                if a < b:
                    diff = tuple(x - y for x, y in zip(unit_vector(lie_type, a), unit_vector(lie_type, b)))
                    if coweight_in_coroot_lattice(lie_type, diff):
                        return f"H^({a}) and H^({b}) share a coset"
        order = fundamental_group_order(lie_type)
        if len(indices) + 1 != order:
            return f"{len(indices) + 1} coset representatives, |P^v/Q^v| = {order}"
        return None

    @staticmethod
    def _bijection(lie_type: LieType, k: int, holder: List[ActionTable]) -> Optional[str]:
        # action_table itself raises on a non-admissible image or a collision
        holder.append(action_table(lie_type, k))
        return None

    @staticmethod
    def _oracle(lie_type: LieType, k: int, i: int, table: Optional[ActionTable]) -> Optional[str]:
        if table is None:
            return "no action table"
        for w in table.admissible:
            closed = delta_closed_form(lie_type, k, w, i)
            brute = delta_brute_force(lie_type, k, w, i)
            if closed != brute:
                return f"{w}: closed form {closed}, word {brute}"
        return None

    @staticmethod
    def _order(lie_type: LieType, k: int, i: int, table: Optional[ActionTable]) -> Optional[str]:
        if table is None:
            return "no action table"
        group = fundamental_group_order(lie_type)
        order = permutation_order(table, i)
        if group % order != 0:
            return f"order {order} does not divide {group}"
        return None

    @staticmethod
    def _vacuum(lie_type: LieType, k: int, i: int) -> Optional[str]:
        zero = (0,) * lie_type.rank
        image = delta_closed_form(lie_type, k, zero, i)
        expected = tuple(k * e for e in unit_vector(lie_type, i))
        return None if image == expected else f"0 -> {image}"

    @staticmethod
    def _composition(lie_type: LieType, k: int, table: ActionTable) -> Optional[str]:
        for j in miniscule_coweight_indices(lie_type):
            for w in table.admissible:
                if iterate(lie_type, k, w, 1, j) != table.image(j, w):
                    return f"H^(1) applied {j} times differs from H^({j}) at {w}"
        return None
