"""
Plain-text rendering of command results.
"""

from typing import Dict, List, Sequence

from ..models.algebra import LieType
from ..models.results import ActionTable, VerificationReport


def format_weight(weight: Sequence[int]) -> str:
    """Write a weight as a combination of lambda_j, e.g. '2*l1 - l3'; zero is '0'."""
    terms = []
    for j, m in enumerate(weight, start=1):
        if m == 0:
            continue
        sign = "-" if m < 0 else "+"
        size = abs(m)
        body = f"l{j}" if size == 1 else f"{size}*l{j}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_vector(vector: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in vector) + "]"


def render_info(data: Dict[str, object], images: Dict[int, List[Sequence[int]]]) -> str:
    lines = [f"type: {data['type']}", "cartan matrix:"]
    for row in data["cartan_matrix"]:
        lines.append("  " + " ".join(f"{v:>2}" for v in row))
    lines += [
        f"theta (roots): {format_vector(data['theta_roots'])}",
        f"theta (weights): {format_vector(data['theta_weights'])}",
        f"marks: {format_vector(data['marks'])}",
        f"comarks: {format_vector(data['comarks'])}",
        "half square lengths: [" + ",".join(data["half_square_lengths"]) + "]",
        f"positive roots: {data['positive_root_count']}",
        f"coxeter number: {data['coxeter_number']}",
        f"dual coxeter number: {data['dual_coxeter_number']}",
        f"miniscule coweights: {format_vector(data['miniscule'])}",
        f"|P^v/Q^v|: {data['fundamental_group_order']}",
    ]
    for i, weights in images.items():
        lines.append(f"sigma^({i}):")
        for j, image in enumerate(weights, start=1):
            lines.append(f"  l{j} -> {format_weight(image)}")
    return "\n".join(lines)


def render_table(table: ActionTable) -> str:
    lines = [f"type: {table.lie_type}  level: {table.level}  admissible: {len(table.admissible)}"]
    if not table.coweights:
        lines.append("no miniscule coweights; the action is trivial")
    for i in table.coweights:
        lines.append(f"H^({i}):")
        for w in table.admissible:
            lines.append(f"  {format_vector(w)} -> {format_vector(table.image(i, w))}")
    return "\n".join(lines)


def render_orbits(lie_type: LieType, level: int, orbits: List[tuple]) -> str:
    lines = [f"type: {lie_type}  level: {level}  orbits: {len(orbits)}"]
    for n, members in enumerate(orbits, start=1):
        lines.append(f"  {n}: " + " ".join(format_vector(w) for w in members))
    return "\n".join(lines)


def render_report(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    if not report.checks:
        return f"{report.lie_type}: {status} (no miniscule coweights, 0 checks run)"
    lines = []
    for check in report.checks:
        mark = "PASS" if check.passed else "FAIL"
        suffix = f"  {check.detail}" if check.detail and not check.passed else ""
        lines.append(f"  {mark} {check.name}{suffix}")
    passed = sum(check.passed for check in report.checks)
    lines.insert(0, f"{report.lie_type}: {status} ({passed}/{len(report.checks)} checks)")
    return "\n".join(lines)
