"""End-to-end checks of the parity theorems against computed data."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from math import gcd
from typing import Any, Callable, Iterable

from . import gf2
from .fixedpoints import dihedral_sphere_data, oracle_sphere_data
from .groups import Dihedral, units_up_to_sign
from .lattice import constraints, dims, generators
from .naming import group_label, parse_group
from .reps import Basis, pair_class_basis
from .rotations import RotationModel, build_model, directed_axis_orbit_count


@dataclass
class VerificationReport:
    subject: str
    expected: Any
    computed: Any
    passed: bool
    elapsed: float = 0.0


def _timed(subject: str, expected, compute: Callable[[], Any], equal=None) -> VerificationReport:
    start = time.perf_counter()
    computed = compute()
    passed = (equal or (lambda a, b: a == b))(expected, computed)
    return VerificationReport(subject, expected, computed, bool(passed), time.perf_counter() - start)


def _bits(basis: Basis, labels: Iterable[str]) -> int:
    v = 0
    for lab in labels:
        v ^= 1 << basis.label_index(lab)
    return v


def _same_span(basis: Basis, expected: list[list[str]], computed_rows: tuple[int, ...]) -> bool:
    try:
        rows = [_bits(basis, c) for c in expected]
    except LookupError:
        return False
    return gf2.rref(rows) == list(computed_rows)


def dihedral_constraint_labels(m: int) -> list[list[str]]:
    """One parity equation per (k, rho): "even" if m/k is odd, "equal parity"
    of the two marked classes if m/k is even."""
    out = []
    for k in range(2, m + 1):
        if m % k:
            continue
        for a in units_up_to_sign(k):
            rep = "std" if k == 2 else f"{a}/{k}"
            if (m // k) % 2:
                out.append([f"D{k}:{rep}"])
            else:
                out.append([f"D{k}u:{rep}", f"D{k}d:{rep}"])
    return out


def verify_dihedral(m: int, oracle: bool = True) -> list[VerificationReport]:
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    model = build_model(Dihedral(m))
    basis = pair_class_basis(model)
    expected = dihedral_constraint_labels(m)
    reports = [
        _timed(
            f"D{m} basis",
            sorted(lab for c in expected for lab in c),
            lambda: sorted(basis.labels),
        ),
        _timed(
            f"D{m} constraints",
            expected,
            lambda: constraints(model).labels(),
            lambda e, c: _same_span(basis, e, constraints(model).rows),
        ),
        _timed(
            f"D{m} dims",
            [m // 2, m // 4 if m % 2 == 0 else 0],
            lambda: list(dims(model, check=False)),
        ),
    ]
    if oracle:
        def mismatches():
            bad = []
            for k in range(2, m + 1):
                if m % k:
                    continue
                for c in range(1, m):
                    if gcd(c, m) != 1:
                        continue
                    if oracle_sphere_data(m, k, c).values != dihedral_sphere_data(m, k, c).values:
                        bad.append([k, c])
            return bad

        reports.append(_timed(f"D{m} sphere oracle", [], mismatches))
    return reports


# Expected Platonic data, kept apart from the code that computes it.
# Constraint lists may be redundant (only their span is compared); tables
# give, per realized action, its values at the named coordinates, with None
# marking entries left unconstrained.
PLATONIC = {
    "A4": {
        "dims": [1, 1],
        # n(D2) and n(A4) have the same parity
        "constraints": [["D2:std", "A4:std"]],
        "table": {
            "coordinates": ["A4:std"],
            "actions": ["conj(A4:std)"],
            "values": [[1]],
        },
    },
    "S4": {
        "dims": [3, 3],
        # n(D3), n(D4), n(S4) and n(D2*) + n(D2) + n(A4) share one parity
        "constraints": [
            ["D3:1/3", "D4:1/4"],
            ["D4:1/4", "S4:std"],
            ["S4:std", "D2s:std", "D2:std", "A4:std"],
        ],
        # lower triangular with unit diagonal
        "table": {
            "coordinates": ["S4:std", "A4:std", "D2:std"],
            "actions": ["conj(S4:std)", "twisted(A4:std)", "twisted(D4:1/4)"],
            "values": [[1, 0, 0], [None, 1, 0], [None, None, 1]],
        },
    },
    "A5": {
        "dims": [4, 3],
        # four even sums
        "constraints": [
            ["D2:std", "A4:std", "A5:+", "A5:-"],
            ["D3:1/3", "A5:+", "A5:-"],
            ["D5:+", "A5:+"],
            ["D5:-", "A5:-"],
        ],
        # identity matrix
        "table": {
            "coordinates": ["A5:+", "A5:-", "A4:std"],
            "actions": ["conj(A5:+)", "conj(A5:-)", "twisted(A4:std)"],
            "values": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        },
    },
}


def generator_table(model: RotationModel, coordinates: list[str], actions: list[str]) -> list[list[int | None]]:
    """Values of the named generators at the named coordinates (rows)."""
    by_name = {n.provenance: n for n in generators(model)}
    out = []
    for coord in coordinates:
        row = []
        for act in actions:
            n = by_name.get(act)
            row.append(None if n is None else n[coord])
        out.append(row)
    return out


def _table_matches(expected, computed) -> bool:
    return all(
        e is None or e == c
        for erow, crow in zip(expected, computed)
        for e, c in zip(erow, crow)
    ) and all(c is not None for crow in computed for c in crow)


def verify_platonic(which: str) -> list[VerificationReport]:
    """``which`` is A4, S4 or A5; the icosahedral group is checked in both
    chiralities."""
    labels = {"A4": ["A4"], "S4": ["S4"], "A5": ["A5+", "A5-"]}[which]
    data = PLATONIC[which]
    reports = []
    for label in labels:
        model = parse_group(label)
        basis = pair_class_basis(model)
        reports.append(
            _timed(
                f"{label} constraints",
                data["constraints"],
                lambda: constraints(model).labels(),
                lambda e, c: _same_span(basis, e, constraints(model).rows),
            )
        )
        reports.append(_timed(f"{label} dims", data["dims"], lambda: list(dims(model, check=False))))
        table = data["table"]
        reports.append(
            _timed(
                f"{label} generator table",
                table["values"],
                lambda: generator_table(model, table["coordinates"], table["actions"]),
                _table_matches,
            )
        )
    return reports


def verify_global(model: RotationModel) -> list[VerificationReport]:
    label = group_label(model)
    basis = pair_class_basis(model)
    gens = generators(model)
    system = constraints(model)
    return [
        _timed(
            f"{label} even totals",
            [],
            lambda: [n.provenance for n in gens if n.total() % 2],
        ),
        _timed(
            f"{label} three directed-axis orbits",
            [3] * len(basis),
            lambda: [directed_axis_orbit_count(model, p.subgroup.representative) for p in basis],
        ),
        _timed(
            f"{label} generators satisfy constraints",
            [],
            lambda: [n.provenance for n in gens if not system.satisfied(n)],
        ),
        _timed(
            f"{label} dimension additivity",
            len(basis),
            lambda: sum(dims(model, check=False)),
        ),
    ]


def run_suite(max_m: int | None = None, platonic: bool = True, oracle_max_m: int | None = None) -> list[VerificationReport]:
    """All checks: Platonic groups and D_2 .. D_max_m.

    The sphere oracle comparison is run for ``m <= oracle_max_m`` (default:
    every m).
    """
    reports: list[VerificationReport] = []
    if platonic:
        for which in ("A4", "S4", "A5"):
            reports += verify_platonic(which)
        for label in ("A4", "S4", "A5+", "A5-"):
            reports += verify_global(parse_group(label))
    if max_m is not None:
        for m in range(2, max_m + 1):
            oracle = oracle_max_m is None or m <= oracle_max_m
            reports += verify_dihedral(m, oracle=oracle)
            reports += verify_global(build_model(Dihedral(m)))
    return reports


def render_text(reports: list[VerificationReport]) -> str:
    lines = []
    for r in reports:
        mark = "PASS" if r.passed else "FAIL"
        line = f"{mark}  {r.subject}  ({r.elapsed:.3f}s)"
        if not r.passed:
            line += f"\n      expected: {r.expected}\n      computed: {r.computed}"
        lines.append(line)
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} checks passed")
    return "\n".join(lines)


def render_json(reports: list[VerificationReport]) -> str:
    return json.dumps(
        {
            "passed": all(r.passed for r in reports),
            "count": len(reports),
            "failures": sum(not r.passed for r in reports),
            "reports": [asdict(r) for r in reports],
        },
        indent=2,
    )
