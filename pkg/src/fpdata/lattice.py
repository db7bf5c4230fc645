"""The lattice F(G) of realizable data, through its image mod 2.

Twice every basis vector is realizable, so ``n`` lies in F exactly when its
reduction mod 2 lies in the GF(2) span of the reduced generators.  The
constraint system is the orthogonal complement of that span.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import gf2
from .fixedpoints import BasisMismatch, FPFunction, dihedral_sphere_data, induced_conj_data
from .groups import subgroup_classes, units_up_to_sign
from .reps import Basis, pair_class_basis, rep_classes_of
from .rotations import RotationModel


class GeneratorDeficit(RuntimeError):
    """The generators span less than the known dimension of F/2A."""


@dataclass(frozen=True)
class BitMatrix:
    ncols: int
    rows: tuple[int, ...]
    labels: tuple[str, ...]
    sources: tuple[FPFunction, ...] = ()


@dataclass(frozen=True)
class ConstraintSystem:
    basis: Basis
    rows: tuple[int, ...]  # reduced row echelon form

    def __len__(self) -> int:
        return len(self.rows)

    def labels(self) -> list[list[str]]:
        return [
            [lab for i, lab in enumerate(self.basis.labels) if (row >> i) & 1]
            for row in self.rows
        ]

    def violated(self, n: FPFunction) -> int | None:
        bits = n.bits()
        for row in self.rows:
            if gf2.dot(row, bits):
                return row
        return None

    def satisfied(self, n: FPFunction) -> bool:
        return self.violated(n) is None


def sphere_exponent(m: int, k: int, a: int) -> int:
    """Smallest unit c mod m with c = +-a mod k."""
    for c in range(1, m + 1):
        if gcd(c, m) == 1 and ((c - a) % k == 0 or (c + a) % k == 0):
            return c
    raise ValueError(f"no unit mod {m} reduces to +-{a} mod {k}")


_GENERATORS: dict[int, tuple[FPFunction, ...]] = {}


def generators(model: RotationModel) -> tuple[FPFunction, ...]:
    """Realized data: conjugation actions and twisted products of them for
    every non-cyclic subgroup and each of its embeddings, plus the sphere
    actions for dihedral groups.  Duplicates are dropped."""
    basis = pair_class_basis(model)
    cached = _GENERATORS.get(id(basis))
    if cached is not None:
        return cached
    out: list[FPFunction] = []
    for cls in subgroup_classes(model.group, noncyclic_only=True):
        for rep in rep_classes_of(model, cls.representative):
            out.append(induced_conj_data(model, cls.representative, rep))
    if model.family.kind == "dihedral":
        m = model.family.n
        for k in range(2, m + 1):
            if m % k:
                continue
            for a in units_up_to_sign(k):
                out.append(dihedral_sphere_data(m, k, sphere_exponent(m, k, a)))
    seen = set()
    unique = []
    for n in out:
        if n.values not in seen:
            seen.add(n.values)
            unique.append(n)
    _GENERATORS[id(basis)] = result = tuple(unique)
    return result


_MATRICES: dict[int, tuple[BitMatrix, gf2.SpanSolver, "ConstraintSystem"]] = {}


def _reduced(model: RotationModel) -> tuple[BitMatrix, gf2.SpanSolver, "ConstraintSystem"]:
    basis = pair_class_basis(model)
    cached = _MATRICES.get(id(basis))
    if cached is None:
        gens = generators(model)
        M = BitMatrix(
            ncols=len(basis),
            rows=tuple(n.bits() for n in gens),
            labels=tuple(n.provenance for n in gens),
            sources=gens,
        )
        system = ConstraintSystem(basis, tuple(gf2.nullspace(M.rows, M.ncols)))
        cached = _MATRICES[id(basis)] = (M, gf2.SpanSolver(M.rows), system)
    return cached


def generator_matrix(model: RotationModel) -> BitMatrix:
    return _reduced(model)[0]


def span_dim(M: BitMatrix) -> int:
    return gf2.rank(M.rows)


def constraints(model: RotationModel) -> ConstraintSystem:
    return _reduced(model)[2]


def predicted_dims(model: RotationModel) -> tuple[int, int] | None:
    fam = model.family
    if fam.kind == "dihedral":
        m = fam.n
        return m // 2, (m // 4 if m % 2 == 0 else 0)
    return {"tet": (1, 1), "oct": (3, 3), "icos": (4, 3)}.get(fam.kind)


def dims(model: RotationModel, check: bool = True) -> tuple[int, int]:
    """``(dim A/F, dim F/2A)`` over GF(2).

    With ``check`` the computed rank is compared against the known value
    for the family and a mismatch raises :class:`GeneratorDeficit`.
    """
    r = span_dim(generator_matrix(model))
    out = (len(pair_class_basis(model)) - r, r)
    expected = predicted_dims(model)
    if check and expected is not None and out != expected:
        raise GeneratorDeficit(f"{model.family}: computed dims {out}, expected {expected}")
    return out


@dataclass(frozen=True)
class MembershipCertificate:
    member: bool
    # member: n == sum of these generators + 2 * twice
    generators: tuple[int, ...] = ()
    generator_labels: tuple[str, ...] = ()
    twice: tuple[int, ...] = ()
    # non-member: a parity constraint with odd value on n
    violated: int | None = None
    violated_labels: tuple[str, ...] = ()

    def check(self, n: FPFunction, M: BitMatrix) -> bool:
        if self.member:
            total = [2 * a for a in self.twice]
            for i in self.generators:
                total = [t + v for t, v in zip(total, M.sources[i].values)]
            return tuple(total) == n.values
        return self.violated is not None and gf2.dot(self.violated, n.bits()) == 1


def _check_basis(model: RotationModel, n: FPFunction) -> None:
    if n.basis is not pair_class_basis(model):
        raise BasisMismatch("datum is over a different basis")


def membership(model: RotationModel, n: FPFunction) -> MembershipCertificate:
    _check_basis(model, n)
    M, solver, _ = _reduced(model)
    subset = solver.solve(n.bits())
    if subset is None:
        row = constraints(model).violated(n)
        assert row is not None
        labels = tuple(lab for i, lab in enumerate(n.basis.labels) if (row >> i) & 1)
        return MembershipCertificate(False, violated=row, violated_labels=labels)
    diff = list(n.values)
    for i in subset:
        diff = [d - v for d, v in zip(diff, M.sources[i].values)]
    assert all(d % 2 == 0 for d in diff)
    return MembershipCertificate(
        True,
        generators=tuple(subset),
        generator_labels=tuple(M.labels[i] for i in subset),
        twice=tuple(d // 2 for d in diff),
    )


def realizable(model: RotationModel, n: FPFunction) -> bool:
    """Membership in F_+: in F and nowhere negative."""
    return membership(model, n).member and min(n.values, default=0) >= 0
