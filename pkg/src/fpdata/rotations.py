"""Exact rotation data attached to a group table.

A :class:`RotationModel` records, for every non-identity element, the
undirected axis it turns about and its rotation angle as a folded turn
(a fraction of a revolution in ``[0, 1/2]``).  Axes carry their fold, the
orthogonality relation, and the permutation action of the group on the
two directions of every axis.  No floating point is used anywhere: the
dihedral models are index arithmetic and the Platonic ones come from
exact vertex coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .geometry import QSqrt5, dot, matvec, platonic_rotations
from .groups import (
    GroupTable,
    InvalidParameter,
    IsoType,
    _table_from_mul,
    build_group,
    identify,
    units_up_to_sign,
)

Turn = Fraction


class DomainError(ValueError):
    """An operation was applied outside the groups it is defined for."""


def fold_turn(x) -> Turn:
    """Reduce a turn mod 1 and identify it with its inverse."""
    x = Fraction(x) % 1
    return min(x, 1 - x)


# cos(2*pi*t) for every turn that occurs in a finite rotation group of the
# supported Platonic types
_COS = {
    Fraction(0): QSqrt5(1),
    Fraction(1, 2): QSqrt5(-1),
    Fraction(1, 3): QSqrt5(Fraction(-1, 2)),
    Fraction(1, 4): QSqrt5(0),
    Fraction(1, 5): QSqrt5(Fraction(-1, 4), Fraction(1, 4)),
    Fraction(2, 5): QSqrt5(Fraction(-1, 4), Fraction(-1, 4)),
}

FIFTHS = {Fraction(1, 5): Fraction(2, 5), Fraction(2, 5): Fraction(1, 5)}


def swap_fifths(turns: Sequence[Turn]) -> tuple[Turn, ...]:
    return tuple(FIFTHS.get(t, t) for t in turns)


@dataclass(frozen=True, eq=False)
class RotationModel:
    group: GroupTable
    axis_of: tuple[int, ...]  # -1 at the identity
    turn_of: tuple[Turn, ...]
    folds: tuple[int, ...]
    perp: tuple[frozenset[int], ...]
    # directed axis d = 2*axis + (0 | 1); directed_action[g][d] is g.d
    directed_action: tuple[tuple[int, ...], ...]
    chirality: str | None = None
    # the "+" tagging of an icosahedral group, kept through restriction
    reference_turns: tuple[Turn, ...] | None = None
    parent: tuple[int, ...] | None = None

    @property
    def family(self) -> IsoType:
        return self.group.family

    @property
    def num_axes(self) -> int:
        return len(self.folds)

    def is_perp(self, a: int, b: int) -> bool:
        return b in self.perp[a]

    def axis_action(self, g: int, a: int) -> int:
        return self.directed_action[g][2 * a] >> 1

    def axis_elements(self, a: int) -> frozenset[int]:
        return frozenset(x for x, ax in enumerate(self.axis_of) if ax == a)

    def axes_of(self, H: Iterable[int]) -> frozenset[int]:
        return frozenset(self.axis_of[x] for x in H if x != 0)

    def restrict(self, H: Iterable[int]) -> "RotationModel":
        return _restrict(self, frozenset(H))

    def retag(self, turns: Sequence[Turn] | dict[int, Turn]) -> "RotationModel":
        """Same geometry, different angle tags (another embedding)."""
        if isinstance(turns, dict):
            turns = [turns[x] for x in self.group.elements()]
        turns = tuple(turns)
        chirality = self.chirality
        if self.reference_turns is not None and self.family.kind == "icos":
            chirality = "+" if turns == self.reference_turns else "-"
        return replace(self, turn_of=turns, chirality=chirality)


@lru_cache(maxsize=None)
def _restrict(model: RotationModel, H: frozenset[int]) -> RotationModel:
    G = model.group
    if not G.is_subgroup(H):
        raise ValueError("restriction needs a subgroup")
    ids = sorted(H)
    local = {g: i for i, g in enumerate(ids)}
    mul = [[local[G.mul[a][b]] for b in ids] for a in ids]
    table = _table_from_mul(identify(G, H), mul)

    axes: list[int] = []
    for x in ids[1:]:
        a = model.axis_of[x]
        if a not in axes:
            axes.append(a)
    alocal = {a: i for i, a in enumerate(axes)}
    axis_of = tuple(-1 if x == 0 else alocal[model.axis_of[x]] for x in ids)
    folds = [1] * len(axes)
    for x in ids[1:]:
        i = axis_of[local[x]]
        folds[i] = max(folds[i], G.element_orders[x])
    perp = tuple(
        frozenset(alocal[b] for b in model.perp[a] if b in alocal) for a in axes
    )

    def dlocal(d: int) -> int:
        return 2 * alocal[d >> 1] + (d & 1)

    directed = tuple(
        tuple(
            dlocal(model.directed_action[g][2 * a + s]) for a in axes for s in (0, 1)
        )
        for g in ids
    )
    ref = None
    if model.reference_turns is not None:
        ref = tuple(model.reference_turns[g] for g in ids)
    return RotationModel(
        group=table,
        axis_of=axis_of,
        turn_of=tuple(model.turn_of[g] for g in ids),
        folds=tuple(folds),
        perp=perp,
        directed_action=directed,
        chirality=model.chirality if table.family.kind == "icos" else None,
        reference_turns=ref,
        parent=tuple(ids),
    )


def _cyclic_model(G: GroupTable) -> RotationModel:
    k = G.order
    naxes = 1 if k > 1 else 0
    return RotationModel(
        group=G,
        axis_of=tuple(-1 if x == 0 else 0 for x in G.elements()),
        turn_of=tuple(fold_turn(Fraction(x, k)) for x in G.elements()),
        folds=(k,) * naxes,
        perp=(frozenset(),) * naxes,
        directed_action=tuple(tuple(range(2 * naxes)) for _ in G.elements()),
    )


def _dihedral_model(G: GroupTable) -> RotationModel:
    # axis 0 is the vertical axis v; axis 1+j is the horizontal axis h_j at
    # angle j*pi/m, the axis of the half-turn r^j s.  The direction of h_j at
    # angle t*pi/m is encoded by t mod 2m.
    m = G.order // 2
    axis_of = tuple(-1 if x == 0 else (0 if x < m else 1 + x - m) for x in G.elements())
    turn_of = tuple(
        fold_turn(Fraction(x, m)) if x < m else Fraction(1, 2) for x in G.elements()
    )
    folds = (m,) + (2,) * m
    perp: list[set[int]] = [set(range(1, m + 1))] + [{0} for _ in range(m)]
    if m % 2 == 0:
        for j in range(m):
            perp[1 + j].add(1 + (j + m // 2) % m)

    def hdir(t: int) -> int:
        t %= 2 * m
        return 2 * (1 + t % m) + (0 if t < m else 1)

    directed = []
    for g in G.elements():
        a, refl = g % m, g >= m
        row = [1, 0] if refl else [0, 1]
        for j in range(m):
            for t in (j, j + m):
                row.append(hdir(-t + 2 * a) if refl else hdir(t + 2 * a))
        directed.append(tuple(row))
    return RotationModel(
        group=G,
        axis_of=axis_of,
        turn_of=turn_of,
        folds=folds,
        perp=tuple(frozenset(p) for p in perp),
        directed_action=tuple(directed),
    )


def _first_nonzero(v) -> QSqrt5:
    return next(c for c in v if c)


def _platonic_model(kind: str) -> RotationModel:
    G, mats = platonic_rotations(kind)
    keys: dict[tuple, int] = {}
    vectors = []
    axis_of = [-1]
    for R in mats[1:]:
        if all(R[i][j] == R[j][i] for i in range(3) for j in range(3)):
            # half-turn: R + I has rank one
            cols = [
                tuple(R[i][j] + (1 if i == j else 0) for i in range(3)) for j in range(3)
            ]
            v = next(c for c in cols if any(c))
        else:
            v = (R[2][1] - R[1][2], R[0][2] - R[2][0], R[1][0] - R[0][1])
        x = _first_nonzero(v)
        key = tuple(c / x for c in v)
        if key not in keys:
            keys[key] = len(vectors)
            vectors.append(key)
        axis_of.append(keys[key])

    folds = [1] * len(vectors)
    for x in G.elements():
        if x:
            folds[axis_of[x]] = max(folds[axis_of[x]], G.element_orders[x])
    perp = tuple(
        frozenset(b for b, w in enumerate(vectors) if not dot(u, w))
        for u in vectors
    )

    directed = []
    for R in mats:
        row = []
        for u in vectors:
            w = matvec(R, u)
            x = _first_nonzero(w)
            b = keys[tuple(c / x for c in w)]
            s = 0 if x.sign() > 0 else 1
            row += [2 * b + s, 2 * b + (1 - s)]
        directed.append(tuple(row))

    turns = [Fraction(0)]
    for x in G.elements():
        if not x:
            continue
        R = mats[x]
        cos = (R[0][0] + R[1][1] + R[2][2] - 1) / 2
        q = G.element_orders[x]
        cands = [t for t in (Fraction(a, q) for a in units_up_to_sign(q)) if _COS[t] == cos]
        assert len(cands) == 1, (kind, x, cos)
        turns.append(cands[0])
    turns_t = tuple(turns)
    return RotationModel(
        group=G,
        axis_of=tuple(axis_of),
        turn_of=turns_t,
        folds=tuple(folds),
        perp=perp,
        directed_action=tuple(directed),
        chirality="+" if kind == "icos" else None,
        reference_turns=turns_t if kind == "icos" else None,
    )


@lru_cache(maxsize=None)
def build_model(family: IsoType, chirality: str | None = None) -> RotationModel:
    """Standard rotation model of a supported family.

    ``chirality`` must be given exactly for the icosahedral group.  The "+"
    model tags each order-5 rotation with the turn read off from the trace of
    its matrix in the standard icosahedron ``(0, +-1, +-phi)``; the "-" model
    swaps the turns 1/5 and 2/5.
    """
    if (family.kind == "icos") != (chirality is not None):
        raise InvalidParameter("chirality is required for, and only for, the icosahedral group")
    if chirality not in (None, "+", "-"):
        raise InvalidParameter(f"chirality must be '+' or '-', got {chirality!r}")
    if family.kind == "dihedral":
        if family.n < 2:
            raise InvalidParameter(f"dihedral model needs m >= 2, got {family.n}")
        return _dihedral_model(build_group(family))
    if family.kind == "cyclic":
        return _cyclic_model(build_group(family))
    if family.kind == "icos":
        plus = _platonic_model("icos")
        return plus if chirality == "+" else plus.retag(swap_fifths(plus.turn_of))
    return _platonic_model(family.kind)


def directed_axis_orbit_count(model: RotationModel, H: Iterable[int]) -> int:
    """Number of H-orbits on the directed rotation axes of H."""
    H = sorted(frozenset(H))
    iso = identify(model.group, H)
    if iso.is_cyclic:
        raise DomainError(f"{iso} is cyclic")
    pending = {2 * a + s for a in model.axes_of(H) for s in (0, 1)}
    count = 0
    while pending:
        start = pending.pop()
        count += 1
        orbit = {model.directed_action[h][start] for h in H}
        pending -= orbit
    return count
