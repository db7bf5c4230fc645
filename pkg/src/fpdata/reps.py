"""Faithful rotation representations as angle functions, and the pair basis.

A faithful representation of a subgroup ``H`` by proper rotations is
recorded by the turn it assigns to every element of ``H``.  For every group
type occurring inside SO(3) this angle function determines the
representation up to equivalence, so equivalence testing is just equality
of tuples of fractions.

The basis of candidate fixed-point data is the set of pairs ``(H, rho)``
with ``H`` non-cyclic, up to conjugation in ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .groups import IsoType, SubgroupClass, identify, subgroup_classes, units_up_to_sign
from .rotations import RotationModel, Turn, build_model, fold_turn, swap_fifths

Angles = tuple[tuple[int, Turn], ...]


@dataclass(frozen=True, eq=False)
class RepClass:
    subject: IsoType
    angles: Angles  # (element id, turn) sorted by element id
    label: str = ""

    @cached_property
    def turn(self) -> dict[int, Turn]:
        return dict(self.angles)

    @cached_property
    def key(self) -> tuple[int, ...]:
        # Fraction hashing is slow; equality only needs the integers
        out = []
        for x, t in self.angles:
            out += (x, t.numerator, t.denominator)
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepClass):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.angles)


def _angles(values: dict[int, Turn]) -> Angles:
    return tuple(sorted(values.items()))


def standard_rep_class(model: RotationModel, H: Iterable[int]) -> RepClass:
    """The class of the model's own embedding restricted to ``H``."""
    H = frozenset(H)
    values = {x: model.turn_of[x] for x in H}
    for rep in rep_classes_of(model, H):
        if rep.turn == values:
            return rep
    raise AssertionError("model tagging is not a faithful rotation representation")


def rep_classes_of(model: RotationModel, H: Iterable[int]) -> list[RepClass]:
    """All faithful rotation representation classes of the subgroup ``H``."""
    H = frozenset(H)
    G = model.group
    iso = identify(G, H)
    orders = G.element_orders

    if iso.kind in ("cyclic", "dihedral"):
        k = iso.n
        if k <= 2:
            label = "std" if iso.kind == "dihedral" else f"1/{k}" if k == 2 else "0"
            values = {x: fold_turn(Fraction(1, orders[x])) for x in H}
            return [RepClass(iso, _angles(values), label)]
        gen = min(x for x in H if orders[x] == k)
        powers = [0]
        for _ in range(k - 1):
            powers.append(G.mul[powers[-1]][gen])
        out = []
        for a in units_up_to_sign(k):
            values = {x: Fraction(1, 2) for x in H}
            for i, x in enumerate(powers):
                values[x] = fold_turn(Fraction(a * i, k))
            out.append(RepClass(iso, _angles(values), f"{a}/{k}"))
        if k == 5 and model.reference_turns is not None:
            ref = {x: model.reference_turns[x] for x in H}
            out = [
                RepClass(iso, r.angles, "+" if r.turn == ref else "-") for r in out
            ]
            out.sort(key=lambda r: r.label != "+")
        return out

    if iso.kind in ("tet", "oct"):
        values = {x: fold_turn(Fraction(1, orders[x])) for x in H}
        return [RepClass(iso, _angles(values), "std")]

    # icosahedral: the two chiralities differ by swapping the turns 1/5, 2/5
    if model.reference_turns is not None:
        plus = {x: model.reference_turns[x] for x in H}
    else:
        plus = {x: model.turn_of[x] for x in H}
    minus = dict(zip(plus, swap_fifths(list(plus.values()))))
    return [RepClass(iso, _angles(plus), "+"), RepClass(iso, _angles(minus), "-")]


def faithful_rep_classes(iso_type: IsoType) -> list[RepClass]:
    """Rep classes of an abstract type, realized on its standard model."""
    chirality = "+" if iso_type.kind == "icos" else None
    model = build_model(iso_type, chirality)
    return rep_classes_of(model, model.group.elements())


def conjugate_rep(model: RotationModel, g: int, rep: RepClass) -> RepClass:
    """Transport ``rep`` along conjugation by ``g``: x |-> rep(g^-1 x g)."""
    row = model.group.conj[g]
    return RepClass(
        rep.subject, _angles({row[x]: t for x, t in rep.angles}), rep.label
    )


def conjugate_pair(
    model: RotationModel, g: int, H: Iterable[int], rep: RepClass
) -> tuple[frozenset[int], RepClass]:
    return model.group.conjugate(g, H), conjugate_rep(model, g, rep)


@dataclass(frozen=True)
class PairClass:
    subgroup: SubgroupClass
    rep: RepClass
    stabilizer: frozenset[int]

    @property
    def stabilizer_order(self) -> int:
        return len(self.stabilizer)

    @property
    def label(self) -> str:
        return f"{self.subgroup.label}:{self.rep.label}"


class Basis:
    """Canonically ordered pair classes of a model, with reverse lookup."""

    def __init__(self, model: RotationModel, pairs: list[PairClass]):
        self.model = model
        self.pairs = tuple(pairs)
        self.labels = tuple(p.label for p in self.pairs)
        self._by_label = {lab: i for i, lab in enumerate(self.labels)}
        self._index: dict[tuple[frozenset[int], tuple[int, ...]], int] = {}
        G = model.group
        for i, p in enumerate(self.pairs):
            covered: set[int] = set()
            for g in G.elements():
                if g in covered:
                    continue
                covered.update(G.mul[g][s] for s in p.stabilizer)
                H, rep = conjugate_pair(model, g, p.subgroup.representative, p.rep)
                self._index[(H, rep.key)] = i

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i: int) -> PairClass:
        return self.pairs[i]

    def index_of(self, H: Iterable[int], rep: RepClass | dict[int, Turn]) -> int:
        if isinstance(rep, dict):
            rep = RepClass(self.model.group.family, _angles(rep))
        try:
            return self._index[(frozenset(H), rep.key)]
        except KeyError:
            raise LookupError("pair is not in this basis") from None

    def label_index(self, label: str) -> int:
        try:
            return self._by_label[label]
        except KeyError:
            raise LookupError(f"unknown pair label {label!r}") from None


def stabilizer_direct(model: RotationModel, H: frozenset[int], rep: RepClass) -> frozenset[int]:
    """N_G(H, rho) by scanning every element of G."""
    return frozenset(
        g
        for g in model.group.elements()
        if conjugate_pair(model, g, H, rep) == (H, rep)
    )


def pair_class_basis(model: RotationModel) -> Basis:
    """Basis of A(G): non-cyclic (H, rho) up to conjugation, canonical order.

    Depends only on the group, on which icosahedral tagging is called "+",
    and on the chirality label, so retagged copies of one model share it
    while A5+ and A5- data stay distinguishable.
    """
    key = (model.group, model.reference_turns, model.chirality)
    basis = _BASES.get(key)
    if basis is None:
        basis = _BASES[key] = _build_basis(model)
    return basis


_BASES: dict[tuple, Basis] = {}


def _build_basis(model: RotationModel) -> Basis:
    pairs = []
    for cls in subgroup_classes(model.group, noncyclic_only=True):
        H = cls.representative
        reps = rep_classes_of(model, H)
        done: set[RepClass] = set()
        for rep in reps:
            if rep in done:
                continue
            # angle functions are class functions, so H fixes every rep of H
            stab: set[int] = set()
            covered: set[int] = set()
            for g in sorted(cls.normalizer):
                if g in covered:
                    continue
                coset = {model.group.mul[g][h] for h in H}
                covered |= coset
                moved = conjugate_rep(model, g, rep)
                done.add(moved)
                if moved == rep:
                    stab |= coset
            pairs.append(PairClass(cls, rep, frozenset(stab)))
    return Basis(model, pairs)
