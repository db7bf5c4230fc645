"""Fixed-point data of model actions.

Three families of actions are synthesized combinatorially:

* the conjugation action of a rotation group on SO(3),
* twisted products ``G x_H X``, which induce data from a subgroup, and
* the dihedral action on the 3-sphere in C^2, together with an exact
  enumeration of its points with non-cyclic stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .groups import Dihedral, InvalidParameter, identify
from .naming import group_label, parse_group
from .reps import Basis, pair_class_basis, standard_rep_class
from .rotations import DomainError, RotationModel, Turn, build_model, fold_turn


class BasisMismatch(ValueError):
    """A fixed-point datum was combined with the wrong pair basis."""


@dataclass(frozen=True)
class FPFunction:
    basis: Basis
    values: tuple[int, ...]
    provenance: str = ""

    def __post_init__(self):
        if len(self.values) != len(self.basis):
            raise BasisMismatch(
                f"{len(self.values)} values for a basis of size {len(self.basis)}"
            )

    @classmethod
    def zero(cls, basis: Basis, provenance: str = "zero") -> "FPFunction":
        return cls(basis, (0,) * len(basis), provenance)

    def __getitem__(self, label: str) -> int:
        return self.values[self.basis.label_index(label)]

    def __add__(self, other: "FPFunction") -> "FPFunction":
        if other.basis is not self.basis:
            raise BasisMismatch("cannot add data over different bases")
        return FPFunction(
            self.basis, tuple(a + b for a, b in zip(self.values, other.values)), "sum"
        )

    def total(self) -> int:
        return sum(self.values)

    def bits(self) -> int:
        """Mod-2 reduction as a bitset (bit i is basis index i)."""
        return sum(1 << i for i, v in enumerate(self.values) if v % 2)

    def as_dict(self) -> dict[str, int]:
        return {lab: v for lab, v in zip(self.basis.labels, self.values) if v}

    def to_json(self) -> dict:
        return {
            "group": group_label(self.basis.model),
            "values": [
                {"pair": lab, "count": v}
                for lab, v in zip(self.basis.labels, self.values)
                if v
            ],
        }

    @classmethod
    def from_json(cls, obj, model: RotationModel | None = None) -> "FPFunction":
        """Parse the JSON form; a flat ``{label: count}`` mapping needs ``model``."""
        if isinstance(obj, Mapping) and "values" in obj:
            if "group" in obj:
                model = parse_group(str(obj["group"]))
            entries = obj["values"]
            if not isinstance(entries, list):
                raise ValueError("'values' must be a list")
            items = []
            for e in entries:
                if not isinstance(e, Mapping) or "pair" not in e:
                    raise ValueError(f"malformed entry {e!r}")
                items.append((e["pair"], e.get("count", 0)))
        elif isinstance(obj, Mapping):
            items = list(obj.items())
        else:
            raise ValueError("expected a JSON object")
        if model is None:
            raise ValueError("no group given")
        basis = pair_class_basis(model)
        values = [0] * len(basis)
        seen = set()
        for label, count in items:
            if isinstance(count, bool) or not isinstance(count, int):
                raise ValueError(f"count for {label!r} must be an integer")
            i = basis.label_index(str(label))
            if i in seen:
                raise ValueError(f"duplicate pair {label!r}")
            seen.add(i)
            values[i] = count
        return cls(basis, tuple(values), "input")


def _tally(basis: Basis, points, provenance: str) -> FPFunction:
    values = [0] * len(basis)
    for C, angles in points:
        values[basis.index_of(C, angles)] += 1
    return FPFunction(basis, tuple(values), provenance)


def conj_action_points(model: RotationModel) -> list[tuple[frozenset[int], dict[int, Turn]]]:
    """One (stabilizer, tangent angles) entry per G-orbit of non-cyclic points.

    A point of SO(3) other than the identity has a non-cyclic centralizer
    only if it is a half-turn about an axis of G; its stabilizer consists of
    the rotations about that axis and the half-turns about perpendicular
    axes.
    """
    G = model.group
    if identify(G, G.elements()).is_cyclic:
        raise DomainError("the conjugation action needs a non-cyclic group")
    turns = model.turn_of
    points = [(frozenset(G.elements()), dict(enumerate(turns)))]
    orders = G.element_orders
    pending = set(range(model.num_axes))
    while pending:
        ax = min(pending)
        pending -= {model.axis_action(g, ax) for g in G.elements()}
        C = {0} | {
            x
            for x in G.elements()
            if x
            and (
                model.axis_of[x] == ax
                or (orders[x] == 2 and model.is_perp(model.axis_of[x], ax))
            )
        }
        C = frozenset(C)
        if not identify(G, C).is_cyclic:
            points.append((C, {x: turns[x] for x in C}))
    return points


def conj_action_data(model: RotationModel) -> FPFunction:
    basis = pair_class_basis(model)
    label = standard_rep_class(model, model.group.elements()).label
    return _tally(basis, conj_action_points(model), f"conj({str(model.family)}:{label})")


def induce(G_model: RotationModel, H: Iterable[int], nH: FPFunction) -> FPFunction:
    """Datum of the twisted product ``G x_H X`` from the datum of ``X``.

    G-orbits of the twisted product correspond to H-orbits of ``X``, and a
    point of type (K, rho) for H has the same stabilizer and tangent
    representation in G.
    """
    H = frozenset(H)
    sub = nH.basis.model
    if sub.parent != tuple(sorted(H)) or sub.group.order != len(H):
        raise BasisMismatch("datum is not over the basis of this subgroup")
    basis = pair_class_basis(G_model)
    values = [0] * len(basis)
    for pair, count in zip(nH.basis.pairs, nH.values):
        if not count:
            continue
        K = frozenset(sub.parent[x] for x in pair.subgroup.representative)
        angles = {sub.parent[x]: t for x, t in pair.rep.angles}
        values[basis.index_of(K, angles)] += count
    return FPFunction(basis, tuple(values), f"induce({nH.provenance})")


def induced_conj_data(G_model: RotationModel, H: Iterable[int], rep) -> FPFunction:
    """Twisted product of the conjugation action of ``H`` embedded via ``rep``.

    Equivalent to ``induce(G, H, conj_action_data(H retagged by rep))`` but
    locates the points straight in the basis of G.
    """
    H = frozenset(H)
    sub = G_model.restrict(H)
    local = {g: i for i, g in enumerate(sub.parent)}
    embedded = sub.retag({local[x]: t for x, t in rep.angles})
    points = [
        (
            frozenset(sub.parent[x] for x in C),
            {sub.parent[x]: t for x, t in angles.items()},
        )
        for C, angles in conj_action_points(embedded)
    ]
    basis = pair_class_basis(G_model)
    where = "conj" if len(H) == G_model.group.order else "twisted"
    return _tally(basis, points, f"{where}({str(identify(G_model.group, H))}:{rep.label})")


def _check_sphere_params(m: int, k: int, c: int) -> None:
    if m < 2:
        raise InvalidParameter(f"m must be >= 2, got {m}")
    if k < 2 or m % k:
        raise InvalidParameter(f"k must be a divisor of m with k >= 2, got k={k}, m={m}")
    if gcd(c, m) != 1:
        raise InvalidParameter(f"c must be a unit mod m, got c={c}, m={m}")


def sphere_rep_label(k: int, c: int) -> str:
    if k == 2:
        return "std"
    a = c % k
    return f"{min(a, k - a)}/{k}"


def dihedral_sphere_data(m: int, k: int, c: int) -> FPFunction:
    """Closed form for the D_m action on S^3 with exponents (k, c)."""
    _check_sphere_params(m, k, c)
    basis = pair_class_basis(build_model(Dihedral(m)))
    rep = sphere_rep_label(k, c)
    values = [0] * len(basis)
    if (m // k) % 2 == 0:
        values[basis.label_index(f"D{k}u:{rep}")] = 1
        values[basis.label_index(f"D{k}d:{rep}")] = 1
    else:
        values[basis.label_index(f"D{k}:{rep}")] = 2
    return FPFunction(basis, tuple(values), f"sphere(m={m},k={k},c={c})")


@dataclass(frozen=True)
class SpherePoint:
    position: Fraction  # theta: the point (e^{2 pi i theta}, 0)
    stabilizer: frozenset[int]
    pair: int  # index in the pair basis of D_m


def sphere_action_oracle(m: int, k: int, c: int) -> list[SpherePoint]:
    """All points of S^3 with non-cyclic stabilizer, by exact enumeration.

    The rotation generator acts by ``(z, w) -> (e^{2 pi i k/m} z,
    e^{2 pi i c/m} w)`` and the half-turn ``s`` by conjugating both
    coordinates.  Since ``c`` is a unit, only points with ``w = 0`` can have
    a stabilizer meeting the rotations, and every non-cyclic subgroup of D_m
    does.  Positions on that circle are handled as integers ``t`` with
    ``theta = t / 2m``.
    """
    _check_sphere_params(m, k, c)
    model = build_model(Dihedral(m))
    basis = pair_class_basis(model)
    N = 2 * m

    def act(g: int, t: int) -> int:
        if g < m:
            return (t + 2 * k * g) % N
        return (-t + 2 * k * (g - m)) % N

    central = [b for b in range(m) if act(b, 0) == 0]
    stabs: dict[int, set[int]] = {}
    for a in range(m):
        g = m + a
        # conj(z) e^{2 pi i k a/m} = z  <=>  2t = 2ka (mod 2m)
        for t in ((k * a) % m, (k * a) % m + m):
            assert act(g, t) == t
            stabs.setdefault(t, set(central)).add(g)

    points = []
    for t in sorted(stabs):
        S = frozenset(stabs[t])
        angles = {x: Fraction(1, 2) for x in S}
        for b in S:
            if b < m:
                angles[b] = fold_turn(Fraction(c * b, m))
        points.append(SpherePoint(Fraction(t, N), S, basis.index_of(S, angles)))
    return points


def sphere_orbits(m: int, k: int, points: list[SpherePoint]) -> list[list[SpherePoint]]:
    """Partition oracle points into D_m-orbits using the explicit action."""
    N = 2 * m
    by_t = {int(p.position * N): p for p in points}
    left = set(by_t)
    orbits = []
    while left:
        t0 = min(left)
        orbit = {(t0 + 2 * k * b) % N for b in range(m)}
        orbit |= {(-t0 + 2 * k * a) % N for a in range(m)}
        left -= orbit
        orbits.append([by_t[t] for t in sorted(orbit)])
    return orbits


def oracle_sphere_data(m: int, k: int, c: int) -> FPFunction:
    points = sphere_action_oracle(m, k, c)
    basis = pair_class_basis(build_model(Dihedral(m)))
    values = [0] * len(basis)
    for orbit in sphere_orbits(m, k, points):
        kinds = {p.pair for p in orbit}
        assert len(kinds) == 1
        values[kinds.pop()] += 1
    return FPFunction(basis, tuple(values), f"oracle(m={m},k={k},c={c})")


def double_unit(basis: Basis, index: int) -> FPFunction:
    if not 0 <= index < len(basis):
        raise IndexError(f"pair index {index} out of range")
    values = [0] * len(basis)
    values[index] = 2
    return FPFunction(basis, tuple(values), f"double({basis.labels[index]})")


def aggregate_by_subgroup(n: FPFunction) -> dict[str, int]:
    out: dict[str, int] = {}
    for pair, v in zip(n.basis.pairs, n.values):
        key = pair.subgroup.label
        out[key] = out.get(key, 0) + v
    return out
