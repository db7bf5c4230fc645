"""Finite groups as explicit multiplication tables.

Only the families that occur as finite rotation groups are supported:
cyclic, dihedral, tetrahedral, octahedral and icosahedral.  Element ids run
over ``0..order-1`` with ``0`` the identity, and ``mul[a][b]`` is the product
``a*b`` (``b`` applied first when the elements are read as maps).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence


class InvalidParameter(ValueError):
    """A family parameter is outside its supported range."""


@dataclass(frozen=True, order=True)
class IsoType:
    kind: str  # "cyclic", "dihedral", "tet", "oct", "icos"
    n: int = 0

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Z{self.n}"
        if self.kind == "dihedral":
            return f"D{self.n}"
        return {"tet": "A4", "oct": "S4", "icos": "A5"}[self.kind]

    @property
    def order(self) -> int:
        if self.kind == "cyclic":
            return self.n
        if self.kind == "dihedral":
            return 2 * self.n
        return {"tet": 12, "oct": 24, "icos": 60}[self.kind]

    @property
    def is_cyclic(self) -> bool:
        return self.kind == "cyclic"


def Cyclic(k: int) -> IsoType:
    return IsoType("cyclic", k)


def Dihedral(m: int) -> IsoType:
    return IsoType("dihedral", m)


TET = IsoType("tet")
OCT = IsoType("oct")
ICOS = IsoType("icos")

# display order of iso types among subgroup classes of equal order
_KIND_RANK = {"icos": 0, "oct": 1, "tet": 2, "dihedral": 3, "cyclic": 4}


@dataclass(frozen=True, eq=False)
class GroupTable:
    family: IsoType
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]

    identity = 0

    @property
    def order(self) -> int:
        return len(self.inv)

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def conj(self) -> tuple[tuple[int, ...], ...]:
        """``conj[g][x] == g x g^-1``."""
        mul, inv = self.mul, self.inv
        return tuple(
            tuple(mul[mul[g][x]][inv[g]] for x in self.elements())
            for g in self.elements()
        )

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for x in self.elements():
            k, y = 1, x
            while y != 0:
                y = self.mul[y][x]
                k += 1
            orders.append(k)
        return tuple(orders)

    def power(self, x: int, e: int) -> int:
        e %= self.element_orders[x]
        y = 0
        for _ in range(e):
            y = self.mul[y][x]
        return y

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        gens = [g for g in set(gens) if g != 0]
        elems = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                row = self.mul[x]
                for g in gens:
                    y = row[g]
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return frozenset(elems)

    def conjugate(self, g: int, S: Iterable[int]) -> frozenset[int]:
        row = self.conj[g]
        return frozenset(row[x] for x in S)

    def is_subgroup(self, S: Iterable[int]) -> bool:
        S = frozenset(S)
        if 0 not in S:
            return False
        return all(self.inv[a] in S for a in S) and all(
            self.mul[a][b] in S for a in S for b in S
        )


def check_group_axioms(G: GroupTable) -> None:
    """Exhaustively check the table; raises AssertionError on failure."""
    n = G.order
    mul, inv = G.mul, G.inv
    for a in range(n):
        assert mul[0][a] == a and mul[a][0] == a, "identity"
        assert mul[a][inv[a]] == 0 and mul[inv[a]][a] == 0, "inverse"
        assert sorted(mul[a]) == list(range(n)), "latin row"
    for a in range(n):
        ra = mul[a]
        for b in range(n):
            ab = ra[b]
            rab = mul[ab]
            rb = mul[b]
            for c in range(n):
                assert rab[c] == ra[rb[c]], "associativity"


def _table_from_mul(family: IsoType, mul: Sequence[Sequence[int]]) -> GroupTable:
    n = len(mul)
    inv = [0] * n
    for a in range(n):
        inv[a] = mul[a].index(0)
    return GroupTable(family, tuple(tuple(r) for r in mul), tuple(inv))


def cyclic_table(k: int) -> GroupTable:
    if k < 1:
        raise InvalidParameter(f"cyclic group needs k >= 1, got {k}")
    return _table_from_mul(Cyclic(k), [[(a + b) % k for b in range(k)] for a in range(k)])


def dihedral_table(m: int) -> GroupTable:
    """D_m with rotation r^i at id i and the half-turn r^i s at id m+i."""
    if m < 1:
        raise InvalidParameter(f"dihedral group needs m >= 1, got {m}")

    def prod(a: int, b: int) -> int:
        ia, sa = a % m, a >= m
        ib, sb = b % m, b >= m
        if not sa:
            return (ia + ib) % m + (m if sb else 0)
        if not sb:
            return (ia - ib) % m + m
        return (ia - ib) % m

    return _table_from_mul(
        Dihedral(m), [[prod(a, b) for b in range(2 * m)] for a in range(2 * m)]
    )


@lru_cache(maxsize=None)
def build_group(family: IsoType) -> GroupTable:
    if family.kind == "cyclic":
        return cyclic_table(family.n)
    if family.kind == "dihedral":
        return dihedral_table(family.n)
    if family.kind in ("tet", "oct", "icos"):
        from .geometry import platonic_rotations

        return platonic_rotations(family.kind)[0]
    raise InvalidParameter(f"unsupported family {family!r}")


def identify(G: GroupTable, S: Iterable[int]) -> IsoType:
    """Iso type of a subgroup from its order and largest element order."""
    S = frozenset(S)
    n = len(S)
    top = max(G.element_orders[x] for x in S)
    if top == n:
        return Cyclic(n)
    if 2 * top == n:
        return Dihedral(top)
    if (n, top) == (12, 3):
        return TET
    if (n, top) == (24, 4):
        return OCT
    if (n, top) == (60, 5):
        return ICOS
    raise ValueError(f"subgroup of order {n} is not a rotation group type")


def centralizer(G: GroupTable, S: Iterable[int]) -> frozenset[int]:
    S = list(S)
    mul = G.mul
    return frozenset(
        g for g in G.elements() if all(mul[g][s] == mul[s][g] for s in S)
    )


def normalizer(G: GroupTable, H: Iterable[int]) -> frozenset[int]:
    H = frozenset(H)
    return frozenset(g for g in G.elements() if G.conjugate(g, H) == H)


@dataclass(frozen=True)
class SubgroupClass:
    representative: frozenset[int]
    iso_type: IsoType
    class_size: int
    normalizer: frozenset[int]
    marker: str = ""
    conjugates: tuple[frozenset[int], ...] = field(default=(), compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.representative)

    @property
    def label(self) -> str:
        return f"{self.iso_type}{self.marker}"

    @property
    def is_normal(self) -> bool:
        return self.class_size == 1


def _sort_key(S: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(S))


def all_subgroups(G: GroupTable) -> list[frozenset[int]]:
    return [K for cls in subgroup_classes(G) for K in cls.conjugates]


@lru_cache(maxsize=None)
def _subgroup_orbits(G: GroupTable) -> tuple[tuple[frozenset[int], ...], ...]:
    # Every subgroup of a finite rotation group is generated by two cyclic
    # subgroups, and up to conjugacy the first of them may be taken from a
    # fixed set of class representatives.
    cyclic: dict[frozenset[int], int] = {}
    for x in G.elements():
        C = G.closure([x])
        cyclic.setdefault(C, x)

    seen: dict[frozenset[int], int] = {}
    orbits: list[set[frozenset[int]]] = []

    def register(H: frozenset[int]) -> None:
        if H in seen:
            return
        orbit = {G.conjugate(g, H) for g in G.elements()}
        for K in orbit:
            seen[K] = len(orbits)
        orbits.append(orbit)

    for C in sorted(cyclic, key=_sort_key):
        register(C)
    cyclic_reps = [min(orb, key=_sort_key) for orb in orbits]
    for A in cyclic_reps:
        a = cyclic[A]
        for B, b in cyclic.items():
            if B <= A or A <= B:
                continue
            register(G.closure([a, b]))
    return tuple(
        tuple(sorted(orb, key=_sort_key)) for orb in orbits
    )


@lru_cache(maxsize=None)
def _classes(G: GroupTable) -> tuple[SubgroupClass, ...]:
    raw = []
    for orbit in _subgroup_orbits(G):
        rep = orbit[0]
        iso = identify(G, rep)
        raw.append((rep, iso, orbit))
    raw.sort(key=lambda t: (-len(t[0]), _KIND_RANK[t[1].kind], -t[1].n, _sort_key(t[0])))

    by_type: dict[IsoType, list[int]] = {}
    for i, (_, iso, _) in enumerate(raw):
        by_type.setdefault(iso, []).append(i)

    markers = [""] * len(raw)
    for iso, idxs in by_type.items():
        if len(idxs) == 1:
            continue
        if G.family.kind == "oct" and len(idxs) == 2:
            for i in idxs:
                if len(raw[i][2]) == 1:
                    markers[i] = "s"
        elif len(idxs) == 2:
            markers[idxs[0]], markers[idxs[1]] = "u", "d"
        else:
            for j, i in enumerate(idxs, 1):
                markers[i] = str(j)

    out = []
    for (rep, iso, orbit), marker in zip(raw, markers):
        out.append(
            SubgroupClass(
                representative=rep,
                iso_type=iso,
                class_size=len(orbit),
                normalizer=normalizer(G, rep),
                marker=marker,
                conjugates=orbit,
            )
        )
    return tuple(out)


def subgroup_classes(G: GroupTable, noncyclic_only: bool = False) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups in canonical order.

    Classes are sorted by decreasing order; the representative of each class
    is its lexicographically smallest member.  Isomorphic classes that are
    not conjugate carry a marker: ``u``/``d`` for a pair of classes, ``s``
    for the normal Kleinian subgroup of the octahedral group, and running
    numbers otherwise.
    """
    classes = _classes(G)
    if noncyclic_only:
        return [c for c in classes if not c.iso_type.is_cyclic]
    return list(classes)


def units_up_to_sign(k: int) -> list[int]:
    """Residues ``1 <= a <= k/2`` coprime to ``k`` (``[1]`` for k <= 2)."""
    if k <= 2:
        return [1]
    return [a for a in range(1, k // 2 + 1) if gcd(a, k) == 1]
