"""Exact coordinates for the Platonic rotation groups.

Coordinates live in Q(sqrt 5); the tetrahedral and octahedral groups only
ever use the rational part.  A rotation is recovered from where it sends two
adjacent vertices, so the whole group falls out of the vertex set without
trigonometry.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .groups import ICOS, OCT, TET, GroupTable, _table_from_mul


class QSqrt5:
    """Number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _lift(x) -> "QSqrt5":
        return x if isinstance(x, QSqrt5) else QSqrt5(x)

    def __add__(self, other):
        other = self._lift(other)
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return QSqrt5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt5":
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, other):
        other = self._lift(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        num = self * other.conjugate()
        return QSqrt5(num.a / n, num.b / n)

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        d = self.a * self.a - 5 * self.b * self.b
        return sa if d > 0 else sb

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSqrt5(other)
        if not isinstance(other, QSqrt5):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"QSqrt5({self.a}, {self.b})"


Vec = tuple[QSqrt5, QSqrt5, QSqrt5]
Mat = tuple[Vec, Vec, Vec]

PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))


def dot(u: Sequence[QSqrt5], v: Sequence[QSqrt5]) -> QSqrt5:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Sequence[QSqrt5], v: Sequence[QSqrt5]) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def matvec(M: Mat, v: Sequence[QSqrt5]) -> Vec:
    return tuple(dot(row, v) for row in M)  # type: ignore[return-value]


def matmul(A: Mat, B: Mat) -> Mat:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, c) for c in cols) for row in A)  # type: ignore[return-value]


def det(M: Mat) -> QSqrt5:
    return dot(M[0], cross(M[1], M[2]))


def inverse(M: Mat) -> Mat:
    d = det(M)
    # rows of the inverse are the columns of the adjugate
    c0, c1, c2 = cross(M[1], M[2]), cross(M[2], M[0]), cross(M[0], M[1])
    return tuple(
        tuple(c[i] / d for c in (c0, c1, c2)) for i in range(3)
    )  # type: ignore[return-value]


def _vec(*xs) -> Vec:
    return tuple(QSqrt5._lift(x) for x in xs)  # type: ignore[return-value]


def polyhedron_vertices(kind: str) -> list[Vec]:
    if kind == "tet":
        return [_vec(1, 1, 1), _vec(1, -1, -1), _vec(-1, 1, -1), _vec(-1, -1, 1)]
    if kind == "oct":
        return [_vec(x, y, z) for x in (1, -1) for y in (1, -1) for z in (1, -1)]
    if kind == "icos":
        out = []
        for s in (1, -1):
            for t in (1, -1):
                base = (QSqrt5(0), QSqrt5(s), PHI * t)
                for shift in range(3):
                    out.append(tuple(base[(i - shift) % 3] for i in range(3)))
        return out  # type: ignore[return-value]
    raise ValueError(f"no polyhedron for {kind!r}")


def _columns(a: Vec, b: Vec) -> Mat:
    c = cross(a, b)
    return tuple((a[i], b[i], c[i]) for i in range(3))  # type: ignore[return-value]


@lru_cache(maxsize=None)
def platonic_rotations(kind: str) -> tuple[GroupTable, tuple[Mat, ...]]:
    """Multiplication table and matching exact matrices, identity first."""
    family = {"tet": TET, "oct": OCT, "icos": ICOS}[kind]
    V = polyhedron_vertices(kind)
    vindex = {v: i for i, v in enumerate(V)}
    v1 = V[0]
    v2 = V[1]
    for w in V[2:]:
        if (dot(v1, w) - dot(v1, v2)).sign() > 0:
            v2 = w
    g12 = dot(v1, v2)
    src_inv = inverse(_columns(v1, v2))

    mats: list[Mat] = []
    seen = set()
    for w1 in V:
        for w2 in V:
            if w2 == w1 or dot(w1, w2) != g12:
                continue
            R = matmul(_columns(w1, w2), src_inv)
            if R in seen:
                continue
            if det(R) != 1 or any(matvec(R, v) not in vindex for v in V):
                continue
            seen.add(R)
            mats.append(R)
    ident = tuple(tuple(QSqrt5(int(i == j)) for j in range(3)) for i in range(3))
    mats.remove(ident)
    mats.insert(0, ident)

    perms = [tuple(vindex[matvec(R, v)] for v in V) for R in mats]
    pindex = {p: i for i, p in enumerate(perms)}
    mul = [
        [pindex[tuple(pa[pb[i]] for i in range(len(V)))] for pb in perms]
        for pa in perms
    ]
    table = _table_from_mul(family, mul)
    assert table.order == family.order
    return table, tuple(mats)
