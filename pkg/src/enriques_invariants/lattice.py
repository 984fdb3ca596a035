"""Exact arithmetic in the Enriques lattice.

The numerical lattice of an Enriques surface is the even unimodular lattice
of signature (1, 9), isomorphic to U + E8(-1).  Everything here works in the
isotropic-decagon basis {D, f1, ..., f9} with

    D.D = 10,   D.fi = 3,   fi.fi = 0,   fi.fj = 1  (i != j),

which is convenient because the ten classes f1, ..., f9 and
f10 = 3D - f1 - ... - f9 form an isotropic 10-sequence (fi.fj = 1 for
i != j) and every class we care about is a small integer combination of
them.  All routines are exact integer computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

RANK = 10


def basis_gram() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the {D, f1..f9} basis.

    Determinant -1 and signature (1, 9); the test suite recomputes both
    from scratch.
    """
    rows = []
    for i in range(RANK):
        row = []
        for j in range(RANK):
            if i == 0 and j == 0:
                row.append(10)
            elif i == 0 or j == 0:
                row.append(3)
            elif i == j:
                row.append(0)
            else:
                row.append(1)
        rows.append(tuple(row))
    return tuple(rows)


GRAM = basis_gram()


@dataclass(frozen=True)
class NumClass:
    """Numerical divisor class: integer coordinates in the fixed basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != RANK:
            raise ValueError(f"need {RANK} coordinates, got {len(self.coords)}")
        if not all(isinstance(c, int) for c in self.coords):
            raise TypeError("coordinates must be integers")

    @staticmethod
    def zero() -> "NumClass":
        return _ZERO

    def __bool__(self) -> bool:
        return any(self.coords)

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "NumClass") -> "NumClass":
        return NumClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "NumClass":
        return NumClass(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "NumClass":
        if not isinstance(k, int):
            return NotImplemented
        return NumClass(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def square(self) -> int:
        return inner(self, self)

    def __str__(self) -> str:
        return "num[" + ",".join(str(c) for c in self.coords) + "]"


_ZERO = NumClass((0,) * RANK)
DELTA = NumClass((1,) + (0,) * 9)


def inner(a: NumClass, b: NumClass) -> int:
    """Intersection pairing of two numerical classes.

    Expanded form of x^T G y for the structured Gram matrix above; the
    closed form avoids the 10x10 double loop.
    """
    a0, b0 = a.coords[0], b.coords[0]
    sa = sum(a.coords[1:])
    sb = sum(b.coords[1:])
    dot = sum(x * y for x, y in zip(a.coords[1:], b.coords[1:]))
    return 10 * a0 * b0 + 3 * (a0 * sb + b0 * sa) + sa * sb - dot


def isotropic_generator(i: int) -> NumClass:
    """The i-th member of the standard isotropic 10-sequence.

    i in 1..9 gives fi; i = 10 gives f10 = 3D - f1 - ... - f9, the unique
    primitive isotropic class pairing to 1 with each of f1..f9.
    """
    if not 1 <= i <= 10:
        raise ValueError("index must be in 1..10")
    if i <= 9:
        coords = [0] * RANK
        coords[i] = 1
        return NumClass(tuple(coords))
    return NumClass((3,) + (-1,) * 9)


def two_isotropic_generator(i: int, j: int) -> NumClass:
    """The isotropic class D - fi - fj (i != j), pairing 2 with fi and fj."""
    if i == j:
        raise ValueError("indices must be distinct")
    return DELTA - isotropic_generator(i) - isotropic_generator(j)


def divisibility(a: NumClass) -> int:
    """gcd of the coordinates; 0 for the zero class."""
    return math.gcd(*a.coords)
