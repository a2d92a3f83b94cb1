"""
The field Q(sqrt(-l)) for l = 3 mod 4: levels, the ring of integers Z[w] with
w = (-1 + sqrt(-l))/2, its principal norm form, and O_K / 2 O_K.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import NotAdmissible, NotSquarefree


class RingKind(str, Enum):
    F4 = "F4"
    F2xF2 = "F2xF2"


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class Level:
    ell: int
    d: int
    ring_kind: RingKind
    strict: bool = False

    @property
    def squarefree(self) -> bool:
        return is_squarefree(self.ell)

    def __str__(self):
        return "l=%d" % self.ell


def make_level(ell: int, strict: bool = False, warn: bool = False) -> Level:
    """Validate ``ell``: it must be 3 mod 4, and squarefree when ``strict``.

    l = 3 mod 8 gives O_K/2O_K = F4, l = 7 mod 8 gives F2 x F2.
    """
    ell = int(ell)
    if ell <= 0 or ell % 4 != 3:
        raise NotAdmissible("level %d is not 3 mod 4" % ell)
    if not is_squarefree(ell):
        if strict:
            raise NotSquarefree("level %d is not squarefree" % ell)
        if warn:
            warnings.warn("level %d is not squarefree; using the formal theta formulas" % ell)
    kind = RingKind.F4 if ell % 8 == 3 else RingKind.F2xF2
    return Level(ell, (ell + 1) // 4, kind, strict)


def admissible_levels(kind: RingKind | None = None, upto: int = 100, strict: bool = False) -> list[Level]:
    out = []
    for ell in range(3, upto + 1, 4):
        if strict and not is_squarefree(ell):
            continue
        lv = make_level(ell)
        if kind is None or lv.ring_kind == kind:
            out.append(Level(lv.ell, lv.d, lv.ring_kind, strict))
    return out


@dataclass(frozen=True)
class OKElem:
    """a + b*w."""
    a: int
    b: int

    def __add__(self, other):
        return OKElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return OKElem(self.a - other.a, self.b - other.b)


def norm_form(lv: Level, x: int, y: int) -> int:
    """|x - y w|^2 = x^2 + xy + d y^2."""
    return x * x + x * y + lv.d * y * y


def ok_norm(lv: Level, z: OKElem) -> int:
    """|a + b w|^2 = a^2 - ab + d b^2."""
    return z.a * z.a - z.a * z.b + lv.d * z.b * z.b


def coset_reps(lv: Level) -> list[OKElem]:
    """Representatives of O_K / 2O_K in the fixed order 0, 1, w, 1+w."""
    return [OKElem(0, 0), OKElem(1, 0), OKElem(0, 1), OKElem(1, 1)]
