"""
One-dimensional theta series and the theta series of the four cosets of
2O_K in O_K.

Every coset series is available two ways: from products of theta_2/theta_3
(``coset_theta_formula``) and by summing over lattice points directly
(``coset_theta_enumerate``).  The second is the reference the first is
tested against.

All precisions are in quarter-exponent units (see ``exactq``).
"""

from __future__ import annotations

from enum import Enum
from math import isqrt

from .exactq import Q4, QSeries, qs_add, qs_mul, qs_substitute_power
from .quadfield import Level


class CosetLabel(str, Enum):
    A = "A"  # 2O_K
    C = "C"  # 1 + 2O_K
    G = "G"  # w + 2O_K
    H = "H"  # 1 + w + 2O_K


# parities of (2x, 2y) over the coset, where the exponent is 4 Q_d(x, y)
_PARITY = {
    CosetLabel.A: (0, 0),
    CosetLabel.C: (1, 0),
    CosetLabel.G: (0, 1),
    CosetLabel.H: (1, 1),
}


def theta3(power: int, prec: int) -> QSeries:
    """sum over m in Z of q^(power m^2)."""
    coeffs = {0: 1}
    m = 1
    while Q4 * power * m * m < prec:
        coeffs[Q4 * power * m * m] = 2
        m += 1
    return QSeries(coeffs, prec)


def theta2(power: int, prec: int) -> QSeries:
    """sum over m in Z + 1/2 of q^(power m^2); m = k/2 with k odd."""
    coeffs = {}
    k = 1
    while power * k * k < prec:
        coeffs[power * k * k] = 2
        k += 2
    return QSeries(coeffs, prec)


def coset_theta_formula(lv: Level, label: CosetLabel | str, prec: int) -> QSeries:
    label = CosetLabel(label)
    ell = lv.ell
    if label == CosetLabel.A:
        return qs_add(qs_mul(theta3(4, prec), theta3(4 * ell, prec)),
                      qs_mul(theta2(4, prec), theta2(4 * ell, prec)))
    if label == CosetLabel.C:
        return qs_add(qs_mul(theta2(4, prec), theta3(4 * ell, prec)),
                      qs_mul(theta3(4, prec), theta2(4 * ell, prec)))
    # every coefficient of theta2(q) theta2(q^l) is a multiple of 4
    return qs_mul(theta2(1, prec), theta2(ell, prec)).exact_div(2)


def coset_theta_enumerate(lv: Level, label: CosetLabel | str, prec: int) -> QSeries:
    """Sum q^(4 Q_d(x, y)) over the coset by brute force.

    With x = X/2, y = Y/2 the quarter-exponent is 16 Q_d(x, y) = (2X + Y)^2 + l Y^2,
    so |Y| <= sqrt((prec - 1)/l) and, for each Y, |2X + Y| <= sqrt(prec - 1 - l Y^2).
    """
    label = CosetLabel(label)
    px, py = _PARITY[label]
    ell = lv.ell
    coeffs: dict[int, int] = {}
    if prec <= 0:
        return QSeries({}, prec)
    ymax = isqrt((prec - 1) // ell)
    for Y in range(-ymax, ymax + 1):
        if Y % 2 != py:
            continue
        room = prec - 1 - ell * Y * Y
        if room < 0:
            continue
        tmax = isqrt(room)
        for t in range(-tmax, tmax + 1):
            # t = 2X + Y, need X integer of parity px
            if (t - Y) % 2:
                continue
            X = (t - Y) // 2
            if X % 2 != px:
                continue
            e = t * t + ell * Y * Y
            coeffs[e] = coeffs.get(e, 0) + 1
    return QSeries(coeffs, prec)


def coset_thetas(lv: Level, prec: int, enumerate_: bool = False) -> dict[CosetLabel, QSeries]:
    f = coset_theta_enumerate if enumerate_ else coset_theta_formula
    return {lab: f(lv, lab, prec) for lab in CosetLabel}


def check_coset_sum_identity(lv: Level, prec: int) -> bool:
    """2G(q) == A(q^(1/4)) - A(q) - C(q) below ``prec``."""
    a_big = coset_theta_formula(lv, CosetLabel.A, 4 * prec)
    lhs = coset_theta_formula(lv, CosetLabel.G, prec) * 2
    rhs = (qs_substitute_power(a_big, 1, 4)
           - coset_theta_formula(lv, CosetLabel.A, prec)
           - coset_theta_formula(lv, CosetLabel.C, prec))
    return lhs.prec == rhs.prec == prec and lhs.agrees(rhs)


# alpha decompositions


def _odd_sum(scale: int, prec: int, coef: int = 1) -> QSeries:
    """coef * sum over positive odd i of q^(scale (i^2 - 1))."""
    coeffs = {}
    i = 1
    while Q4 * scale * (i * i - 1) < prec:
        coeffs[Q4 * scale * (i * i - 1)] = coef
        i += 2
    return QSeries(coeffs, prec)


def _pos_sum(scale: int, prec: int, coef: int = 1) -> QSeries:
    """coef * sum over positive integers i of q^(scale (i^2 - 1))."""
    coeffs = {}
    i = 1
    while Q4 * scale * (i * i - 1) < prec:
        coeffs[Q4 * scale * (i * i - 1)] = coef
        i += 1
    return QSeries(coeffs, prec)


def _s_sum(scale: int, prec: int) -> QSeries:
    """sum over s in S = {(j^2 - 1)/4 : j odd > 0} of q^(scale s)."""
    coeffs = {}
    j = 1
    while scale * (j * j - 1) < prec:
        coeffs[scale * (j * j - 1)] = 1
        j += 2
    return QSeries(coeffs, prec)


def alpha_decomposition(lv: Level, prec: int) -> dict[int, QSeries]:
    """The seven auxiliary series alpha_1..alpha_7, keyed 1..7.

    They recombine as
        G = 2 q^((l+1)/4) alpha_1
        A = alpha_2 + q^(l+1) alpha_3 + q^(4l) alpha_4
        C = q alpha_5 + q^l alpha_6 + q^(4l+1) alpha_7
    (see ``recompose``).
    """
    ell = lv.ell
    theta3_4 = qs_add(QSeries.one(prec), _pos_sum(4, prec, 2).shift(Q4 * 4))
    return {
        1: qs_mul(_s_sum(1, prec), _s_sum(ell, prec)),
        2: theta3_4,
        3: qs_mul(_odd_sum(1, prec), _odd_sum(ell, prec)) * 4,
        4: qs_mul(_pos_sum(4 * ell, prec, 2), theta3_4),
        5: _odd_sum(1, prec, 2),
        6: qs_mul(_odd_sum(ell, prec, 2), theta3_4),
        7: qs_mul(_odd_sum(1, prec), _pos_sum(4 * ell, prec)) * 4,
    }


def recompose(lv: Level, alphas: dict[int, QSeries]) -> dict[CosetLabel, QSeries]:
    ell = lv.ell
    prec = min(a.prec for a in alphas.values())

    def sh(s: QSeries, k_q: int) -> QSeries:
        return s.shift(Q4 * k_q).truncate(prec)

    g = (alphas[1] * 2).shift(lv.d * Q4).truncate(prec)
    a = qs_add(qs_add(alphas[2], sh(alphas[3], ell + 1)), sh(alphas[4], 4 * ell))
    c = qs_add(qs_add(sh(alphas[5], 1), sh(alphas[6], ell)), sh(alphas[7], 4 * ell + 1))
    return {CosetLabel.A: a, CosetLabel.C: c, CosetLabel.G: g}


def check_alpha_recomposition(lv: Level, prec: int) -> dict[CosetLabel, bool]:
    parts = recompose(lv, alpha_decomposition(lv, prec))
    return {lab: s.agrees(coset_theta_formula(lv, lab, prec)) and s.prec == prec
            for lab, s in parts.items()}
