"""
Theta series of the construction-A lattice L_l(C) = {x in O_K^n : x mod 2 in C}.

``theta_of_code`` substitutes the coset series A, C, G into the symmetrized
weight enumerator.  ``theta_of_code_enumerate`` instead sums, codeword by
codeword, the product of the coset series picked out by each coordinate,
keeping the w and 1+w cosets apart.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from enum import Enum

from .coset_theta import CosetLabel, coset_theta_enumerate, coset_theta_formula
from .errors import LengthTooLarge, RingLevelMismatch
from .exactq import Q4, QSeries, poly_eval_qseries, qs_add, qs_mul
from .quadfield import Level
from .ringcodes import LinearCode, swe

log = logging.getLogger(__name__)

MAX_ENUM_WORK = 200_000  # bound on n * |C| for the per-codeword path

_LABEL_OF_SYMBOL = (CosetLabel.A, CosetLabel.C, CosetLabel.G, CosetLabel.H)


class ThetaPath(str, Enum):
    FORMULA = "FORMULA"
    ENUMERATION = "ENUMERATION"


@dataclass(frozen=True)
class CodeThetaResult:
    level: Level
    series: QSeries
    code: LinearCode
    path: ThetaPath

    def coefficients(self) -> list[int]:
        return self.series.to_list()


def _check_kind(c: LinearCode, lv: Level, allow_mismatch: bool):
    if c.kind != lv.ring_kind:
        msg = "code over %s used at level %d (ring %s)" % (c.kind.value, lv.ell, lv.ring_kind.value)
        if not allow_mismatch:
            raise RingLevelMismatch(msg)
        warnings.warn(msg)


def theta_of_code(c: LinearCode, lv: Level, prec: int, allow_mismatch: bool = False) -> CodeThetaResult:
    """swe_C(A_d, C_d, G_d) below quarter-precision ``prec``."""
    _check_kind(c, lv, allow_mismatch)
    args = [coset_theta_formula(lv, lab, prec) for lab in (CosetLabel.A, CosetLabel.C, CosetLabel.G)]
    return CodeThetaResult(lv, poly_eval_qseries(swe(c), args), c, ThetaPath.FORMULA)


def theta_of_code_enumerate(c: LinearCode, lv: Level, prec: int,
                            allow_mismatch: bool = False) -> CodeThetaResult:
    """Sum over codewords u of prod_i theta(u_i + 2O_K), with lattice-enumerated coset series."""
    _check_kind(c, lv, allow_mismatch)
    if c.length * c.size > MAX_ENUM_WORK:
        raise LengthTooLarge("n*|C| = %d exceeds %d" % (c.length * c.size, MAX_ENUM_WORK))
    coset = {lab: coset_theta_enumerate(lv, lab, prec) for lab in CosetLabel}
    total = QSeries.zero(prec)
    for u in c.codewords:
        term = QSeries.one(prec)
        for x in u:
            term = qs_mul(term, coset[_LABEL_OF_SYMBOL[x]])
        total = qs_add(total, term)
    return CodeThetaResult(lv, total, c, ThetaPath.ENUMERATION)


@dataclass(frozen=True)
class LevelComparison:
    ell_high: int
    ell_low: int
    first_difference: int | None  # q-exponent, None if equal below precision
    bound: int                    # (l' + 1)/4
    prec_q: int

    @property
    def passed(self) -> bool:
        return self.first_difference is None or self.first_difference >= self.bound

    def to_text(self) -> str:
        fd = "none below q^%d" % self.prec_q if self.first_difference is None else "q^%d" % self.first_difference
        return "first difference %s, bound q^%d, %s" % (fd, self.bound, "PASS" if self.passed else "FAIL")

    def to_json(self) -> dict:
        return {"ell": self.ell_high, "ell2": self.ell_low, "first_difference": self.first_difference,
                "bound": self.bound, "prec": self.prec_q, "pass": self.passed}


def compare_levels(c: LinearCode, lv1: Level, lv2: Level, prec: int) -> LevelComparison:
    """Where do the theta series at two levels l > l' first disagree?"""
    if lv1.ell <= lv2.ell:
        raise ValueError("need l > l'")
    s1 = theta_of_code(c, lv1, prec).series
    s2 = theta_of_code(c, lv2, prec).series
    fd = s1.first_difference(s2)
    fd_q = None if fd is None else fd // Q4
    cmp = LevelComparison(lv1.ell, lv2.ell, fd_q, (lv2.ell + 1) // 4, prec // Q4)
    log.debug("compare %s vs %s: %s", lv1, lv2, cmp.to_text())
    return cmp
