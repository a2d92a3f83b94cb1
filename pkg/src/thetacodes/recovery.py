"""
Recovering symmetrized weight enumerators from a theta series.

Given a level l, a length n and the coefficients lambda_e of a target series,
write a generic ternary form f = sum c_ijk X^i Y^j Z^k of degree n and match
f(A_d, C_d, G_d) against the target at every exponent where some monomial
first contributes.  The monomial A^i C^j G^k starts at q^(j + k(l+1)/4).
The exact solution set of that linear system is the family of candidate
enumerators.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .code_theta import theta_of_code
from .coset_theta import CosetLabel, coset_theta_formula
from .errors import (BadExponents, FamilyTooLarge, InconsistentTarget,
                     InsufficientPrecision, LengthTooLarge)
from .exactq import (Q4, HomogPoly, LinearSystem, QSeries, SolutionSpace,
                     monomials, qs_mul, reparametrize, solve_exact)
from .quadfield import Level
from .ringcodes import LinearCode, enumerate_codes, swe

Mono = tuple[int, int, int]

# the generic cubic c1 x^3 + c2 y^3 + c3 z^3 + c4 x^2y + c5 x^2z + c6 y^2x
#                 + c7 y^2z + c8 z^2x + c9 z^2y + c10 xyz
CUBIC_NAMES: dict[str, Mono] = {
    "c1": (3, 0, 0), "c2": (0, 3, 0), "c3": (0, 0, 3), "c4": (2, 1, 0), "c5": (2, 0, 1),
    "c6": (1, 2, 0), "c7": (0, 2, 1), "c8": (1, 0, 2), "c9": (0, 1, 2), "c10": (1, 1, 1),
}


def first_appearance_exponent(n: int, lv: Level, i: int, j: int, k: int) -> int:
    if min(i, j, k) < 0 or i + j + k != n:
        raise BadExponents("(%d, %d, %d) is not a degree-%d monomial" % (i, j, k, n))
    return j + k * lv.d


def ordered_columns(n: int, lv: Level) -> list[Mono]:
    """Monomials by first-appearance exponent, ties by (k, j) ascending."""
    return sorted(monomials(3, n), key=lambda m: (first_appearance_exponent(n, lv, *m), m[2], m[1]))


def required_precision(n: int, lv: Level) -> int:
    """Quarter-precision needed to read every lambda_e with e <= n(l+1)/4."""
    return Q4 * (n * lv.d + 1)


@dataclass(frozen=True)
class RecoveryProblem:
    n: int
    level: Level
    target: QSeries

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        need = required_precision(self.n, self.level)
        if self.target.prec < need:
            raise InsufficientPrecision(
                "target known below q^%s, need through q^%d" % (self.target.prec_q, self.n * self.level.d))

    @property
    def r(self) -> int:
        return (self.n + 1) * (self.n + 2) // 2

    @property
    def s(self) -> int:
        return self.n * self.level.d

    def lambdas(self) -> dict[int, int]:
        return {e: self.target.coeff_q(e) for e in range(self.s + 1)}


def monomial_series(n: int, lv: Level, prec: int) -> dict[Mono, QSeries]:
    a, c, g = (coset_theta_formula(lv, lab, prec) for lab in (CosetLabel.A, CosetLabel.C, CosetLabel.G))
    pw = {}
    for name, base in (("A", a), ("C", c), ("G", g)):
        ps = [QSeries.one(prec)]
        for _ in range(n):
            ps.append(qs_mul(ps[-1], base))
        pw[name] = ps
    return {(i, j, k): qs_mul(qs_mul(pw["A"][i], pw["C"][j]), pw["G"][k])
            for (i, j, k) in monomials(3, n)}


def build_system(prob: RecoveryProblem) -> LinearSystem:
    n, lv = prob.n, prob.level
    cols = ordered_columns(n, lv)
    series = monomial_series(n, lv, required_precision(n, lv))
    exps = sorted({first_appearance_exponent(n, lv, *m) for m in cols})
    matrix = [[series[m].coeff_q(e) for m in cols] for e in exps]
    rhs = [prob.target.coeff_q(e) for e in exps]
    return LinearSystem(tuple(map(tuple, matrix)), tuple(rhs), tuple(cols), tuple(exps))


def full_system(prob: RecoveryProblem) -> LinearSystem:
    """One equation per integer exponent below the target's precision (Xi plus the rest)."""
    n, lv = prob.n, prob.level
    cols = ordered_columns(n, lv)
    top = prob.target.prec // Q4 * Q4
    series = monomial_series(n, lv, top)
    exps = list(range(top // Q4))
    matrix = [[series[m].coeff_q(e) for m in cols] for e in exps]
    rhs = [prob.target.coeff_q(e) for e in exps]
    return LinearSystem(tuple(map(tuple, matrix)), tuple(rhs), tuple(cols), tuple(exps))


def is_triangular(system: LinearSystem) -> bool:
    """True when every row is the first to mention exactly one column."""
    seen: set[int] = set()
    for row in system.matrix:
        new = {c for c, x in enumerate(row) if x != 0} - seen
        if len(new) != 1:
            return False
        seen |= new
    return len(seen) == len(system.columns)


class Regime(str, Enum):
    UNIQUE_GUARANTEED = "UNIQUE_GUARANTEED"
    FAMILY_BOUND = "FAMILY_BOUND"
    OUTSIDE_THEOREM = "OUTSIDE_THEOREM"


def uniqueness_threshold(n: int) -> Fraction:
    """2(n+1)(n+2)/n - 1."""
    return Fraction(2 * (n + 1) * (n + 2), n) - 1


def classify(n: int, lv: Level) -> Regime:
    ell = lv.ell
    if ell < uniqueness_threshold(n):
        return Regime.FAMILY_BOUND
    if 4 * n < ell + 1:
        return Regime.UNIQUE_GUARANTEED
    return Regime.OUTSIDE_THEOREM


def delta_lower_bound(n: int, lv: Level) -> int:
    """(n+1)(n+2)/2 - n(l+1)/4 - 1."""
    return (n + 1) * (n + 2) // 2 - n * lv.d - 1


@dataclass(frozen=True)
class RecoveryOutcome:
    problem: RecoveryProblem
    system: LinearSystem
    space: SolutionSpace
    regime: Regime

    @property
    def delta(self) -> int:
        return self.space.dimension

    @property
    def delta_lower_bound(self) -> int:
        return delta_lower_bound(self.problem.n, self.problem.level)

    def polynomial(self, params: Sequence = ()) -> dict[Mono, Fraction]:
        x = self.space.point(params)
        return dict(zip(self.system.columns, x))

    def unique_polynomial(self) -> HomogPoly | None:
        """The recovered form when the family is a single integral point."""
        if self.delta:
            return None
        coeffs = self.polynomial()
        if any(v.denominator != 1 for v in coeffs.values()):
            return None
        return HomogPoly(3, self.problem.n, {m: int(v) for m, v in coeffs.items()})

    def to_json(self, matches: Sequence[LinearCode] | None = None) -> dict:
        out = {
            "n": self.problem.n,
            "ell": self.problem.level.ell,
            "regime": self.regime.value,
            "delta": self.delta,
            "delta_lower_bound": self.delta_lower_bound,
            "columns": [list(c) for c in self.system.columns],
            "particular": [str(x) for x in self.space.particular],
            "kernel": [[str(x) for x in b] for b in self.space.kernel],
        }
        if matches is not None:
            out["matches"] = [_code_descriptor(c) for c in matches]
        return out


def _code_descriptor(c: LinearCode) -> dict:
    d = c.describe()
    d["swe"] = str(swe(c))
    return d


def recover(prob: RecoveryProblem, prefer_free: Sequence[Mono] = ()) -> RecoveryOutcome:
    """Solve the matching system; ``prefer_free`` names monomials to keep as parameters."""
    system = build_system(prob)
    space = solve_exact(system, [system.columns.index(tuple(m)) for m in prefer_free])
    # Xi always has full row rank; acceptability shows up only against the rest of the target
    if not prob.target.is_integral() or not solve_exact(full_system(prob)).consistent:
        raise InconsistentTarget("no degree-%d form matches this series at level %d"
                                 % (prob.n, prob.level.ell))
    return RecoveryOutcome(prob, system, space, classify(prob.n, prob.level))


# closed-form solutions for n = 3, as {name: ({lambda index: coef}, {param name: coef})}

_F = Fraction

LEVEL7_PARAMS = ("c7", "c8", "c9")
LEVEL7_CLOSED_FORM: dict[str, tuple[dict[int, Fraction], dict[str, Fraction]]] = {
    "c1": ({0: _F(1)}, {}),
    "c4": ({1: _F(1, 2)}, {}),
    "c2": ({1: _F(1, 2), 3: _F(1, 8), 5: _F(-1, 8)}, {"c9": _F(1)}),
    "c3": ({0: _F(3, 2), 2: _F(-1, 4), 4: _F(-1, 4), 6: _F(1, 8)}, {"c7": _F(1)}),
    "c5": ({0: _F(-3), 4: _F(1, 2)}, {"c7": _F(-4), "c8": _F(-2)}),
    "c6": ({0: _F(3, 2), 2: _F(1, 4), 4: _F(-1, 4)}, {"c7": _F(2), "c8": _F(1)}),
    "c10": ({1: _F(-1), 5: _F(1, 4)}, {"c9": _F(-2)}),
    "c7": ({}, {"c7": _F(1)}),
    "c8": ({}, {"c8": _F(1)}),
    "c9": ({}, {"c9": _F(1)}),
}

LEVEL15_CLOSED_FORM: dict[str, tuple[dict[int, Fraction], dict[str, Fraction]]] = {
    "c1": ({0: _F(1)}, {}),
    "c2": ({3: _F(1, 8)}, {}),
    "c4": ({1: _F(1, 2)}, {}),
    "c6": ({2: _F(1, 4)}, {}),
    "c3": ({0: _F(-1), 2: _F(-1, 2), 4: _F(3, 4), 6: _F(1, 4), 8: _F(-3, 8), 12: _F(1, 8)}, {}),
    "c7": ({0: _F(3, 4), 2: _F(-1, 4), 4: _F(-1, 8), 6: _F(1, 8)}, {}),
    "c8": ({0: _F(3, 2), 2: _F(1, 2), 4: _F(-3, 4), 6: _F(-1, 4), 8: _F(1, 4)}, {}),
    "c5": ({0: _F(-3), 4: _F(1, 2)}, {}),
    "c9": ({1: _F(3, 8), 5: _F(-1, 4), 9: _F(1, 8)}, {}),
    "c10": ({1: _F(-1), 5: _F(1, 4)}, {}),
}


def verify_solution_form(system: LinearSystem, closed_form: Mapping, params: Sequence[str] = (),
                         trials: int = 20, seed: int = 0) -> bool:
    """Check that solving ``system`` reproduces ``closed_form`` for random rational targets.

    ``system`` must be over the ten cubic coefficients; only its matrix is used.
    For each trial the right-hand side is a random rational lambda vector, the
    family is re-expressed with ``params`` as the free coordinates, and every
    coefficient is compared with the closed form term by term.
    """
    if set(closed_form) != set(CUBIC_NAMES):
        return False
    if any(set(par) - set(params) for _, par in closed_form.values()):
        return False
    rng = random.Random(seed)
    col_of = {name: system.columns.index(m) for name, m in CUBIC_NAMES.items()}
    param_cols = [col_of[p] for p in params]
    for _ in range(trials):
        lam = {e: Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for e in system.row_labels}
        space = solve_exact(system.with_rhs([lam[e] for e in system.row_labels]))
        if space.particular is None or space.dimension != len(params):
            return False
        try:
            forms = reparametrize(space, param_cols)
        except ValueError:
            return False
        for name, (lam_part, par_part) in closed_form.items():
            const, coefs = forms[col_of[name]]
            want = sum((c * lam[e] for e, c in lam_part.items()), Fraction(0))
            if const != want:
                return False
            if any(coefs[i] != par_part.get(p, 0) for i, p in enumerate(params)):
                return False
    return True


def verify_outcome_form(outcome: RecoveryOutcome, trials: int = 20, seed: int = 0) -> bool:
    """verify_solution_form against the stored closed form for n = 3, l in {7, 15}."""
    ell = outcome.problem.level.ell
    if outcome.problem.n != 3 or ell not in (7, 15):
        raise ValueError("closed forms are stored for n = 3 and l = 7, 15 only")
    if ell == 7:
        return verify_solution_form(outcome.system, LEVEL7_CLOSED_FORM, LEVEL7_PARAMS, trials, seed)
    return verify_solution_form(outcome.system, LEVEL15_CLOSED_FORM, (), trials, seed)


def cubic_point(outcome: RecoveryOutcome, **fixed) -> dict[Mono, Fraction]:
    """The member of an n = 3 family with the named coefficients fixed, e.g. c7=1, c8=2, c9=0."""
    cols = outcome.system.columns
    names = sorted(fixed, key=lambda s: int(s[1:]))
    forms = reparametrize(outcome.space, [cols.index(CUBIC_NAMES[s]) for s in names])
    vals = [Fraction(fixed[s]) for s in names]
    return {m: const + sum((a * v for a, v in zip(coefs, vals)), Fraction(0))
            for m, (const, coefs) in zip(cols, forms)}


# searching the family and the code list


def _is_code_size(total: int, n: int) -> bool:
    return total >= 1 and total & (total - 1) == 0 and total.bit_length() - 1 <= 2 * n


def integer_points_in_family(space: SolutionSpace, n: int, box: int | None = None) -> list[HomogPoly]:
    """Members of the family that could be a code's swe.

    Integer points only arise from integer values of the free coordinates, so
    those are scanned over [-box, box] (default 4n).  Kept: nonnegative integer
    coefficients, X^n coefficient 1, and coefficient sum 2^m with m <= 2n.
    """
    if not space.consistent:
        return []
    if space.dimension > 3:
        raise FamilyTooLarge("family of dimension %d" % space.dimension)
    if box is None:
        box = 4 * n
    pure_x = space.columns.index((n, 0, 0))
    out = []
    for t in itertools.product(range(-box, box + 1), repeat=space.dimension):
        x = space.point(t)
        if any(v.denominator != 1 or v < 0 for v in x):
            continue
        if x[pure_x] != 1 or not _is_code_size(int(sum(x)), n):
            continue
        out.append(HomogPoly(3, n, {m: int(v) for m, v in zip(space.columns, x)}))
    return out


def search_codes_for_theta(target: QSeries, n: int, lv: Level) -> list[LinearCode]:
    """All length-n codes over the level's ring whose theta matches ``target``."""
    if n > 3:
        raise LengthTooLarge("exhaustive search limited to n <= 3")
    cache: dict[HomogPoly, bool] = {}
    found = []
    for code in enumerate_codes(lv.ring_kind, n):
        w = swe(code)
        if w not in cache:
            cache[w] = theta_of_code(code, lv, target.prec).series.agrees(target)
        if cache[w]:
            found.append(code)
    return found
