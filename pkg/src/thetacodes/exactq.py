"""
Exact arithmetic kernel: truncated q-series on the quarter-exponent grid,
homogeneous polynomials with integer coefficients, and linear algebra over Q.

Exponents of a QSeries are stored as integers counting quarter powers of q,
so ``{9: 2}`` is ``2q^(9/4)``.  ``prec`` is in the same unit; every
coefficient strictly below ``prec`` is exact, nothing at or above it is kept.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, NonDivisibleExponent, ParseError


Q4 = 4  # quarter-exponent units per unit power of q


def _clean(coeffs: Mapping[int, int], prec: int) -> dict[int, int]:
    out = {}
    for e, c in coeffs.items():
        if e < 0:
            raise ValueError("negative exponent %r" % (e,))
        if c and e < prec:
            out[e] = int(c)
    return out


@dataclass(frozen=True)
class QSeries:
    coeffs: Mapping[int, int]
    prec: int

    def __post_init__(self):
        if self.prec < 0:
            raise ValueError("precision must be nonnegative")
        object.__setattr__(self, "coeffs", _clean(self.coeffs, self.prec))

    # construction

    @classmethod
    def from_q(cls, coeffs: Mapping[int, int], prec_q: int) -> "QSeries":
        """Build from integer q-exponents and a precision in q-units."""
        return cls({Q4 * e: c for e, c in coeffs.items()}, Q4 * prec_q)

    @classmethod
    def from_list(cls, coeffs: Sequence[int], prec_q: int | None = None) -> "QSeries":
        """Dense list of coefficients at q^0, q^1, ...; precision defaults to len."""
        if prec_q is None:
            prec_q = len(coeffs)
        return cls.from_q(dict(enumerate(coeffs)), prec_q)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls({0: 1}, prec)

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls({}, prec)

    # access

    @property
    def prec_q(self) -> Fraction:
        return Fraction(self.prec, Q4)

    def __getitem__(self, e: int) -> int:
        """Coefficient at quarter-exponent ``e``."""
        if e >= self.prec:
            raise IndexError("exponent %d beyond precision %d" % (e, self.prec))
        return self.coeffs.get(e, 0)

    def coeff_q(self, e: int) -> int:
        """Coefficient of q^e for an integer exponent e."""
        return self[Q4 * e]

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def is_integral(self) -> bool:
        """True when every stored exponent is a whole power of q."""
        return all(e % Q4 == 0 for e in self.coeffs)

    def to_list(self) -> list[int]:
        """Dense coefficients at q^0 .. q^(m-1), m = number of whole q-powers known."""
        if not self.is_integral():
            raise NonDivisibleExponent("series has fractional exponents")
        m = -(-self.prec // Q4)
        return [self.coeffs.get(Q4 * i, 0) for i in range(m)]

    def truncate(self, prec: int) -> "QSeries":
        return QSeries(self.coeffs, min(prec, self.prec))

    def agrees(self, other: "QSeries") -> bool:
        """Equality up to the smaller of the two precisions."""
        p = min(self.prec, other.prec)
        return self.truncate(p).coeffs == other.truncate(p).coeffs

    def first_difference(self, other: "QSeries") -> int | None:
        """Smallest quarter-exponent where the two series differ, or None below min precision."""
        p = min(self.prec, other.prec)
        keys = sorted(e for e in set(self.coeffs) | set(other.coeffs) if e < p)
        for e in keys:
            if self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return e
        return None

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries({0: other}, self.prec)
        return qs_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({e: -c for e, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return qs_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries({e: other * c for e, c in self.coeffs.items()}, self.prec)
        return qs_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return qs_pow(self, e)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^(k/4); precision moves up by k."""
        return QSeries({e + k: c for e, c in self.coeffs.items()}, self.prec + k)

    def exact_div(self, m: int) -> "QSeries":
        out = {}
        for e, c in self.coeffs.items():
            if c % m:
                raise ValueError("coefficient %d at %d not divisible by %d" % (c, e, m))
            out[e] = c // m
        return QSeries(out, self.prec)

    # rendering

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return "QSeries(%s + O(q^%s))" % (to_text(self), _fmt_exp(self.prec))


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    prec = min(a.prec, b.prec)
    out = {e: c for e, c in a.coeffs.items() if e < prec}
    for e, c in b.coeffs.items():
        if e < prec:
            out[e] = out.get(e, 0) + c
    return QSeries(out, prec)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product; result precision is min(prec)."""
    prec = min(a.prec, b.prec)
    ta, tb = a.terms(), b.terms()
    if len(ta) > len(tb):
        ta, tb = tb, ta
    out: dict[int, int] = {}
    for ea, ca in ta:
        if ea >= prec:
            break
        for eb, cb in tb:
            e = ea + eb
            if e >= prec:
                break
            out[e] = out.get(e, 0) + ca * cb
    return QSeries(out, prec)


def qs_pow(a: QSeries, e: int) -> QSeries:
    if e < 0:
        raise ValueError("negative power")
    result = QSeries.one(a.prec)
    base = a
    while e:
        if e & 1:
            result = qs_mul(result, base)
        e >>= 1
        if e:
            base = qs_mul(base, base)
    return result


def qs_substitute_power(a: QSeries, num: int, den: int) -> QSeries:
    """q -> q^(num/den) for den in {1, 4}."""
    if num < 1 or den not in (1, 4):
        raise ValueError("need num >= 1 and den in {1, 4}")
    out = {}
    for e, c in a.coeffs.items():
        if (e * num) % den:
            raise NonDivisibleExponent("exponent %s not divisible by %d" % (_fmt_exp(e), den))
        out[e * num // den] = c
    # a coefficient at e is exact iff e < prec, so the new bound is ceil(prec*num/den)
    return QSeries(out, -(-a.prec * num // den))


# rendering / serialization


def _fmt_exp(e: int) -> str:
    f = Fraction(e, Q4)
    if f.denominator == 1:
        return str(f.numerator)
    return "(%d/%d)" % (f.numerator, f.denominator)


def has_order_term(text: str) -> bool:
    return "O(" in text.replace(" ", "")


def to_text(s: QSeries) -> str:
    parts = []
    for e, c in s.terms():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == Q4 else "q^" + _fmt_exp(e)
            body = mono if mag == 1 else "%d%s" % (mag, mono)
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def to_json(s: QSeries) -> dict:
    return {"prec_q4": s.prec, "coeffs": [[e, str(c)] for e, c in s.terms()]}


def from_json(obj: Mapping) -> QSeries:
    try:
        prec = int(obj["prec_q4"])
        coeffs = {int(e): int(c) for e, c in obj["coeffs"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("bad series JSON: %s" % exc) from exc
    if any(e >= prec for e in coeffs):
        raise ParseError("coefficient stored at or beyond prec_q4")
    return QSeries(coeffs, prec)


def parse_text(text: str, prec_q: int | None = None) -> QSeries:
    """Parse the text form, e.g. ``1 + 6q^2 - q^(9/4) + O(q^10)``.

    The precision comes from ``prec_q``, else from a trailing ``O(q^N)``, else it
    is one past the highest exponent, rounded up to a whole power of q.
    """
    src = text.replace(" ", "").replace("\n", "")
    m = re.search(r"\+?O\(q\^(\d+)\)$", src)
    if m:
        if prec_q is None:
            prec_q = int(m.group(1))
        src = src[:m.start()]
    if src in ("", "0"):
        return QSeries({}, Q4 * (prec_q or 1))
    if src[0] not in "+-":
        src = "+" + src
    term_re = re.compile(r"([+-])(\d*)(q(?:\^(\d+|\((\d+)/(\d+)\)))?)?")
    pos = 0
    coeffs: dict[int, int] = {}
    while pos < len(src):
        m = term_re.match(src, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ParseError("cannot parse series near %r" % src[pos:pos + 10])
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if not m.group(3):
            e = 0
        elif m.group(4) is None:
            e = Q4
        elif m.group(5) is not None:
            f = Fraction(int(m.group(5)), int(m.group(6))) * Q4
            if f.denominator != 1:
                raise ParseError("exponent not on the quarter grid: %s" % m.group(4))
            e = f.numerator
        else:
            e = Q4 * int(m.group(4))
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
    if prec_q is None:
        top = max(coeffs) if coeffs else 0
        prec = Q4 * (top // Q4 + 1)
    else:
        prec = Q4 * prec_q
    return QSeries(coeffs, prec)


# homogeneous polynomials


@dataclass(frozen=True)
class HomogPoly:
    nvars: int
    degree: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in self.terms.items():
            mono = tuple(int(x) for x in mono)
            if len(mono) != self.nvars or min(mono) < 0 or sum(mono) != self.degree:
                raise ValueError("bad monomial %r for degree %d" % (mono, self.degree))
            if c:
                clean[mono] = int(c)
        object.__setattr__(self, "terms", clean)

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ArityMismatch("polynomials of different shape")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return HomogPoly(self.nvars, self.degree, out)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (self.nvars, self.degree, self.terms) == (other.nvars, other.degree, other.terms)

    def __hash__(self):
        return hash((self.nvars, self.degree, tuple(sorted(self.terms.items()))))

    def coeff(self, mono: tuple[int, ...]) -> int:
        return self.terms.get(tuple(mono), 0)

    def value_at_ones(self) -> int:
        return sum(self.terms.values())

    def collapse(self, groups: Sequence[Sequence[int]]) -> "HomogPoly":
        """Identify variables: new variable i is the product-merge of old ``groups[i]``."""
        out: dict[tuple[int, ...], int] = {}
        for mono, c in self.terms.items():
            new = tuple(sum(mono[j] for j in g) for g in groups)
            out[new] = out.get(new, 0) + c
        return HomogPoly(len(groups), self.degree, out)

    def __str__(self):
        names = "XYZW"[: self.nvars] if self.nvars <= 4 else None
        parts = []
        for mono, c in sorted(self.terms.items(), reverse=True):
            m = ""
            for v, k in enumerate(mono):
                if k:
                    name = names[v] if names else "x%d" % v
                    m += name if k == 1 else "%s^%d" % (name, k)
            if not m:
                m = "1"
            elif abs(c) == 1:
                c = "-" if c < 0 else ""
            parts.append("%s%s" % (c, m))
        return " + ".join(parts).replace("+ -", "- ") or "0"


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given degree, lexicographically descending."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for i in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - i):
            out.append((i,) + rest)
    return out


def poly_eval_qseries(p: HomogPoly, args: Sequence[QSeries]) -> QSeries:
    if len(args) != p.nvars:
        raise ArityMismatch("polynomial in %d variables, %d arguments" % (p.nvars, len(args)))
    prec = min(a.prec for a in args)
    powers = [[QSeries.one(prec)] for _ in args]

    def power(v, k):
        ps = powers[v]
        while len(ps) <= k:
            ps.append(qs_mul(ps[-1], args[v]))
        return ps[k]

    total = QSeries.zero(prec)
    for mono, c in sorted(p.terms.items()):
        term = QSeries.one(prec)
        for v, k in enumerate(mono):
            if k:
                term = qs_mul(term, power(v, k))
        total = qs_add(total, term * c)
    return total


# linear algebra over Q


@dataclass(frozen=True)
class LinearSystem:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    columns: tuple[tuple[int, ...], ...]
    row_labels: tuple = ()

    def __post_init__(self):
        mat = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        rhs = tuple(Fraction(x) for x in self.rhs)
        if len(rhs) != len(mat):
            raise ValueError("rhs length differs from row count")
        if any(len(row) != len(self.columns) for row in mat):
            raise ValueError("row length differs from column count")
        if len(set(self.columns)) != len(self.columns):
            raise ValueError("duplicate column labels")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "columns", tuple(tuple(c) for c in self.columns))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.columns)

    def residual(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) - r
                     for row, r in zip(self.matrix, self.rhs))

    def with_rhs(self, rhs: Sequence) -> "LinearSystem":
        return LinearSystem(self.matrix, tuple(rhs), self.columns, self.row_labels)


@dataclass(frozen=True)
class SolutionSpace:
    particular: tuple[Fraction, ...] | None
    kernel: tuple[tuple[Fraction, ...], ...]
    columns: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...] = ()
    free: tuple[int, ...] = ()

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def point(self, params: Sequence) -> tuple[Fraction, ...]:
        """particular + sum(params[i] * kernel[i])."""
        if self.particular is None:
            raise ValueError("inconsistent system has no points")
        if len(params) != len(self.kernel):
            raise ValueError("need %d parameters" % len(self.kernel))
        x = list(self.particular)
        for t, b in zip(params, self.kernel):
            for i, bi in enumerate(b):
                x[i] += t * bi
        return tuple(x)


def rref(matrix: Sequence[Sequence], rhs: Sequence | None = None):
    """Reduced row echelon form over Q.

    Returns (rows, rhs, pivot_columns); rows and rhs are fresh lists of Fractions.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    t = [Fraction(x) for x in rhs] if rhs is not None else [Fraction(0)] * len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        t[r], t[p] = t[p], t[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        t[r] *= inv
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                t[i] -= f * t[r]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, t, pivots


def solve_exact(sys: LinearSystem, prefer_free: Sequence[int] = ()) -> SolutionSpace:
    """Exact solution set of ``sys``: a particular point (None if inconsistent) and a kernel basis.

    Pivots are chosen left to right, except that columns listed in
    ``prefer_free`` are considered last, so they end up free whenever the
    system allows it.  Each kernel vector has a 1 in its own free column and 0
    in the other free columns.
    """
    nrows, ncols = sys.shape
    order = [c for c in range(ncols) if c not in prefer_free] + [c for c in prefer_free]
    m, t, piv = rref([[row[c] for c in order] for row in sys.matrix], sys.rhs)
    pivots = [order[c] for c in piv]
    rank = len(pivots)
    free = [c for c in order if c not in pivots]
    col_pos = {c: i for i, c in enumerate(order)}
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][col_pos[f]]
        kernel.append(tuple(v))
    if any(t[r] != 0 for r in range(rank, nrows)):
        particular = None
    else:
        x = [Fraction(0)] * ncols
        for r, pc in enumerate(pivots):
            x[pc] = t[r]
        particular = tuple(x)
    return SolutionSpace(particular, tuple(kernel), sys.columns, tuple(pivots), tuple(free))


def reparametrize(space: SolutionSpace, param_columns: Sequence[int]):
    """Express every coordinate as an affine function of the chosen coordinates.

    Returns a list ``forms`` with ``forms[i] = (const, [coef per param])`` so that
    ``x_i = const + sum(coef_j * x_{param_columns[j]})`` on the whole family.
    Raises ValueError if the chosen coordinates do not parametrize the family.
    """
    if space.particular is None:
        raise ValueError("inconsistent system")
    k = space.dimension
    if len(param_columns) != k:
        raise ValueError("need exactly %d parameter columns" % k)
    # x = p + K t, with the chosen coordinates s = p_S + K_S t  =>  t = K_S^{-1}(s - p_S)
    ks = [[space.kernel[j][c] for j in range(k)] for c in param_columns]
    inv = _invert(ks)
    n = len(space.columns)
    forms = []
    for i in range(n):
        row = [space.kernel[j][i] for j in range(k)]
        # x_i = p_i + row . inv (s - p_S)
        coefs = [sum((row[a] * inv[a][b] for a in range(k)), Fraction(0)) for b in range(k)]
        const = space.particular[i] - sum(
            (coefs[b] * space.particular[param_columns[b]] for b in range(k)), Fraction(0))
        forms.append((const, coefs))
    return forms


def _invert(a: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    k = len(a)
    if k == 0:
        return []
    aug = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(a)]
    m, _, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise ValueError("chosen columns are not a valid parametrization")
    return [row[k:] for row in m]


def matvec(matrix: Iterable[Sequence], x: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0)) for row in matrix]
