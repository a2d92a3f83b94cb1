"""
The rings F4 (w^2 + w + 1 = 0) and R4 = F2 + wF2 (w^2 + w = 0, isomorphic to
F2 x F2), linear codes over them, Hermitian duals and weight enumerators.

Both rings use the same four symbols 0, 1, w, 1+w, encoded as integers
0, 1, 2, 3 (bit 0 = coefficient of 1, bit 1 = coefficient of w), so addition
is XOR in both.  In F4, w^2 is the symbol 1+w.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (KindMismatch, LengthMismatch, LengthTooLarge,
                     NotBinaryLinear, ParseError)
from .exactq import HomogPoly
from .quadfield import RingKind

ZERO, ONE, W, W1 = 0, 1, 2, 3
SYMBOLS = ("0", "1", "w", "w1")
MAX_DUAL_LENGTH = 10
MAX_ENUM_LENGTH = 4

Word = tuple[int, ...]


def _mul(kind: RingKind, x: int, y: int) -> int:
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    # (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2
    if kind == RingKind.F4:  # w^2 = 1 + w
        return ((a * c + b * d) & 1) | (((a * d + b * c + b * d) & 1) << 1)
    return ((a * c) & 1) | (((a * d + b * c + b * d) & 1) << 1)  # w^2 = w


_MUL = {k: [[_mul(k, x, y) for y in range(4)] for x in range(4)] for k in RingKind}
_CONJ = [0, 1, 3, 2]  # 0, 1 fixed; w <-> 1+w in both rings


@dataclass(frozen=True)
class RingElem:
    kind: RingKind
    value: int

    def __post_init__(self):
        if self.value not in (0, 1, 2, 3):
            raise ValueError("ring symbol must be 0..3")

    def __add__(self, other):
        _same(self, other)
        return RingElem(self.kind, self.value ^ other.value)

    def __mul__(self, other):
        return ring_mul(self, other)

    def __str__(self):
        return SYMBOLS[self.value]


def _same(a: RingElem, b: RingElem):
    if a.kind != b.kind:
        raise KindMismatch("%s vs %s" % (a.kind.value, b.kind.value))


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    _same(a, b)
    return RingElem(a.kind, _MUL[a.kind][a.value][b.value])


def conj(a: RingElem) -> RingElem:
    """x -> x^2 on F4, w <-> w+1 on R4; the same permutation of symbols."""
    return RingElem(a.kind, _CONJ[a.value])


def ring_elements(kind: RingKind) -> list[RingElem]:
    return [RingElem(kind, v) for v in range(4)]


def parse_symbol(s) -> int:
    s = str(s).strip().lower().replace("ω", "w").replace("+", "").replace(" ", "")
    table = {"0": 0, "1": 1, "w": 2, "w1": 3, "1w": 3}
    if s not in table:
        raise ParseError("unknown ring symbol %r" % s)
    return table[s]


# words packed as integers, 2 bits per coordinate, coordinate 0 in the low bits


def pack(word: Sequence[int]) -> int:
    v = 0
    for i, x in enumerate(word):
        v |= x << (2 * i)
    return v


def unpack(v: int, n: int) -> Word:
    return tuple((v >> (2 * i)) & 3 for i in range(n))


def scale_word(kind: RingKind, r: int, word: Sequence[int]) -> Word:
    row = _MUL[kind][r]
    return tuple(row[x] for x in word)


def _reduce(basis: dict[int, int], v: int) -> int:
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            return v
        v ^= basis[top]
    return 0


def _insert(basis: dict[int, int], v: int) -> bool:
    v = _reduce(basis, v)
    if not v:
        return False
    basis[v.bit_length() - 1] = v
    return True


def _canonical(basis: dict[int, int]) -> tuple[int, ...]:
    """Fully reduced F2 echelon basis; equal spaces give equal tuples."""
    keys = sorted(basis)
    red = dict(basis)
    for i, k in enumerate(keys):
        for j in keys[i + 1:]:
            if (red[j] >> k) & 1:
                red[j] ^= red[k]
    return tuple(red[k] for k in keys)


def _module_closure(kind: RingKind, n: int, basis: dict[int, int], word: Word) -> None:
    for r in (ONE, W):
        _insert(basis, pack(scale_word(kind, r, word)))


def _elements(basis_vectors: Iterable[int]) -> list[int]:
    out = [0]
    for b in basis_vectors:
        out += [x ^ b for x in out]
    return out


@dataclass(frozen=True, eq=False)
class LinearCode:
    kind: RingKind
    length: int
    generators: tuple[Word, ...]
    codewords: tuple[Word, ...]

    @property
    def size(self) -> int:
        return len(self.codewords)

    @property
    def key(self) -> frozenset:
        return frozenset(self.codewords)

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.kind, self.length, self.key) == (other.kind, other.length, other.key)

    def __hash__(self):
        return hash((self.kind, self.length, self.key))

    def __contains__(self, word):
        return tuple(word) in self.key

    def __len__(self):
        return len(self.codewords)

    def describe(self) -> dict:
        return {"ring": self.kind.value, "length": self.length,
                "generators": [[SYMBOLS[x] for x in g] for g in self.generators],
                "size": self.size}

    def __str__(self):
        gens = " ".join(",".join(SYMBOLS[x] for x in g) for g in self.generators)
        return "Code(%s, n=%d, |C|=%d, <%s>)" % (self.kind.value, self.length, self.size, gens)


def _from_basis(kind: RingKind, n: int, basis: dict[int, int]) -> LinearCode:
    canon = _canonical(basis)
    words = sorted(unpack(v, n) for v in _elements(canon))
    gens = tuple(unpack(v, n) for v in sorted(canon))
    return LinearCode(kind, n, gens, tuple(words))


def span(kind: RingKind, length: int, generators: Iterable[Sequence]) -> LinearCode:
    """Smallest R-submodule of R^n containing the generators.

    Generators may use integer symbols 0..3 or the strings "0", "1", "w", "w1".
    The stored generators are a reduced F2 basis of the code.
    """
    kind = RingKind(kind)
    basis: dict[int, int] = {}
    for g in generators:
        g = tuple(x if isinstance(x, int) else parse_symbol(x) for x in g)
        if len(g) != length:
            raise LengthMismatch("generator %r has length %d, expected %d" % (g, len(g), length))
        if any(x not in (0, 1, 2, 3) for x in g):
            raise ParseError("bad symbol in %r" % (g,))
        _module_closure(kind, length, basis, g)
    return _from_basis(kind, length, basis)


def zero_code(kind: RingKind, length: int) -> LinearCode:
    return span(kind, length, [])


def full_space(kind: RingKind, length: int) -> LinearCode:
    return span(kind, length, [tuple(int(i == j) for j in range(length)) for i in range(length)])


def hermitian_product(kind: RingKind, u: Sequence[int], v: Sequence[int]) -> int:
    """sum u_i * conj(v_i)."""
    mul = _MUL[kind]
    s = 0
    for a, b in zip(u, v):
        s ^= mul[a][_CONJ[b]]
    return s


def dual(c: LinearCode) -> LinearCode:
    """Hermitian dual by scanning all of R^n.

    The product is additive in v, so testing against an F2 basis of C suffices.
    """
    n = c.length
    if n > MAX_DUAL_LENGTH:
        raise LengthTooLarge("dual limited to length %d" % MAX_DUAL_LENGTH)
    gens = c.generators
    basis: dict[int, int] = {}
    for u in itertools.product(range(4), repeat=n):
        if all(hermitian_product(c.kind, u, g) == 0 for g in gens):
            _insert(basis, pack(u))
    return _from_basis(c.kind, n, basis)


# binary helpers for the w<v> + (w+1)<v>^perp construction


def binary_span(length: int, gens: Iterable[Sequence[int]]) -> frozenset[Word]:
    words = {tuple([0] * length)}
    for g in gens:
        g = tuple(int(x) & 1 for x in g)
        if len(g) != length:
            raise LengthMismatch("binary generator has wrong length")
        words |= {tuple(a ^ b for a, b in zip(w, g)) for w in words}
    return frozenset(words)


def binary_dual(length: int, words: Iterable[Sequence[int]]) -> frozenset[Word]:
    words = list(words)
    return frozenset(u for u in itertools.product((0, 1), repeat=length)
                     if all(sum(a * b for a, b in zip(u, w)) % 2 == 0 for w in words))


def _is_binary_linear(words: frozenset[Word], n: int) -> bool:
    if tuple([0] * n) not in words:
        return False
    if any(len(w) != n or any(x not in (0, 1) for x in w) for w in words):
        return False
    return all(tuple(a ^ b for a, b in zip(u, v)) in words for u in words for v in words)


def code_from_binary_pair(kind: RingKind, c1: Iterable[Sequence[int]],
                          c2: Iterable[Sequence[int]]) -> LinearCode:
    """The module spanned by {w a + (w+1) b : a in c1, b in c2} for binary codes c1, c2."""
    kind = RingKind(kind)
    c1 = frozenset(tuple(w) for w in c1)
    c2 = frozenset(tuple(w) for w in c2)
    lengths = {len(w) for w in c1 | c2}
    if len(lengths) != 1:
        raise LengthMismatch("binary codes must share one length")
    (n,) = lengths
    for c in (c1, c2):
        if not _is_binary_linear(c, n):
            raise NotBinaryLinear("input is not a binary linear code")
    words = []
    for a in c1:
        for b in c2:
            words.append(tuple((W if x else 0) ^ (W1 if y else 0) for x, y in zip(a, b)))
    return span(kind, n, words)


# weight enumerators; variable order X, Y, Z, W <-> symbols 0, 1, w, 1+w


def cwe(c: LinearCode) -> HomogPoly:
    terms: dict[tuple[int, ...], int] = {}
    for u in c.codewords:
        counts = [0, 0, 0, 0]
        for x in u:
            counts[x] += 1
        key = tuple(counts)
        terms[key] = terms.get(key, 0) + 1
    return HomogPoly(4, c.length, terms)


def swe(c: LinearCode) -> HomogPoly:
    """cwe(X, Y, Z, Z)."""
    return cwe(c).collapse([[0], [1], [2, 3]])


def hamming_we(c: LinearCode) -> HomogPoly:
    """swe(X, Y, Y)."""
    return swe(c).collapse([[0], [1, 2]])


def enumerate_codes(kind: RingKind, length: int) -> list[LinearCode]:
    """Every submodule of R^n, each once, ordered by (size, codewords)."""
    kind = RingKind(kind)
    if length > MAX_ENUM_LENGTH:
        raise LengthTooLarge("enumeration limited to length %d" % MAX_ENUM_LENGTH)
    n = length
    all_words = list(itertools.product(range(4), repeat=n))
    seen: dict[tuple[int, ...], dict[int, int]] = {(): {}}
    frontier = [{}]
    while frontier:
        nxt = []
        for basis in frontier:
            members = set(_elements(basis.values()))
            for w in all_words:
                if pack(w) in members:
                    continue
                b = dict(basis)
                _module_closure(kind, n, b, w)
                key = _canonical(b)
                if key not in seen:
                    seen[key] = b
                    nxt.append(b)
        frontier = nxt
    codes = [_from_basis(kind, n, b) for b in seen.values()]
    codes.sort(key=lambda c: (c.size, c.codewords))
    return codes


# code files


def code_to_json(c: LinearCode) -> dict:
    return {"ring": c.kind.value, "length": c.length,
            "generators": [[SYMBOLS[x] for x in g] for g in c.generators]}


def code_from_json(obj) -> LinearCode:
    try:
        kind = RingKind(obj["ring"])
        n = int(obj["length"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("code file needs 'ring' and 'length': %s" % exc) from exc
    if "binary_pair" in obj:
        bp = obj["binary_pair"]
        try:
            c1 = binary_span(n, bp["c1_generators"])
            spec2 = bp["c2_generators"]
        except (KeyError, TypeError) as exc:
            raise ParseError("bad binary_pair: %s" % exc) from exc
        c2 = binary_dual(n, c1) if spec2 == "dual" else binary_span(n, spec2)
        return code_from_binary_pair(kind, c1, c2)
    if "generators" not in obj:
        raise ParseError("code file needs 'generators' or 'binary_pair'")
    return span(kind, n, obj["generators"])


def load_code(path) -> LinearCode:
    with open(path) as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError("code file is not JSON: %s" % exc) from exc
    return code_from_json(obj)


def code_c32(kind: RingKind = RingKind.F2xF2) -> LinearCode:
    """w<011> + (w+1)<011>^perp, length 3."""
    c1 = binary_span(3, [(0, 1, 1)])
    return code_from_binary_pair(kind, c1, binary_dual(3, c1))


def code_c33(kind: RingKind = RingKind.F2xF2) -> LinearCode:
    """w<001> + (w+1)<001>^perp, length 3."""
    c1 = binary_span(3, [(0, 0, 1)])
    return code_from_binary_pair(kind, c1, binary_dual(3, c1))
