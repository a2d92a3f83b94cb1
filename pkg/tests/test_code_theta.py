import itertools
import random

import pytest

from oracles import brute_theta_of_code
from thetacodes.code_theta import ThetaPath, compare_levels, theta_of_code, theta_of_code_enumerate
from thetacodes.coset_theta import coset_theta_formula
from thetacodes.errors import RingLevelMismatch
from thetacodes.exactq import QSeries, qs_pow, qs_substitute_power
from thetacodes.quadfield import RingKind, admissible_levels, make_level
from thetacodes.ringcodes import enumerate_codes, full_space, swe, zero_code

F4, R4 = RingKind.F4, RingKind.F2xF2
LEVEL7_SERIES = {0: 1, 2: 6, 4: 24, 6: 56, 8: 114, 10: 168, 12: 280, 14: 294}

# frozen from the brute-force lattice count in oracles.brute_theta_of_code
C32_AT_63 = {0: 1, 2: 4, 4: 6, 6: 8, 8: 12, 10: 8, 12: 8, 14: 16, 16: 8, 18: 22, 20: 40, 22: 18}
C32_AT_79 = {0: 1, 2: 4, 4: 6, 6: 8, 8: 12, 10: 8, 12: 8, 14: 16, 16: 6, 18: 12, 20: 26, 22: 18,
             24: 40}


def test_level7_examples(lv7, c32, c33):
    ref = QSeries.from_q(LEVEL7_SERIES, 15)
    for c in (c32, c33):
        r = theta_of_code(c, lv7, 60)
        assert r.series == ref and r.path == ThetaPath.FORMULA
        assert r.coefficients()[:5] == [1, 0, 6, 0, 24]


def test_level7_series_against_brute_force(lv7, c32):
    assert QSeries.from_q(brute_theta_of_code(c32, 7, 15), 15).coeffs == \
        QSeries.from_q(LEVEL7_SERIES, 15).coeffs


def test_zero_code_is_power_of_a(lv7):
    a = coset_theta_formula(lv7, "A", 80)
    assert theta_of_code(zero_code(R4, 3), lv7, 80).series == qs_pow(a, 3)
    lv3 = make_level(3)
    assert theta_of_code_enumerate(zero_code(F4, 1), lv3, 80).series == coset_theta_formula(lv3, "A", 80)


def test_full_space_is_theta_of_ok(lv7):
    # A + C + G + H = A(q^(1/4)), the theta series of O_K itself
    prec = 120
    full = theta_of_code_enumerate(full_space(R4, 1), lv7, prec).series
    a = coset_theta_formula(lv7, "A", 4 * prec)
    assert full == qs_substitute_power(a, 1, 4)


@pytest.mark.parametrize("ell,prec_q", [(63, 23), (79, 25)])
def test_c32_true_series(c32, ell, prec_q):
    lv = make_level(ell)
    ref = C32_AT_63 if ell == 63 else C32_AT_79
    r = theta_of_code(c32, lv, 4 * prec_q).series
    assert r == QSeries.from_q(ref, prec_q)
    assert theta_of_code_enumerate(c32, lv, 4 * prec_q).series == r


def test_frozen_values_match_brute_force(c32):
    assert QSeries.from_q(brute_theta_of_code(c32, 63, 23), 23) == QSeries.from_q(C32_AT_63, 23)


def test_ring_level_mismatch(lv7):
    with pytest.raises(RingLevelMismatch):
        theta_of_code(zero_code(F4, 2), lv7, 40)
    with pytest.raises(RingLevelMismatch):
        theta_of_code_enumerate(zero_code(F4, 2), lv7, 40)
    with pytest.warns(UserWarning):
        theta_of_code(zero_code(F4, 2), lv7, 40, allow_mismatch=True)


def _levels_for(kind):
    return [3, 11, 19] if kind == F4 else [7, 15, 23]


@pytest.mark.parametrize("kind", [F4, R4])
@pytest.mark.parametrize("n", [1, 2])
def test_formula_vs_enumeration_all_short_codes(kind, n):
    for ell in _levels_for(kind):
        lv = make_level(ell)
        for c in enumerate_codes(kind, n):
            assert theta_of_code(c, lv, 120).series == theta_of_code_enumerate(c, lv, 120).series


@pytest.mark.parametrize("ell", [7, 15, 23])
def test_formula_vs_enumeration_length3(c32, c33, ell):
    lv = make_level(ell)
    for c in (c32, c33):
        s = theta_of_code(c, lv, 120).series
        assert s == theta_of_code_enumerate(c, lv, 120).series
        assert s == QSeries.from_q(brute_theta_of_code(c, ell, 30), 30)


@pytest.mark.parametrize("kind", [F4, R4])
def test_formula_vs_brute_force_length2(kind):
    ell = _levels_for(kind)[0]
    lv = make_level(ell)
    for c in enumerate_codes(kind, 2):
        assert theta_of_code(c, lv, 120).series == QSeries.from_q(brute_theta_of_code(c, ell, 30), 30)


def test_compare_levels_examples(c32):
    cmp = compare_levels(c32, make_level(79), make_level(63), 4 * 30)
    assert (cmp.first_difference, cmp.bound, cmp.passed) == (16, 16, True)
    assert cmp.to_text() == "first difference q^16, bound q^16, PASS"
    cmp = compare_levels(c32, make_level(15), make_level(7), 4 * 30)
    assert cmp.first_difference >= 2 and cmp.bound == 2 and cmp.passed
    cmp = compare_levels(zero_code(R4, 2), make_level(23), make_level(15), 4 * 30)
    assert cmp.passed and cmp.first_difference >= 16
    with pytest.raises(ValueError):
        compare_levels(c32, make_level(7), make_level(15), 40)


def _theorem1_cases(count=60, seed=1):
    rng = random.Random(seed)
    pool = {k: [c for n in (1, 2, 3) for c in enumerate_codes(k, n)] for k in (F4, R4)}
    pairs = {k: [(a, b) for a, b in itertools.combinations(
        [lv.ell for lv in admissible_levels(k, 47)], 2) if a <= 31] for k in (F4, R4)}
    cases = []
    for _ in range(count):
        k = rng.choice((F4, R4))
        low, high = rng.choice(pairs[k])
        cases.append((rng.choice(pool[k]), high, low))
    return cases


def test_theorem1_property():
    cases = _theorem1_cases()
    assert len(cases) >= 50
    for c, high, low in cases:
        cmp = compare_levels(c, make_level(high), make_level(low), 4 * ((low + 1) // 4 + 4))
        assert cmp.passed, (c, high, low, cmp)


@pytest.mark.parametrize("kind,ell", [(F4, 3), (F4, 11), (R4, 7), (R4, 15)])
def test_counts_are_nonnegative_with_constant_one(kind, ell):
    lv = make_level(ell)
    for c in enumerate_codes(kind, 2):
        s = theta_of_code(c, lv, 100).series
        assert s.coeffs[0] == 1
        assert all(v > 0 and e % 4 == 0 for e, v in s.coeffs.items())


@pytest.mark.parametrize("kind,ell,n", [(R4, 7, 2), (R4, 7, 3), (R4, 15, 2), (F4, 3, 2), (F4, 11, 3)])
def test_theta_determined_by_leading_coefficients(kind, ell, n):
    # agreement through q^(n d) inclusive forces agreement much further out
    lv = make_level(ell)
    head = 4 * (n * lv.d + 1)
    tail = 4 * (3 * n * lv.d + 12)
    by_swe = {}
    for c in enumerate_codes(kind, n):
        by_swe.setdefault(swe(c), c)
    series = [theta_of_code(c, lv, tail).series for c in by_swe.values()]
    for s, t in itertools.combinations(series, 2):
        if s.truncate(head) == t.truncate(head):
            assert s == t
