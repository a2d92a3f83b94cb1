import pytest

from oracles import brute_pair_sum
from thetacodes.coset_theta import (CosetLabel, alpha_decomposition, check_alpha_recomposition,
                                    check_coset_sum_identity, coset_theta_enumerate,
                                    coset_theta_formula, theta2, theta3)
from thetacodes.exactq import QSeries, qs_mul
from thetacodes.quadfield import make_level

LEVELS = [3, 7, 11, 15, 19, 23]
PARITY = {"A": (0, 0), "C": (1, 0), "G": (0, 1), "H": (1, 1)}


def test_theta3_examples():
    assert theta3(1, 40) == QSeries.from_q({0: 1, 1: 2, 4: 2, 9: 2}, 10)
    assert theta3(4, 80) == QSeries.from_q({0: 1, 4: 2, 16: 2}, 20)
    assert theta3(28, 120) == QSeries.from_q({0: 1, 28: 2}, 30)


def test_theta2_examples():
    assert theta2(1, 12) == QSeries({1: 2, 9: 2}, 12)
    assert theta2(4, 48) == QSeries.from_q({1: 2, 9: 2}, 12)
    # theta2(q^4) = 2q sum over odd i > 0 of q^(i^2 - 1)
    ref = QSeries.from_q({i * i: 2 for i in range(1, 20, 2)}, 200)
    assert theta2(4, 800) == ref


def test_formula_examples_level7(lv7):
    assert coset_theta_formula(lv7, "A", 48) == QSeries.from_q({0: 1, 4: 2, 8: 4}, 12)
    assert coset_theta_formula(lv7, "C", 44) == QSeries.from_q({1: 2, 7: 2, 9: 2}, 11)
    assert coset_theta_formula(lv7, "G", 40) == QSeries.from_q({2: 2, 4: 2, 8: 2}, 10)


@pytest.mark.parametrize("label", "ACGH")
def test_formula_examples_against_brute_force(lv7, label):
    ref = QSeries.from_q(brute_pair_sum(7, 12, *PARITY[label]), 12)
    assert coset_theta_formula(lv7, label, 48) == ref
    assert coset_theta_enumerate(lv7, label, 48) == ref


def test_enumerate_examples():
    lv = make_level(7)
    a = coset_theta_enumerate(lv, "A", 400)
    assert a.coeff_q(0) == 1
    assert coset_theta_enumerate(lv, "G", 400) == coset_theta_enumerate(lv, "H", 400)
    lv3 = make_level(3)
    assert coset_theta_enumerate(lv3, "A", 36).agrees(coset_theta_formula(lv3, "A", 36))
    assert coset_theta_enumerate(lv3, "A", 36) == QSeries.from_q(brute_pair_sum(3, 9, 0, 0), 9)


@pytest.mark.parametrize("ell", LEVELS)
@pytest.mark.parametrize("label", list(CosetLabel))
def test_oracle_equivalence(ell, label):
    lv = make_level(ell)
    assert coset_theta_formula(lv, label, 200) == coset_theta_enumerate(lv, label, 200)


@pytest.mark.parametrize("ell", LEVELS + [63])
def test_coset_structure(ell):
    lv = make_level(ell)
    prec = 4 * 80
    a, c, g, h = (coset_theta_formula(lv, lab, prec) for lab in "ACGH")
    assert g == h
    assert g.valuation() == 4 * lv.d and g[4 * lv.d] == 2
    assert c.valuation() == 4 and c.coeff_q(1) == 2
    assert a.coeff_q(0) == 1
    for s in (a, c, g):
        assert s.is_integral()
        for e, v in s.coeffs.items():
            assert v > 0 and (v % 2 == 0 or (s is a and e == 0))


@pytest.mark.parametrize("ell,prec_q", [(7, 40), (3, 40), (15, 60), (11, 40), (63, 40)])
def test_coset_sum_identity(ell, prec_q):
    assert check_coset_sum_identity(make_level(ell), 4 * prec_q)


def test_coset_sum_identity_detects_a_wrong_series(lv7, monkeypatch):
    import thetacodes.coset_theta as m
    real = m.coset_theta_formula

    def bad(lv, label, prec):
        s = real(lv, label, prec)
        return s + QSeries.from_q({3: 1}, prec // 4 + 1) if label == "C" else s
    monkeypatch.setattr(m, "coset_theta_formula", bad)
    assert not check_coset_sum_identity(lv7, 160)


def test_alpha_examples(lv7):
    al = alpha_decomposition(lv7, 240)
    assert al[5].coeff_q(0) == 2
    assert al[2].coeff_q(0) == 1
    assert set(al) == set(range(1, 8))


@pytest.mark.parametrize("ell", [7, 15, 3, 11])
def test_alpha_recomposition(ell):
    assert all(check_alpha_recomposition(make_level(ell), 240).values())


def test_alpha1_against_g(lv7):
    # G = theta2(q) theta2(q^l) / 2 = 2 q^((l+1)/4) alpha_1
    al = alpha_decomposition(lv7, 200)
    g = qs_mul(theta2(1, 200), theta2(7, 200)).exact_div(2)
    assert (al[1] * 2).shift(8).truncate(200) == g
