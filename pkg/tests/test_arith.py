import math
from fractions import Fraction

import pytest

from coxcell.arith import INF, ExactArithmetic, IntervalArithmetic, select_arithmetic, surd
from coxcell.errors import ArithmeticModeUnavailable

EX = ExactArithmetic()


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_form_entry_matches_cosine(m):
    assert EX.to_float(EX.form_entry(m)) == pytest.approx(-math.cos(math.pi / m), abs=1e-15)


def test_form_entries_are_exact():
    assert EX.form_entry(2) == 0
    assert EX.form_entry(3) == Fraction(-1, 2)
    assert EX.form_entry(INF) == -1
    c4, c5, c6 = EX.form_entry(4), EX.form_entry(5), EX.form_entry(6)
    assert c4 * c4 == Fraction(1, 2)
    assert c6 * c6 == Fraction(3, 4)
    # cos(pi/5) is a root of 4x^2 - 2x - 1
    x = -c5
    assert 4 * x * x - 2 * x - 1 == 0


def test_surd_inverse_and_sign():
    a = surd({2: Fraction(1), 3: Fraction(1)})  # sqrt2 + sqrt3
    assert a * (1 / a) == 1
    b = surd({2: Fraction(1), 3: Fraction(-1)})  # sqrt2 - sqrt3 < 0
    assert EX.sign(b) == -1
    assert EX.sign(a) == 1
    assert a * b == -1
    assert hash(surd({2: Fraction(1, 2)}) * 2) == hash(surd({2: Fraction(1)}))


def test_rationals_stay_rational():
    assert surd({1: Fraction(3, 4)}) == Fraction(3, 4)
    assert surd({2: Fraction(0)}) == 0


def test_interval_equality_tolerance():
    iv = IntervalArithmetic()
    assert iv.eq(0.1 + 0.2, 0.3)
    assert iv.is_zero(1e-12)
    assert not iv.is_zero(1e-6)


def test_selection_by_labels(monkeypatch):
    monkeypatch.delenv("COXCELL_ARITH", raising=False)
    assert select_arithmetic([3, 4, INF]).exact
    assert not select_arithmetic([7]).exact
    with pytest.raises(ArithmeticModeUnavailable):
        select_arithmetic([7], mode="exact")
    with pytest.raises(ArithmeticModeUnavailable):
        select_arithmetic([3], mode="symbolic")


def test_selection_by_environment(monkeypatch):
    monkeypatch.setenv("COXCELL_ARITH", "interval")
    assert not select_arithmetic([3]).exact
    monkeypatch.setenv("COXCELL_ARITH", "exact")
    assert select_arithmetic([3]).exact
