from exkh.polynomials import LaurentPoly, Q_PLUS_QINV


def test_arithmetic():
    p = LaurentPoly({1: 1, -1: 1})
    assert p == Q_PLUS_QINV
    assert p * p == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert p - p == LaurentPoly.zero()
    assert not LaurentPoly.zero()
    assert (p**3).coefficient(3) == 1
    assert (p**3).coefficient(1) == 3
    assert p.scale(-2) == LaurentPoly({1: -2, -1: -2})


def test_formatting_ascending_with_signs():
    assert str(LaurentPoly.zero()) == "0"
    assert str(Q_PLUS_QINV) == "+q^-1 +q"
    p = LaurentPoly({-9: -1, 0: 2, 3: 1})
    assert str(p) == "-q^-9 +2 +q^3"
    assert str(LaurentPoly({1: -3})) == "-3q"


def test_extremes():
    p = LaurentPoly({-9: -1, 5: 1})
    assert p.min_exponent == -9
    assert p.max_exponent == 5
    assert LaurentPoly.zero().min_exponent is None
