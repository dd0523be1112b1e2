import math

import pytest

from divlab.errors import DIsSquare, PreconditionError
from divlab.expr import parse_poly
from divlab.lucas import (
    CongruenceStatus,
    congruence_check,
    lucas_eval,
    lucas_poly,
    lucas_table,
    pell_fundamental,
    pell_verify,
)
from divlab.poly import poly_eval
from divlab.rings import ZZ


def Z(text):
    return parse_poly(text, ZZ)


def test_lucas_eval_examples():
    assert lucas_eval(2, 2) == (7, 4)
    assert lucas_eval(4, 2) == (97, 56)
    assert 97**2 - 3 * 56**2 == 1
    assert lucas_eval(5, 1) == (1, 5)
    assert lucas_eval(0, 9) == (1, 0)


def test_lucas_at_three():
    assert [lucas_eval(n, 3)[1] for n in range(5)] == [0, 1, 6, 35, 204]


def test_lucas_poly_examples():
    assert lucas_poly(3) == (Z("4*x^3 - 3*x"), Z("4*x^2 - 1"))
    assert lucas_poly(8)[0] == Z("128*x^8 - 256*x^6 + 160*x^4 - 32*x^2 + 1")
    assert lucas_poly(0) == (Z("1"), Z("0"))


def test_lucas_poly_degrees():
    for n in range(1, 15):
        x, y = lucas_poly(n)
        assert x.degree == n and y.degree == n - 1


def test_poly_matches_numeric():
    for n in range(13):
        xp, yp = lucas_poly(n)
        for a in range(-6, 7):
            if a == 1:
                continue
            assert (poly_eval(xp, a), poly_eval(yp, a)) == lucas_eval(n, a)


def test_pell_verify():
    assert pell_verify(4, 2)
    assert all(pell_verify(0, a) for a in range(-5, 6))
    assert pell_verify(7, -3)
    x, y = lucas_eval(7, -3)
    assert x * x - 8 * y * y == 1


def test_table():
    t = lucas_table(4, 2)
    assert t.xs == (1, 2, 7, 26, 97) and t.ys == (0, 1, 4, 15, 56)
    s = lucas_table(2)
    assert s.a is None and s.xs[2] == Z("2*x^2 - 1")


def _brute_pell(d, cap):
    for y in range(1, cap + 1):
        for x in range(1, 10 * cap * cap):
            if x * x - d * y * y == 1:
                return x, y
            if x * x > d * y * y + 1:
                break
    return None


@pytest.mark.parametrize("d, cap, expected", [(3, 10, (2, 1)), (2, 10, (3, 2)), (5, 3, None), (5, 10, (9, 4))])
def test_pell_fundamental(d, cap, expected):
    assert pell_fundamental(d, cap) == expected
    assert _brute_pell(d, cap) == expected


def test_pell_fundamental_family():
    for a in range(2, 11):
        assert pell_fundamental(a * a - 1) == (a, 1)


def test_pell_fundamental_rejects_squares():
    with pytest.raises(DIsSquare):
        pell_fundamental(9)


def test_jr1_examples():
    v = congruence_check("jr1", 4, a=3)
    assert v.modulus == 2 and v.holds
    v = congruence_check("jr1", 5, symbolic=True)
    assert v.holds and v.modulus == Z("x - 1")
    assert v.quotients[0] == Z("16*x^3 + 16*x^2 + 4*x + 4")


def test_jr1_vacuous_at_a_equal_one():
    v = congruence_check("jr1", 5, a=1)
    assert v.status is CongruenceStatus.VACUOUS


def test_jr2_examples():
    v = congruence_check("jr2", 2, a=3, k=1)
    assert v.modulus == 4 and v.holds
    v = congruence_check("jr2", 3, a=5, k=0)
    assert v.holds and v.trivial_modulus


def test_jr2_expansion_n7():
    # X_7 - (x - k) Y_7 - k^7 factors with (2xk - k^2 - 1); checked for k = 0..8
    for k in range(9):
        v = congruence_check("jr2", 7, k=k, symbolic=True)
        assert v.holds


def test_jr3_symbolic():
    v = congruence_check("jr3", 2, symbolic=True)
    assert v.holds
    assert v.modulus == Z("2*x^2 - 1")
    assert v.quotients[0] == Z("4*x")


def test_congruences_numeric_grid():
    for n in range(0, 31):
        for a in range(2, 9):
            assert congruence_check("jr1", n, a=a).holds
            assert congruence_check("jr3", n, a=a).holds
            for k in range(0, 9):
                assert congruence_check("jr2", n, a=a, k=k).holds


def test_shift_congruences():
    for n in range(1, 6):
        for i in range(1, 4):
            for m in range(0, 2 * n + 1):
                for a in (2, 3, 7):
                    assert congruence_check("shift+", n, a=a, i=i, m=m).holds
                    assert congruence_check("shift-", n, a=a, i=i, m=m).holds


def test_shift_residues_are_independent():
    # direct oracle for one case: Y_{4*2*1+3}(4) - Y_3(4) mod X_2(4)
    x2 = lucas_eval(2, 4)[0]
    lhs = lucas_eval(11, 4)[1] - lucas_eval(3, 4)[1]
    assert lhs % x2 == 0
    v = congruence_check("shift+", 2, a=4, i=1, m=3)
    assert v.lhs_residue == 0 and v.extra_residue == 0


def test_wrong_shift_sign_fails():
    # Flipping the sign must break the congruence for generic parameters.
    x2 = lucas_eval(2, 4)[0]
    assert (lucas_eval(11, 4)[1] + lucas_eval(3, 4)[1]) % x2 != 0


def test_symbolic_divisibilities():
    for n in range(21):
        assert congruence_check("jr1", n, symbolic=True).holds
    for n in range(11):
        assert congruence_check("jr3", n, symbolic=True).holds
    for n in range(1, 5):
        for i in range(1, 3):
            for m in range(4):
                assert congruence_check("shift+", n, i=i, m=m, symbolic=True).holds
                assert congruence_check("shift-", n, i=i, m=m, symbolic=True).holds


def test_preconditions():
    with pytest.raises(PreconditionError):
        congruence_check("shift-", 0, a=3, i=1, m=1)
    with pytest.raises(PreconditionError):
        congruence_check("jr2", 3, a=3)
    with pytest.raises(PreconditionError):
        congruence_check("jr1", 3)
    with pytest.raises(PreconditionError):
        lucas_eval(-1, 2)


def test_pell_identity_grows_large():
    x, y = lucas_eval(40, 10)
    assert x > 10**40
    assert x * x - 99 * y * y == 1
    assert math.isqrt(x * x) == x
