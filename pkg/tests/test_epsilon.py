import random
from fractions import Fraction

import pytest

from tropic.epsilon import EPS, EpsScalar, eps_sign


def test_eps_sign_examples():
    assert eps_sign(EPS) == 1
    assert eps_sign(1 - EPS) == 1
    assert eps_sign(EPS * EPS - EPS) == -1


def test_field_arithmetic():
    q = (1 + EPS) / (1 - EPS)
    assert q.limit0() == 1
    assert (q * (1 - EPS) - (1 + EPS)).sign() == 0
    assert eps_sign(q - 1) == 1  # q = 1 + 2e + ...
    with pytest.raises(ZeroDivisionError):
        _ = 1 / (EPS - EPS)


def test_comparisons_against_rationals():
    assert EPS < Fraction(1, 10**9)
    assert EPS > 0
    assert 3 + EPS > 3
    assert 3 - EPS < 3
    assert (2 * EPS) / EPS == 2


def test_limit_at_zero():
    assert (EPS / (1 + EPS)).limit0() == 0
    assert ((2 + EPS) / (1 - EPS)).limit0() == 2
    assert ((3 * EPS) / EPS).limit0() == 3
    with pytest.raises(ArithmeticError):
        (1 / EPS).limit0()


def _cauchy_safe_point(q: EpsScalar) -> Fraction:
    # 1/N below every positive root of num and den: use the reciprocal of
    # the classic root bound 1 + max|c|/|lowest nonzero c|
    bound = Fraction(1)
    for poly in (q.num, q.den):
        coeffs = [c for c in poly if c != 0]
        if not coeffs:
            continue
        lowest = next(c for c in poly if c != 0)
        m = max(abs(c) for c in coeffs)
        bound = max(bound, 1 + m / abs(lowest))
    return 1 / (bound + 1)


def test_sign_matches_small_rational_evaluation_fuzz():
    rng = random.Random(99)
    for _ in range(200):
        num = tuple(Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 4)))
        den = tuple(Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 4)))
        if not any(den):
            continue
        q = EpsScalar(num, den)
        e = _cauchy_safe_point(q)
        val = q.at(e)
        assert eps_sign(q) == (val > 0) - (val < 0)
