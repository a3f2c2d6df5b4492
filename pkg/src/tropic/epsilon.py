"""An ordered field of rational functions in one formal infinitesimal.

``EpsScalar`` represents num(e)/den(e) with rational polynomial parts; the
order is the one induced by evaluation at sufficiently small e > 0, which
is decided exactly by the lowest-order coefficients.  This is the scalar
type used to translate a curve by an infinitesimal amount when forming
stable intersections.
"""

from __future__ import annotations

from fractions import Fraction


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _strip(out)


def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] += bi
    return _strip(out)


def _low(coeffs):
    """Index and value of the lowest-order nonzero coefficient."""
    for i, c in enumerate(coeffs):
        if c != 0:
            return i, c
    return None, None


class EpsScalar:
    """num/den with polynomial parts in the infinitesimal e.

    Canonical form: both parts trailing-stripped and scaled so that the
    lowest-order denominator coefficient is +1, making den(e) > 0 for all
    small e > 0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),)):
        if isinstance(num, (int, Fraction)):
            num = (Fraction(num),)
        if isinstance(den, (int, Fraction)):
            den = (Fraction(den),)
        num = _strip(Fraction(c) for c in num)
        den = _strip(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("denominator is identically zero")
        _, lead = _low(den)
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num = num
        self.den = den

    # -- construction helpers ------------------------------------------

    @staticmethod
    def coerce(x) -> "EpsScalar":
        if isinstance(x, EpsScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return EpsScalar((Fraction(x),))
        return NotImplemented

    # -- ring/field operations -----------------------------------------

    def __add__(self, other):
        other = EpsScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EpsScalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return EpsScalar(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = EpsScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return EpsScalar.coerce(other) - self

    def __mul__(self, other):
        other = EpsScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return EpsScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = EpsScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero EpsScalar")
        return EpsScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return EpsScalar.coerce(other) / self

    # -- order ----------------------------------------------------------

    def sign(self) -> int:
        if not self.num:
            return 0
        _, c = _low(self.num)
        return 1 if c > 0 else -1  # den has positive lowest coefficient

    def __eq__(self, other):
        other = EpsScalar.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() == 0

    def __lt__(self, other):
        return (self - EpsScalar.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - EpsScalar.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - EpsScalar.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - EpsScalar.coerce(other)).sign() >= 0

    def __hash__(self):
        raise TypeError("EpsScalar is not hashable; compare explicitly")

    # -- evaluation -----------------------------------------------------

    def limit0(self) -> Fraction:
        """Value at e -> 0+; raises if the limit is unbounded."""
        if not self.num:
            return Fraction(0)
        vn, cn = _low(self.num)
        vd, cd = _low(self.den)
        if vn < vd:
            raise ArithmeticError("unbounded limit at 0")
        if vn > vd:
            return Fraction(0)
        return cn / cd

    def at(self, value: Fraction) -> Fraction:
        num = sum(c * value**i for i, c in enumerate(self.num))
        den = sum(c * value**i for i, c in enumerate(self.den))
        return Fraction(num) / den

    def __repr__(self):
        return f"EpsScalar(num={self.num}, den={self.den})"


EPS = EpsScalar((Fraction(0), Fraction(1)))


def eps_sign(q: EpsScalar | int | Fraction) -> int:
    """Sign of q(e) for all sufficiently small e > 0."""
    return EpsScalar.coerce(q).sign()
