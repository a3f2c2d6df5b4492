"""Truncated Puiseux series, valuations, and tropicalization.

A series is a finite sorted list of (rational exponent, nonzero rational
coefficient) terms together with an optional truncation order: exponents
at or beyond the order are unknown.  ``trunc is None`` means the series is
exact (a finite sum).  Truncation bookkeeping is pessimistic: sums and
products only claim the exponent range they can actually certify.

The valuation of a nonzero series is its least exponent; points of the
torus map to the plane through (z1, z2) |-> (-val z1, -val z2), and a
polynomial over the series field tropicalizes to the max-plus polynomial
with coefficient -val(a_ij) at exponent (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TruncationError, ValuationError
from .tropical import TropicalPolynomial

DEFAULT_INV_ORDER = Fraction(10)


def _norm_terms(terms, trunc):
    merged: dict[Fraction, Fraction] = {}
    for q, c in terms:
        q, c = Fraction(q), Fraction(c)
        merged[q] = merged.get(q, Fraction(0)) + c
    out = tuple(
        (q, c) for q, c in sorted(merged.items())
        if c != 0 and (trunc is None or q < trunc)
    )
    return out


@dataclass(frozen=True)
class PuiseuxSeries:
    terms: tuple[tuple[Fraction, Fraction], ...]
    trunc: Fraction | None = None

    @staticmethod
    def make(terms, trunc=None) -> "PuiseuxSeries":
        trunc = None if trunc is None else Fraction(trunc)
        return PuiseuxSeries(_norm_terms(terms, trunc), trunc)

    @staticmethod
    def t_power(q, coeff=1) -> "PuiseuxSeries":
        return PuiseuxSeries.make([(Fraction(q), Fraction(coeff))])

    @staticmethod
    def const(c) -> "PuiseuxSeries":
        return PuiseuxSeries.make([(Fraction(0), Fraction(c))])

    @staticmethod
    def zero() -> "PuiseuxSeries":
        return PuiseuxSeries((), None)

    @property
    def is_zero_term_free(self) -> bool:
        return not self.terms

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    def _lower_bound(self):
        """A certified lower bound on the valuation (None means +oo)."""
        if self.terms:
            return self.terms[0][0]
        return self.trunc  # zero up to trunc; exact zero gives None

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        t1, t2 = self.trunc, other.trunc
        if t1 is None:
            trunc = t2
        elif t2 is None:
            trunc = t1
        else:
            trunc = min(t1, t2)
        return PuiseuxSeries(_norm_terms(self.terms + other.terms, trunc), trunc)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(tuple((q, -c) for q, c in self.terms), self.trunc)

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        lo1, lo2 = self._lower_bound(), other._lower_bound()
        cands = []
        if self.trunc is not None:
            if lo2 is None:  # other is exact zero
                return PuiseuxSeries.zero()
            cands.append(self.trunc + lo2)
        if other.trunc is not None:
            if lo1 is None:
                return PuiseuxSeries.zero()
            cands.append(other.trunc + lo1)
        trunc = min(cands) if cands else None
        prods = [
            (q1 + q2, c1 * c2)
            for q1, c1 in self.terms
            for q2, c2 in other.terms
        ]
        return PuiseuxSeries(_norm_terms(prods, trunc), trunc)

    def scale(self, c) -> "PuiseuxSeries":
        c = Fraction(c)
        if c == 0:
            return PuiseuxSeries((), self.trunc)
        return PuiseuxSeries(
            tuple((q, c * v) for q, v in self.terms), self.trunc
        )

    def pow(self, n: int) -> "PuiseuxSeries":
        if n < 0:
            raise ValueError("use series_inv for negative powers")
        out = PuiseuxSeries.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(
                f"{c}*t^({q})" for q, c in self.terms
            )
        return body if self.trunc is None else f"{body} + O(t^{self.trunc})"


def val(a: PuiseuxSeries) -> Fraction:
    """Least exponent with nonzero coefficient."""
    if not a.terms:
        if a.trunc is None:
            raise ValuationError("valuation of the zero series is undefined")
        raise ValuationError("valuation undefined at this truncation")
    return a.terms[0][0]


def series_add(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    return a + b


def series_mul(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    return a * b


def series_inv(a: PuiseuxSeries, order: Fraction | None = None) -> PuiseuxSeries:
    """Multiplicative inverse, truncated as far as the input certifies.

    For an exact single-term series the inverse is exact.  Otherwise the
    result is truncated: at ``trunc - 2*val`` when the input is truncated,
    or at ``order`` (default -val + 10) for exact multi-term inputs whose
    inverse is an infinite series.
    """
    v = val(a)
    lead = a.terms[0][1]
    if a.is_exact and len(a.terms) == 1:
        return PuiseuxSeries.t_power(-v, Fraction(1) / lead)
    if a.trunc is not None:
        res_trunc = a.trunc - 2 * v
    else:
        res_trunc = (-v + DEFAULT_INV_ORDER) if order is None else Fraction(order)
    # a = lead * t^v * (1 + x) with val x > 0; invert by geometric series
    x = PuiseuxSeries.make(
        [(q - v, c / lead) for q, c in a.terms[1:]],
        None if a.trunc is None else a.trunc - v,
    )
    rel = res_trunc + v  # required relative precision of 1/(1+x)
    acc = PuiseuxSeries.make([(Fraction(0), Fraction(1))], rel)
    power = PuiseuxSeries.make([(Fraction(0), Fraction(1))], rel)
    vx = val(x) if x.terms else None
    if vx is not None:
        k = 1
        while k * vx < rel:
            power = power * (-x)
            acc = acc + power
            k += 1
    return PuiseuxSeries.make(
        [(q - v, c / lead) for q, c in acc.terms], res_trunc
    )


@dataclass(frozen=True)
class PuiseuxPoint:
    """A point of the torus: both coordinates nonzero series."""

    z1: PuiseuxSeries
    z2: PuiseuxSeries

    def __post_init__(self):
        for z in (self.z1, self.z2):
            if not z.terms:
                raise ValueError("torus points need nonzero coordinates")


@dataclass(frozen=True)
class PuiseuxPolynomial:
    """Finite map from exponents (i, j) to nonzero series coefficients."""

    terms: tuple[tuple[tuple[int, int], PuiseuxSeries], ...]

    @staticmethod
    def from_dict(d) -> "PuiseuxPolynomial":
        items = []
        for (i, j), a in sorted(d.items()):
            if not a.terms:
                raise ValueError(f"zero coefficient at {(i, j)}")
            items.append(((int(i), int(j)), a))
        if not items:
            raise ValueError("polynomial needs at least one term")
        return PuiseuxPolynomial(tuple(items))

    def eval(self, p: PuiseuxPoint) -> PuiseuxSeries:
        total = PuiseuxSeries.zero()
        for (i, j), a in self.terms:
            total = total + a * p.z1.pow(i) * p.z2.pow(j)
        return total


def val_map(p: PuiseuxPoint) -> tuple[Fraction, Fraction]:
    """(-val z1, -val z2), the tropical image of a torus point."""
    return (-val(p.z1), -val(p.z2))


def tropicalize(f: PuiseuxPolynomial) -> TropicalPolynomial:
    """Replace each coefficient a_ij by the tropical number -val(a_ij)."""
    return TropicalPolynomial.from_dict(
        {e: -val(a) for e, a in f.terms}
    )


@dataclass(frozen=True)
class KapranovReport:
    """Outcome of checking a point against a polynomial and its corner locus.

    ``is_root`` is None when the truncation is too coarse to decide.
    A genuine root must make the minimum valuation among its summands occur
    at least twice and must map onto the corner locus.
    """

    is_root: bool | None
    min_attained_twice: bool
    image_on_corner_locus: bool

    @property
    def status(self) -> str:
        if self.is_root is None:
            return "undecidable"
        return "root" if self.is_root else "not-root"


def kapranov_check(f: PuiseuxPolynomial, p: PuiseuxPoint,
                   *, strict: bool = False) -> KapranovReport:
    """Check f(p) = 0, the twice-attained-minimum condition, and membership
    of the tropical image in the corner locus of the tropicalization.

    With ``strict=True`` an undecidable root test raises TruncationError
    instead of reporting ``is_root=None``.
    """
    from .curves import corner_locus, point_on_curve  # deferred, no cycle

    value = f.eval(p)
    if value.terms:
        is_root = False
    elif value.is_exact:
        is_root = True
    else:
        if strict:
            raise TruncationError(
                f"f(p) vanishes up to O(t^{value.trunc}); refine the input"
            )
        is_root = None

    v1, v2 = val(p.z1), val(p.z2)
    summand_vals = [val(a) + i * v1 + j * v2 for (i, j), a in f.terms]
    low = min(summand_vals)
    twice = summand_vals.count(low) >= 2

    curve, _ = corner_locus(tropicalize(f))
    on_curve = point_on_curve(curve, val_map(p))
    return KapranovReport(is_root, twice, on_curve)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def series_to_json(a: PuiseuxSeries) -> dict:
    obj = {"terms": [{"q": str(q), "c": str(c)} for q, c in a.terms]}
    if a.trunc is not None:
        obj["trunc"] = str(a.trunc)
    return obj


def series_from_json(obj: dict) -> PuiseuxSeries:
    return PuiseuxSeries.make(
        [(Fraction(t["q"]), Fraction(t["c"])) for t in obj["terms"]],
        Fraction(obj["trunc"]) if obj.get("trunc") is not None else None,
    )


def puiseux_poly_to_json(f: PuiseuxPolynomial) -> dict:
    return {
        "terms": [
            {"i": i, "j": j, "series": series_to_json(a)}
            for (i, j), a in f.terms
        ]
    }


def puiseux_poly_from_json(obj: dict) -> PuiseuxPolynomial:
    return PuiseuxPolynomial.from_dict(
        {
            (int(t["i"]), int(t["j"])): series_from_json(t["series"])
            for t in obj["terms"]
        }
    )
