"""Exact linear feasibility over the rationals via Fourier-Motzkin.

Supports mixed systems of equalities, weak and strict inequalities, which
is what the subdivision-regularity decision needs.  Intended for the
desk-scale systems appearing in this toolkit (a few dozen variables), not
as a general LP solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

EQ, LE, LT = "=", "<=", "<"


@dataclass(frozen=True)
class Constraint:
    """row . x  REL  rhs  with REL one of '=', '<=', '<'."""

    row: tuple[Fraction, ...]
    rhs: Fraction
    rel: str = LE

    def __post_init__(self):
        if self.rel not in (EQ, LE, LT):
            raise ValueError(f"bad relation {self.rel!r}")

    def holds_at(self, x) -> bool:
        lhs = sum(c * v for c, v in zip(self.row, x))
        if self.rel == EQ:
            return lhs == self.rhs
        if self.rel == LE:
            return lhs <= self.rhs
        return lhs < self.rhs


@dataclass
class LinearSystem:
    """A conjunction of rational linear constraints in ``arity`` variables."""

    arity: int
    constraints: list[Constraint] = field(default_factory=list)

    def add(self, row, rhs, rel=LE):
        row = tuple(Fraction(c) for c in row)
        if len(row) != self.arity:
            raise ValueError("row length does not match system arity")
        self.constraints.append(Constraint(row, Fraction(rhs), rel))
        return self

    def holds_at(self, x) -> bool:
        return all(c.holds_at(x) for c in self.constraints)


def _combine_rel(r1, r2):
    return LT if LT in (r1, r2) else LE


def feasible(sys: LinearSystem) -> tuple[bool, list[Fraction] | None]:
    """Decide rational solvability; on success return an exact witness.

    Strict inequalities are honored exactly (the witness satisfies them
    strictly).  Equalities are eliminated by pivoting, the rest by classic
    Fourier-Motzkin combination of lower and upper bounds.
    """
    n = sys.arity
    cons = [(c.row, c.rhs, c.rel) for c in sys.constraints]
    trace = []  # per eliminated variable, data to rebuild a witness
    remaining = list(range(n))

    while remaining:
        # prefer a variable pivotable by an equality, else the cheapest FM
        k = None
        for var in remaining:
            if any(rel == EQ and row[var] != 0 for row, _, rel in cons):
                k = var
                break
        if k is None:
            def cost(var):
                pos = sum(1 for row, _, _ in cons if row[var] > 0)
                neg = sum(1 for row, _, _ in cons if row[var] < 0)
                return pos * neg
            k = min(remaining, key=cost)
        remaining.remove(k)

        pivot = next(
            (c for c in cons if c[2] == EQ and c[0][k] != 0), None
        )
        if pivot is not None:
            prow, prhs, _ = pivot
            cons.remove(pivot)
            new_cons = []
            for row, rhs, rel in cons:
                if row[k] != 0:
                    f = row[k] / prow[k]
                    row = tuple(a - f * b for a, b in zip(row, prow))
                    rhs = rhs - f * prhs
                new_cons.append((row, rhs, rel))
            cons = new_cons
            trace.append(("eq", k, prow, prhs))
            continue

        lowers, uppers, rest = [], [], []
        for row, rhs, rel in cons:
            a = row[k]
            if a == 0:
                rest.append((row, rhs, rel))
                continue
            # normalize to  x_k  rel  expr  /  expr  rel  x_k
            expr = tuple(
                (-c / a) if i != k else Fraction(0) for i, c in enumerate(row)
            )
            const = rhs / a
            if a > 0:
                uppers.append((expr, const, rel))
            else:
                lowers.append((expr, const, rel))
        new_cons = rest
        for lrow, lc, lrel in lowers:
            for urow, uc, urel in uppers:
                row = tuple(a - b for a, b in zip(lrow, urow))
                new_cons.append((row, uc - lc, _combine_rel(lrel, urel)))
        cons = _dedupe(new_cons)
        trace.append(("ineq", k, lowers, uppers))

    for row, rhs, rel in cons:
        assert all(c == 0 for c in row)
        ok = rhs == 0 if rel == EQ else (rhs >= 0 if rel == LE else rhs > 0)
        if not ok:
            return False, None

    # back-substitute a witness
    x: list[Fraction | None] = [None] * n
    for kind, k, *data in reversed(trace):
        if kind == "ineq":
            lowers, uppers = data
            lo = hi = None
            lo_strict = hi_strict = False
            for row, const, rel in lowers:
                val = const + sum(
                    c * x[i] for i, c in enumerate(row) if c != 0
                )
                if lo is None or val > lo or (val == lo and rel == LT):
                    lo, lo_strict = val, rel == LT
            for row, const, rel in uppers:
                val = const + sum(
                    c * x[i] for i, c in enumerate(row) if c != 0
                )
                if hi is None or val < hi or (val == hi and rel == LT):
                    hi, hi_strict = val, rel == LT
            if lo is None and hi is None:
                x[k] = Fraction(0)
            elif lo is None:
                x[k] = hi - 1 if hi_strict else hi
            elif hi is None:
                x[k] = lo + 1 if lo_strict else lo
            elif lo == hi:
                x[k] = lo  # both weak, else base check would have failed
            else:
                x[k] = (lo + hi) / 2
        else:
            prow, prhs = data
            acc = prhs - sum(
                c * x[i] for i, c in enumerate(prow) if i != k and c != 0
            )
            x[k] = acc / prow[k]
    return True, [Fraction(v) for v in x]


def _dedupe(cons):
    seen = set()
    out = []
    for row, rhs, rel in cons:
        if all(c == 0 for c in row):
            # keep only if it can still fail later; trivially true rows drop
            if (rel == EQ and rhs == 0) or (rel == LE and rhs >= 0) \
                    or (rel == LT and rhs > 0):
                continue
        key = (row, rhs, rel)
        if key not in seen:
            seen.add(key)
            out.append((row, rhs, rel))
    return out
