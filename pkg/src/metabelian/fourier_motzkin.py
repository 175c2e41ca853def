"""Exact linear feasibility by Fourier-Motzkin elimination.

Constraints are ``coeffs . x REL rhs`` with REL one of ``">"``, ``">="``,
``"=="`` and ``"<="``/``"<"`` accepted as sugar.  Everything is done in
Fractions.  Equalities are removed first by Gaussian substitution, then the
remaining variables are eliminated one at a time while tracking strictness;
a witness point is rebuilt by back-substitution and re-checked against the
original system before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["Constraint", "feasible_point", "is_feasible"]


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    rel: str
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        if self.rel not in (">", ">=", "==", "<=", "<"):
            raise ValueError(f"bad relation {self.rel!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum(c * xi for c, xi in zip(self.coeffs, x))
        return {
            ">": lhs > self.rhs,
            ">=": lhs >= self.rhs,
            "==": lhs == self.rhs,
            "<=": lhs <= self.rhs,
            "<": lhs < self.rhs,
        }[self.rel]


# internal form: (coeffs tuple, rhs, strict) meaning coeffs.x >= rhs (or > rhs)


def _canon(coeffs, rhs, strict):
    # scale so the first nonzero coefficient is +-1; keeps duplicates detectable
    for c in coeffs:
        if c:
            s = abs(c)
            return tuple(a / s for a in coeffs), rhs / s, strict
    return coeffs, rhs, strict


def _prune(rows):
    """Drop tautologies, keep the tightest row per direction; None on contradiction."""
    best: dict[tuple, tuple] = {}
    for coeffs, rhs, strict in rows:
        if not any(coeffs):
            if rhs > 0 or (rhs == 0 and strict):
                return None
            continue
        coeffs, rhs, strict = _canon(coeffs, rhs, strict)
        old = best.get(coeffs)
        if old is None or rhs > old[0] or (rhs == old[0] and strict and not old[1]):
            best[coeffs] = (rhs, strict)
    return [(c, r, s) for c, (r, s) in best.items()]


def _choose(lowers, uppers):
    # lowers/uppers: lists of (bound, strict)
    lo = hi = None
    if lowers:
        lo = max(b for b, _ in lowers)
        lo_strict = any(s for b, s in lowers if b == lo)
    if uppers:
        hi = min(b for b, _ in uppers)
        hi_strict = any(s for b, s in uppers if b == hi)
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        return lo if not lo_strict else Fraction(math.floor(lo) + 1)
    if lo is None:
        return hi if not hi_strict else Fraction(math.ceil(hi) - 1)
    if not lo_strict and (lo < hi or not hi_strict):
        return lo
    if not hi_strict and lo < hi:
        return hi
    # open interval: prefer an integer, else the midpoint
    cand = Fraction(math.floor(lo) + 1)
    if cand < hi:
        return cand
    return (lo + hi) / 2


def feasible_point(constraints: Sequence[Constraint], nvars: int) -> list[Fraction] | None:
    """A rational point satisfying every constraint, or None if there is none."""
    rows = []
    eqs = []
    for c in constraints:
        if len(c.coeffs) != nvars:
            raise ValueError("constraint length does not match the number of variables")
        if c.rel == "==":
            eqs.append((list(c.coeffs), c.rhs))
        elif c.rel in (">", ">="):
            rows.append((c.coeffs, c.rhs, c.rel == ">"))
        else:
            rows.append((tuple(-a for a in c.coeffs), -c.rhs, c.rel == "<"))

    # Gaussian substitution of equalities: x_j = (rhs - sum others)/a_j
    subs = []  # (j, coeffs, rhs): x_j = rhs - coeffs.x  (coeffs[j] == 0)
    remaining = eqs
    while remaining:
        coeffs, rhs = remaining.pop()
        j = next((i for i, a in enumerate(coeffs) if a), None)
        if j is None:
            if rhs != 0:
                return None
            continue
        a = coeffs[j]
        expr = [c / a for c in coeffs]
        expr[j] = Fraction(0)
        val = rhs / a

        def substitute(cs, r):
            cj = cs[j]
            if not cj:
                return list(cs), r
            out = [c - cj * e for c, e in zip(cs, expr)]
            out[j] = Fraction(0)
            return out, r - cj * val

        remaining = [substitute(cs, r) for cs, r in remaining]
        rows = [(tuple(cs2), r2, s) for cs, r, s in rows for cs2, r2 in [substitute(cs, r)]]
        subs = [(jj, *substitute(cs, r)) for jj, cs, r in subs]
        subs.append((j, expr, val))

    rows = _prune(rows)
    if rows is None:
        return None

    # eliminate variables from the last to the first, recording bounds
    history = []
    for j in range(nvars - 1, -1, -1):
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        rest = [r for r in rows if r[0][j] == 0]
        history.append((j, pos, neg))
        new = list(rest)
        for cp, rp, sp in pos:
            for cn, rn, sn in neg:
                a, b = cp[j], -cn[j]
                coeffs = tuple(b * x + a * y for x, y in zip(cp, cn))
                new.append((coeffs, b * rp + a * rn, sp or sn))
        rows = _prune(new)
        if rows is None:
            return None

    x = [Fraction(0)] * nvars
    for j, pos, neg in reversed(history):
        lowers, uppers = [], []
        for coeffs, rhs, strict in pos + neg:
            rest = sum(c * xi for i, (c, xi) in enumerate(zip(coeffs, x)) if i != j)
            bound = (rhs - rest) / coeffs[j]
            (lowers if coeffs[j] > 0 else uppers).append((bound, strict))
        x[j] = _choose(lowers, uppers)
    for j, expr, val in reversed(subs):
        x[j] = val - sum(e * xi for e, xi in zip(expr, x))
    if not all(c.holds(x) for c in constraints):
        raise AssertionError("Fourier-Motzkin back-substitution produced an infeasible point")
    return x


def is_feasible(constraints: Sequence[Constraint], nvars: int) -> bool:
    return feasible_point(constraints, nvars) is not None
