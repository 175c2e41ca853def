import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from metabelian.fourier_motzkin import Constraint, feasible_point, is_feasible


def test_simple():
    # x > 0, y > 0, x + y < 1
    cons = [Constraint((1, 0), ">", 0), Constraint((0, 1), ">", 0), Constraint((1, 1), "<", 1)]
    pt = feasible_point(cons, 2)
    assert pt is not None and all(c.holds(pt) for c in cons)


def test_strictness_matters():
    assert is_feasible([Constraint((1,), ">=", 0), Constraint((1,), "<=", 0)], 1)
    assert not is_feasible([Constraint((1,), ">", 0), Constraint((1,), "<=", 0)], 1)


def test_equalities():
    cons = [Constraint((1, 1, 1), "==", 3), Constraint((1, -1, 0), "==", 0), Constraint((0, 0, 1), ">", 2)]
    pt = feasible_point(cons, 3)
    assert pt[0] == pt[1] and sum(pt) == 3 and pt[2] > 2
    assert not is_feasible([Constraint((1, 1), "==", 1), Constraint((2, 2), "==", 3)], 2)


def test_bad_input():
    with pytest.raises(ValueError):
        Constraint((1,), "!=", 0)
    with pytest.raises(ValueError):
        feasible_point([Constraint((1, 2), ">", 0)], 3)


def _lp_feasible(cons, nvars):
    # strict rows become >= rhs + eps after maximizing the slack
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for c in cons:
        row = [float(a) for a in c.coeffs]
        if c.rel == "==":
            A_eq.append(row + [0.0])
            b_eq.append(float(c.rhs))
        else:
            sign = -1.0 if c.rel in (">", ">=") else 1.0
            strict = 1.0 if c.rel in (">", "<") else 0.0
            A_ub.append([sign * a for a in row] + [strict])
            b_ub.append(sign * float(c.rhs))
    res = linprog(
        c=[0.0] * nvars + [-1.0],
        A_ub=np.array(A_ub) if A_ub else None, b_ub=b_ub or None,
        A_eq=np.array(A_eq) if A_eq else None, b_eq=b_eq or None,
        bounds=[(None, None)] * nvars + [(0, 1)],
    )
    if res.status == 2:
        return False
    has_strict = any(c.rel in (">", "<") for c in cons)
    return res.status == 0 and (not has_strict or -res.fun > 1e-9)


def test_against_linprog():
    rng = random.Random(3)
    agree = 0
    for _ in range(300):
        nvars = rng.randint(1, 4)
        cons = []
        for _ in range(rng.randint(1, 6)):
            coeffs = tuple(rng.randint(-3, 3) for _ in range(nvars))
            cons.append(Constraint(coeffs, rng.choice([">", ">=", "<", "<=", "=="]), rng.randint(-2, 2)))
        pt = feasible_point(cons, nvars)
        if pt is not None:
            assert all(isinstance(v, Fraction) for v in pt)
            assert all(c.holds(pt) for c in cons)
        assert (pt is not None) == _lp_feasible(cons, nvars)
        agree += 1
    assert agree == 300
