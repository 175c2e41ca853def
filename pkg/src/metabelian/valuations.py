"""Discrete valuations on the module ring and the characters they induce.

Three kinds are supported: the f_i-adic valuation v_i, the degree valuation
w(g/h) = deg h - deg g, and p-adic valuations on rational constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .exactalg import LocalizedElement, Setup, monomial_image

__all__ = [
    "INF",
    "ValuationId",
    "fadic",
    "degree",
    "padic",
    "val_eval",
    "char_of_valuation",
    "parse_valuation",
]


@total_ordering
class _Infinity:
    """The value of a valuation at 0: above every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ExtInt.inf")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf")
        return self

    def __repr__(self):
        return "INF"

    __str__ = __repr__


INF = _Infinity()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ValuationId:
    kind: str  # "fadic" | "degree" | "padic"
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("fadic", "degree", "padic"):
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.kind == "padic" and not _is_prime(self.index):
            raise ValueError(f"{self.index} is not prime")
        if self.kind == "fadic" and self.index < 0:
            raise ValueError("negative f-adic index")

    def __str__(self):
        if self.kind == "fadic":
            return f"v{self.index}"
        if self.kind == "degree":
            return "w"
        return f"p{self.index}"


def fadic(i: int) -> ValuationId:
    return ValuationId("fadic", i)


def degree() -> ValuationId:
    return ValuationId("degree")


def padic(p: int) -> ValuationId:
    return ValuationId("padic", p)


def parse_valuation(text: str) -> ValuationId:
    """``v0``, ``v1``, ... ``w`` or ``p3``."""
    t = text.strip().lower()
    if t == "w":
        return degree()
    if t.startswith("v") and t[1:].isdigit():
        return fadic(int(t[1:]))
    if t.startswith("p") and t[1:].isdigit():
        return padic(int(t[1:]))
    raise ValueError(f"cannot parse valuation {text!r}")


def _p_order(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def val_eval(v: ValuationId, e):
    """Value of the valuation ``v`` at ``e`` (an int or ``INF``)."""
    if v.kind == "padic":
        if isinstance(e, LocalizedElement):
            if e.is_zero():
                return INF
            q = e.as_fraction()
        else:
            q = Fraction(e)
        if q == 0:
            return INF
        return _p_order(q.numerator, v.index) - _p_order(q.denominator, v.index)
    if not isinstance(e, LocalizedElement):
        raise TypeError("f-adic and degree valuations act on LocalizedElement")
    if e.is_zero():
        return INF
    if v.kind == "fadic":
        if v.index > e.setup.n:
            raise ValueError(f"no f_{v.index} in a block of {e.setup.n + 1} polynomials")
        # canonical numerators carry no f_i factor
        return e.exp[v.index]
    return -(e.numer.degree + sum(x * d for x, d in zip(e.exp, e.setup.degrees)))


def char_of_valuation(v: ValuationId, setup: Setup):
    """The character q -> v(image of q), as a vector on the basis of Q."""
    from .charspace import Character

    if v.kind == "padic":
        raise ValueError("p-adic valuations do not induce characters of Q here")
    coords = []
    for i in range(setup.rank):
        val = val_eval(v, monomial_image(setup.generator(i), setup))
        coords.append(val)
    return Character(coords)
