"""H^2(Q, A) for l = 1: the closed-form branch and the fixed-point count."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .exactalg import LocalizedElement, Setup
from .polynomial import Poly

__all__ = [
    "CyclicGroupOrder",
    "h2_theoremC",
    "CoinvariantClass",
    "coinvariants_reduce",
    "fixed_point_order",
    "fixed_point_order_bruteforce",
    "H2Report",
    "h2_report",
]


@dataclass(frozen=True)
class CyclicGroupOrder:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")

    @property
    def trivial(self) -> bool:
        return self.order == 1

    def __str__(self):
        return "trivial" if self.trivial else f"Z/{self.order}"


def _require_cyclic_l1(setup: Setup):
    if setup.l != 1:
        raise NotImplementedError(f"only l = 1 is supported, setup has l = {setup.l}")
    if setup.free_rank != 1:
        raise NotImplementedError("only the cyclic module A = M is supported")


def h2_theoremC(setup: Setup) -> CyclicGroupOrder:
    """Z/(k-1) if f_j(1) = 1 mod (k-1) for every j >= 1, trivial otherwise."""
    _require_cyclic_l1(setup)
    N = setup.k - 1
    if all((f(1) - 1) % N == 0 for f in setup.f[1:]):
        return CyclicGroupOrder(N)
    return CyclicGroupOrder(1)


@dataclass(frozen=True, eq=False)
class CoinvariantClass:
    """numer * prod f_i^exps in (Z/N)[x, x^-1, f_1^-1, ...], N = k - 1."""

    setup: Setup
    numer: tuple[int, ...]  # ascending coefficients, reduced mod N
    exps: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.setup.k - 1

    def is_zero(self) -> bool:
        return not any(self.numer)

    def _lift(self, low: Sequence[int]) -> list[int]:
        p = Poly(self.numer)
        for f, e, lo in zip(self.setup.f, self.exps, low):
            p = p * f ** (e - lo)
        return [c % self.modulus for c in p.coeffs]

    def _common(self, other):
        low = [min(a, b) for a, b in zip(self.exps, other.exps)]
        return low, self._lift(low), other._lift(low)

    def __eq__(self, other):
        # the f_i are monic, hence not zero divisors mod N: compare over a common denominator
        if not isinstance(other, CoinvariantClass):
            return NotImplemented
        _, a, b = self._common(other)
        return _strip(a) == _strip(b)

    def __hash__(self):
        return hash(self.setup.k)

    def __add__(self, other):
        low, a, b = self._common(other)
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return _make(self.setup, [x + y for x, y in zip(a, b)], low)

    def __mul__(self, other):
        p = Poly(self.numer) * Poly(other.numer)
        return _make(self.setup, list(p.coeffs), [a + b for a, b in zip(self.exps, other.exps)])

    def __str__(self):
        if self.is_zero():
            return "0"
        body = str(Poly(self.numer))
        den = "*".join(f"({f})^{-e}" for f, e in zip(self.setup.f, self.exps) if e < 0)
        num = "*".join(f"({f})^{e}" for f, e in zip(self.setup.f, self.exps) if e > 0)
        text = body if not num else f"{body}*{num}"
        return f"{text} / {den} mod {self.modulus}" if den else f"{text} mod {self.modulus}"


def _strip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _make(setup, coeffs, exps) -> CoinvariantClass:
    N = setup.k - 1
    return CoinvariantClass(setup, tuple(_strip(c % N for c in coeffs)), tuple(exps))


def coinvariants_reduce(setup: Setup, e: LocalizedElement) -> CoinvariantClass:
    """Image of e in A/(k-1)A; k becomes 1 there, so the k-power is dropped."""
    if setup.k < 2:
        raise ValueError("k must be at least 2")
    return _make(setup, list(e.numer.coeffs), e.exp)


def fixed_point_order(k: int, values: Sequence[int]) -> CyclicGroupOrder:
    """|{x in R : v x = x for all v}|, R = (Z/(k-1))[1/v for v in values].

    R is Z/N' with N' the part of k-1 prime to every value, so the count is
    gcd(N', v_1 - 1, ..., v_r - 1).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    N = k - 1
    u = math.prod(values) if values else 1
    g = math.gcd(N, u)
    while g > 1:
        N //= g
        g = math.gcd(N, g)
    return CyclicGroupOrder(math.gcd(N, *(v - 1 for v in values)))


def fixed_point_order_bruteforce(k: int, values: Sequence[int]) -> CyclicGroupOrder:
    """Same count by enumerating Z/(k-1) and the kernel K of the localization map."""
    if k < 2:
        raise ValueError("k must be at least 2")
    N = k - 1
    u = math.prod(values) if values else 1
    # x dies in R iff u^e x = 0 for some e; e = N suffices
    ue = pow(u, N, N)
    kernel = {x for x in range(N) if (ue * x) % N == 0}
    fixed = [x for x in range(N) if all(((v - 1) * x) % N in kernel for v in values)]
    assert len(fixed) % len(kernel) == 0
    return CyclicGroupOrder(len(fixed) // len(kernel))


@dataclass
class H2Report:
    theorem_c: CyclicGroupOrder
    fixed_points: CyclicGroupOrder
    values: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return self.theorem_c == self.fixed_points


def h2_report(setup: Setup) -> H2Report:
    """Both answers for H^2; ``agree`` is False when they differ."""
    values = tuple(f(1) for f in setup.f[1:])
    return H2Report(h2_theoremC(setup), fixed_point_order(setup.k, values), values)
