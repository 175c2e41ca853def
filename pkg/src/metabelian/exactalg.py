"""Exact arithmetic for the module ring Z[x, 1/x, 1/f_1, ..., 1/f_n, 1/k].

The group is G = A x| Q with Q free abelian on q_{-1} and the generators
q_{i,j} of each block.  On the designated (first) block the generators act
on A by multiplication: q_{-1} by k and q_{1,j} by f_{1,j}, where f_{1,0} = x.

Elements of the ring are kept in a canonical form

    numer * f_0**exp[0] * ... * f_n**exp[n] * k**kexp

with ``numer`` an integer polynomial divisible by no f_i and whose content
is not divisible by k.  The form is unique, so equality is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polynomial import (
    X,
    Poly,
    integer_roots,
    is_irreducible_small,
    is_k_smooth,
    poly_resultant,
)

__all__ = [
    "Setup",
    "Violation",
    "InvalidSetup",
    "SetupMismatch",
    "LocalizedElement",
    "QMonomial",
    "GroupElement",
    "setup_validate",
    "check_setup",
    "loc_normalize",
    "loc_arith",
    "monomial_image",
    "module_action",
    "g_n_setup",
]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: tuple = ()

    def __str__(self):
        return f"{self.code}: {self.message}"


class InvalidSetup(ValueError):
    """Raised by :func:`setup_validate`; carries every violation found."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class SetupMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Setup:
    """Validated data of a group G = A x| Q.

    ``blocks[0]`` is the designated block [x, f_1, ..., f_n]; further blocks
    are carried abstractly (their generators act trivially on block-1
    coordinates).  Build instances with :func:`setup_validate`.
    """

    k: int
    blocks: tuple[tuple[Poly, ...], ...]
    free_rank: int = 1
    notes: tuple[str, ...] = ()

    @property
    def f(self) -> tuple[Poly, ...]:
        return self.blocks[0]

    @property
    def n(self) -> int:
        return len(self.f) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.f)

    @property
    def beta(self) -> int:
        return -(2 + sum(self.degrees))

    @property
    def block_ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def m(self) -> int:
        return min(self.block_ranks)

    @property
    def l(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        """Rank of Q: q_{-1} plus every block generator."""
        return 1 + sum(self.block_ranks)

    def basis_names(self) -> list[str]:
        names = ["q_-1"]
        for i, b in enumerate(self.blocks, start=1):
            for j in range(len(b)):
                names.append(f"q{j}" if len(self.blocks) == 1 else f"q{i},{j}")
        return names

    def key(self):
        return (self.k, self.blocks, self.free_rank)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Setup):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "blocks": [{"polys": [list(p.coeffs) for p in b]} for b in self.blocks],
            "free_rank": self.free_rank,
        }

    # ring helpers

    def zero(self) -> LocalizedElement:
        return LocalizedElement(self, Poly(), (0,) * (self.n + 1), 0)

    def one(self) -> LocalizedElement:
        return LocalizedElement(self, Poly((1,)), (0,) * (self.n + 1), 0)

    def element(self, numer, exps: Sequence[int] | None = None, kexp: int = 0) -> LocalizedElement:
        """Canonical element numer * prod f_i**exps[i] * k**kexp."""
        if isinstance(numer, int):
            numer = Poly((numer,))
        elif isinstance(numer, str):
            numer = Poly.parse(numer)
        elif not isinstance(numer, Poly):
            numer = Poly(numer)
        if exps is None:
            exps = (0,) * (self.n + 1)
        return loc_normalize(numer, exps, kexp, self)

    def fi(self, i: int) -> LocalizedElement:
        e = [0] * (self.n + 1)
        e[i] = 1
        return LocalizedElement(self, Poly((1,)), tuple(e), 0)

    def x(self) -> LocalizedElement:
        return self.fi(0)

    def monomial(self, exps: Sequence[int]) -> QMonomial:
        return QMonomial(tuple(exps))

    def generator(self, index: int) -> QMonomial:
        """Basis element by position: 0 is q_{-1}, 1 + j is q_{1,j}, and so on."""
        e = [0] * self.rank
        e[index] = 1
        return QMonomial(tuple(e))

    def identity(self) -> QMonomial:
        return QMonomial((0,) * self.rank)


# ---------------------------------------------------------------- validation


def _parse_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, str):
        return Poly.parse(p)
    return Poly([int(c) if not isinstance(c, Fraction) else c for c in p])


def check_setup(raw) -> tuple[list[Violation], list[str]]:
    """Check raw setup data; return (violations, notes).

    ``raw`` is a mapping with keys ``k``, ``blocks`` and optionally
    ``free_rank``; each block is either a list of polynomials or a mapping
    ``{"polys": [...], "assert_irreducible": bool}``.  Polynomials are
    ascending coefficient lists, :class:`Poly` objects or strings.
    """
    violations: list[Violation] = []
    notes: list[str] = []
    k = raw.get("k")
    if not isinstance(k, int) or isinstance(k, bool):
        violations.append(Violation("k", f"k must be an integer, got {k!r}"))
        k = None
    elif k < 2:
        violations.append(Violation("k", f"k must be at least 2, got {k}", ("k",)))
    free_rank = raw.get("free_rank", 1)
    if not isinstance(free_rank, int) or free_rank < 1:
        violations.append(Violation("free_rank", f"free_rank must be a positive integer, got {free_rank!r}"))
    blocks = raw.get("blocks")
    if not blocks:
        violations.append(Violation("blocks", "at least one block of polynomials is required"))
        return violations, notes
    for bi, block in enumerate(blocks, start=1):
        if isinstance(block, dict):
            polys, asserted = block.get("polys", []), bool(block.get("assert_irreducible", False))
        else:
            polys, asserted = block, False
        try:
            fs = [_parse_poly(p) for p in polys]
        except (ValueError, TypeError) as exc:
            violations.append(Violation("parse", f"block {bi}: {exc}", (bi,)))
            continue
        if not fs:
            violations.append(Violation("blocks", f"block {bi} is empty", (bi,)))
            continue
        ok = []
        for j, f in enumerate(fs):
            where = (bi, j)
            name = f"f_{{{bi},{j}}} = {f}"
            good = True
            if not f.is_integral:
                violations.append(Violation("integral", f"{name} has non-integer coefficients", where))
                good = False
            elif f.is_constant():
                violations.append(Violation("constant", f"{name} is constant", where))
                good = False
            elif not f.is_monic():
                violations.append(Violation("monic", f"{name} is not monic", where))
                good = False
            if j == 0 and f != X:
                violations.append(Violation("first", f"f_{{{bi},0}} must be x, got {f}", where))
                good = False
            if good:
                if f.degree <= 3:
                    if not is_irreducible_small(f):
                        roots = integer_roots(f)
                        violations.append(Violation(
                            "irreducible", f"{name} is reducible (root {roots[0]})", where))
                        good = False
                elif asserted:
                    notes.append(f"irreducibility of {name} asserted, not checked")
                else:
                    violations.append(Violation(
                        "irreducible",
                        f"{name} has degree {f.degree} > 3; set assert_irreducible to accept it",
                        where))
                    good = False
            ok.append((j, f, good))
        for a in range(len(ok)):
            for b in range(a + 1, len(ok)):
                ja, fa, ga = ok[a]
                jb, fb, gb = ok[b]
                if not (ga and gb):
                    continue
                if fa == fb:
                    violations.append(Violation(
                        "coprime", f"f_{{{bi},{ja}}} and f_{{{bi},{jb}}} coincide", (bi, ja, jb)))
                    continue
                r = poly_resultant(fa, fb)
                if k is not None and k >= 2 and not is_k_smooth(r, k):
                    violations.append(Violation(
                        "coprime",
                        f"Res(f_{{{bi},{ja}}}, f_{{{bi},{jb}}}) = {r} has a prime factor not dividing k={k}",
                        (bi, ja, jb)))
    return violations, notes


def setup_validate(raw) -> Setup:
    """Validate raw data and build a :class:`Setup`, or raise :class:`InvalidSetup`."""
    violations, notes = check_setup(raw)
    if violations:
        raise InvalidSetup(violations)
    blocks = []
    for block in raw["blocks"]:
        polys = block.get("polys", []) if isinstance(block, dict) else block
        blocks.append(tuple(_parse_poly(p) for p in polys))
    return Setup(raw["k"], tuple(blocks), raw.get("free_rank", 1), tuple(notes))


def g_n_setup(n: int) -> Setup:
    """The group G_n: k = n!, f = x, x+1, ..., x+n."""
    return setup_validate({"k": math.factorial(n), "blocks": [[[j, 1] for j in range(n + 1)]]})


# ---------------------------------------------------------------- the ring


@dataclass(frozen=True)
class LocalizedElement:
    setup: Setup = field(repr=False, compare=False)
    numer: Poly
    exp: tuple[int, ...]
    kexp: int

    def __post_init__(self):
        if len(self.exp) != self.setup.n + 1:
            raise ValueError("exponent vector has the wrong length")

    def _check(self, other):
        if isinstance(other, int):
            return self.setup.element(other)
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        if other.setup is not self.setup and other.setup != self.setup:
            raise SetupMismatch("elements belong to different setups")
        return other

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return loc_arith("add", self, other)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedElement(self.setup, -self.numer, self.exp, self.kexp)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return loc_arith("add", self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return loc_arith("mul", self, other)

    __rmul__ = __mul__

    def unit_inverse(self) -> LocalizedElement:
        """Inverse of a unit (numer a k-smooth constant); ValueError otherwise."""
        if self.numer.degree != 0 or not is_k_smooth(self.numer[0], self.setup.k):
            raise ValueError(f"{self} is not a unit")
        c = self.numer[0]
        # 1/c = (k**e / c) / k**e with c | k**e
        e = 0
        while (self.setup.k ** e) % c:
            e += 1
        neg = tuple(-a for a in self.exp)
        return loc_normalize(Poly(((self.setup.k ** e) // c,)), neg, -self.kexp - e, self.setup)

    def __pow__(self, e: int):
        if e < 0:
            return self.unit_inverse() ** (-e)
        result = self.setup.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_constant(self) -> bool:
        return self.numer.degree <= 0 and not any(self.exp)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(self.numer[0]) * Fraction(self.setup.k) ** self.kexp

    def numerator_denominator(self) -> tuple[Poly, Poly]:
        """(g, h) with self = g/h, g integral and h a product of f_i and k powers."""
        num, den = self.numer, Poly((1,))
        for f, e in zip(self.setup.f, self.exp):
            if e > 0:
                num = num * f ** e
            elif e < 0:
                den = den * f ** (-e)
        if self.kexp >= 0:
            num = num * (self.setup.k ** self.kexp)
        else:
            den = den * (self.setup.k ** (-self.kexp))
        return num, den

    def to_json(self) -> dict:
        return {"numer": list(self.numer.coeffs), "exps": list(self.exp), "kexp": self.kexp}

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        numer = str(self.numer)
        if self.numer.degree >= 1 and len([c for c in self.numer if c]) > 1:
            numer = f"({numer})"
        if numer != "1" or (not any(self.exp) and not self.kexp):
            parts.append(numer)
        for f, e in zip(self.setup.f, self.exp):
            if e:
                base = str(f) if f.degree == 1 and f == X else f"({f})"
                parts.append(base if e == 1 else f"{base}^{e}")
        if self.kexp:
            parts.append(f"{self.setup.k}" if self.kexp == 1 else f"{self.setup.k}^{self.kexp}")
        return "*".join(parts)


def loc_normalize(numer: Poly, exps: Sequence[int], kexp: int, setup: Setup) -> LocalizedElement:
    """Canonical form of numer * prod f_i**exps[i] * k**kexp."""
    if numer.is_zero():
        return setup.zero()
    if not numer.is_integral:
        den = numer.denominator()
        if not is_k_smooth(den, setup.k):
            raise ValueError(f"denominator {den} is not a unit in Z[1/{setup.k}]")
        e = 0
        while (setup.k ** e) % den:
            e += 1
        numer = numer.scale(setup.k ** e)
        kexp -= e
    exps = list(exps)
    for i, f in enumerate(setup.f):
        while True:
            q, r = divmod(numer, f)
            if not r.is_zero():
                break
            numer = q
            exps[i] += 1
    k = setup.k
    c = numer.content()
    if c % k == 0:
        t = 0
        while c % k == 0:
            c //= k
            t += 1
        numer = Poly([a // k ** t for a in numer.coeffs])
        kexp += t
    return LocalizedElement(setup, numer, tuple(exps), kexp)


def loc_arith(op: str, a: LocalizedElement, b: LocalizedElement) -> LocalizedElement:
    """Exact sum (``op='add'``) or product (``op='mul'``) in canonical form."""
    if a.setup is not b.setup and a.setup != b.setup:
        raise SetupMismatch("elements belong to different setups")
    setup = a.setup
    if op == "mul":
        if a.is_zero() or b.is_zero():
            return setup.zero()
        return loc_normalize(a.numer * b.numer,
                             [x + y for x, y in zip(a.exp, b.exp)],
                             a.kexp + b.kexp, setup)
    if op != "add":
        raise ValueError(f"unknown operation {op!r}")
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    low = [min(x, y) for x, y in zip(a.exp, b.exp)]
    kl = min(a.kexp, b.kexp)

    def lift(e: LocalizedElement) -> Poly:
        p = e.numer
        for f, ei, li in zip(setup.f, e.exp, low):
            if ei > li:
                p = p * f ** (ei - li)
        if e.kexp > kl:
            p = p.scale(setup.k ** (e.kexp - kl))
        return p

    return loc_normalize(lift(a) + lift(b), low, kl, setup)


# ---------------------------------------------------------------- Q and G


@dataclass(frozen=True, order=True)
class QMonomial:
    """q_{-1}^e0 * q_{1,0}^e1 * ... as an exponent vector over the fixed basis."""

    exps: tuple[int, ...]

    def __mul__(self, other: QMonomial) -> QMonomial:
        return QMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def inverse(self) -> QMonomial:
        return QMonomial(tuple(-a for a in self.exps))

    def __pow__(self, e: int) -> QMonomial:
        return QMonomial(tuple(a * e for a in self.exps))

    def is_identity(self) -> bool:
        return not any(self.exps)

    def __len__(self):
        return len(self.exps)

    def __str__(self):
        names = ["q_-1"] + [f"q{j}" for j in range(len(self.exps) - 1)]
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, self.exps) if e]
        return "*".join(parts) or "1"


def monomial_image(q: QMonomial, setup: Setup) -> LocalizedElement:
    """Image of q in the ring: q_{-1} -> k, q_{1,j} -> f_j, other blocks -> 1."""
    if len(q.exps) != setup.rank:
        raise ValueError(f"monomial has {len(q.exps)} exponents, Q has rank {setup.rank}")
    return LocalizedElement(setup, Poly((1,)), tuple(q.exps[1:setup.n + 2]), q.exps[0])


def module_action(a: LocalizedElement, q: QMonomial) -> LocalizedElement:
    """a o q: multiplication by the image of q."""
    return monomial_image(q, a.setup) * a


@dataclass(frozen=True)
class GroupElement:
    """The element written (a, q), composing as (a,q)(b,p) = (a o p + b, qp)."""

    a: LocalizedElement
    q: QMonomial

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(module_action(self.a, other.q) + other.a, self.q * other.q)

    def inverse(self) -> GroupElement:
        qi = self.q.inverse()
        return GroupElement(-module_action(self.a, qi), qi)

    @classmethod
    def identity(cls, setup: Setup) -> GroupElement:
        return cls(setup.zero(), setup.identity())
