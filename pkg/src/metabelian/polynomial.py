"""Dense univariate polynomials over the integers and the rationals.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the tuple
(a_0, a_1, ..., a_n) with a_n nonzero; the zero polynomial is ().
Coefficients are Python ints, or Fractions when a computation leaves Z[x]
(Bezout coefficients, division by non-monic polynomials).  A Fraction with
denominator 1 is always stored as an int, so ``is_integral`` is a plain
type check.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce

__all__ = [
    "Poly",
    "X",
    "INFINITE",
    "poly_gcd",
    "poly_xgcd",
    "poly_resultant",
    "multiplicity",
    "integer_roots",
    "is_irreducible_small",
    "is_k_smooth",
    "k_smooth_part",
]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Poly:
    """Immutable dense polynomial in one variable x."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers

    @classmethod
    def monomial(cls, deg: int, c=1) -> Poly:
        return cls((0,) * deg + (c,))

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Parse human syntax such as ``x^2+x+2``, ``-3x + 1/2`` or ``2*x**3``."""
        s = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out: dict[int, Fraction] = {}
        for t in terms:
            m = re.fullmatch(r"([+-])(\d+(?:/\d+)?)?(x(?:\^(\d+))?)?", t)
            if m is None or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse term {t!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(3):
                e = int(m.group(4)) if m.group(4) else 1
            else:
                e = 0
            out[e] = out.get(e, Fraction(0)) + sign * c
        deg = max(out)
        return cls([out.get(i, 0) for i in range(deg + 1)])

    # basic properties

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (integral polynomials only)."""
        if not self.is_integral:
            raise ValueError("content of a non-integral polynomial")
        return reduce(math.gcd, self.coeffs, 0)

    def denominator(self) -> int:
        return math.lcm(1, *(Fraction(c).denominator for c in self.coeffs))

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lc = other.lc
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [0] * (len(rem) - db)
        for i in range(len(rem) - 1 - db, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            q = c // lc if isinstance(c, int) and isinstance(lc, int) and c % lc == 0 else Fraction(c, 1) / lc
            quo[i] = q
            for j, y in enumerate(other.coeffs):
                rem[i + j] -= q * y
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def scale(self, c) -> Poly:
        return Poly([c * a for a in self.coeffs])

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(Fraction(1) / self.lc)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    # comparisons and display

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mon = "x" if e == 1 else f"x^{e}"
                body = mon if a == 1 else f"{a}*{mon}" if isinstance(a, Fraction) else f"{a}{mon}"
            parts.append((sign, body))
        s = "".join(f"{sg}{b}" for sg, b in parts)
        return s[1:] if s[0] == "+" else s


X = Poly((0, 1))

# Distinguished value for the multiplicity of f in the zero polynomial.
INFINITE = math.inf


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) over Q[x] with s*a + t*b = g and g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = Fraction(1) / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q[x]."""
    return poly_xgcd(a, b)[0]


def _det_bareiss(m: list[list[int]]) -> int:
    # fraction-free Gaussian elimination; exact on integer matrices
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_matrix(f: Poly, g: Poly) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc, gc = f.coeffs[::-1], g.coeffs[::-1]
    for i in range(n):
        rows.append([0] * i + list(fc) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gc) + [0] * (size - n - 1 - i))
    return rows


def poly_resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("zero polynomial")
    if not (f.is_integral and g.is_integral):
        raise ValueError("resultant is defined here for integer polynomials only")
    if f.degree == 0 and g.degree == 0:
        return 1
    return _det_bareiss(sylvester_matrix(f, g))


def multiplicity(f: Poly, g: Poly):
    """Largest e with f**e dividing g; ``INFINITE`` when g is zero."""
    if g.is_zero():
        return INFINITE
    if f.is_constant() or not f.is_monic():
        raise ValueError("multiplicity needs a monic non-constant f")
    e = 0
    while True:
        q, r = divmod(g, f)
        if not r.is_zero():
            return e
        g, e = q, e + 1


def integer_roots(f: Poly) -> list[int]:
    """Integer roots of an integral monic polynomial (rational root theorem)."""
    cs = list(f.coeffs)
    roots = []
    while cs and cs[0] == 0:
        roots.append(0)
        cs.pop(0)
    f0 = Poly(cs)
    if f0.degree < 1:
        return sorted(set(roots))
    c0 = abs(f0[0])
    for d in range(1, math.isqrt(c0) + 1):
        if c0 % d == 0:
            for cand in {d, -d, c0 // d, -(c0 // d)}:
                if f0(cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def is_irreducible_small(f: Poly) -> bool:
    """Irreducibility over Z of a monic polynomial of degree at most 3.

    A monic polynomial of degree 2 or 3 factors over Z exactly when it has a
    linear factor, and monic linear factors come from integer roots.
    """
    if not f.is_monic():
        raise ValueError("monic polynomial expected")
    if f.degree < 1 or f.degree > 3:
        raise ValueError("exact irreducibility test covers degrees 1..3")
    if f.degree == 1:
        return True
    return not integer_roots(f)


def is_k_smooth(n: int, k: int) -> bool:
    """True when every prime factor of n divides k (n nonzero)."""
    if n == 0:
        return False
    n = abs(n)
    while True:
        g = math.gcd(n, k)
        if g == 1:
            return n == 1
        n //= g


def k_smooth_part(n: int, k: int) -> int:
    """The largest divisor of |n| all of whose primes divide k."""
    n = abs(n)
    part = 1
    while True:
        g = math.gcd(n, k)
        if g == 1:
            return part
        n //= g
        part *= g
