"""Characters of Q, open-halfspace tests, cone families and m-tameness."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exactalg import QMonomial, Setup
from .fourier_motzkin import Constraint, feasible_point

__all__ = [
    "Character",
    "parse_character",
    "LinearCondition",
    "ConeSpec",
    "ConeFamily",
    "TameResult",
    "halfspace_test",
    "m_tame_check",
    "plain_sum_check",
    "cone_contains",
    "family_contains",
    "build_V",
    "primitive_vectors",
]


@dataclass(frozen=True)
class Character:
    """A homomorphism Q -> R with rational values on the fixed basis of Q.

    The zero vector is allowed as a value (sums of characters can vanish)
    but is rejected wherever an actual character is required.
    """

    coords: tuple[Fraction, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: Character) -> Character:
        return Character(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: Character) -> Character:
        return Character(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> Character:
        return Character(-a for a in self.coords)

    def __mul__(self, c) -> Character:
        return Character(Fraction(c) * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __call__(self, q) -> Fraction:
        """Value on a QMonomial (or any exponent vector)."""
        exps = q.exps if isinstance(q, QMonomial) else q
        if len(exps) != len(self.coords):
            raise ValueError("character and monomial have different lengths")
        return sum((a * e for a, e in zip(self.coords, exps)), Fraction(0))

    def dot(self, other) -> Fraction:
        return sum((a * Fraction(b) for a, b in zip(self.coords, other)), Fraction(0))

    def primitive(self) -> Character:
        """The integral primitive vector on the same ray."""
        return Character(_primitive(self.coords))

    def is_discrete(self) -> bool:
        """Integer values with gcd 1, so the image is exactly Z."""
        return all(c.denominator == 1 for c in self.coords) and \
            math.gcd(*(int(c) for c in self.coords)) == 1

    def same_class(self, other: Character) -> bool:
        return self.primitive() == other.primitive()

    def __str__(self):
        return "(" + ",".join(_fmt(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Character{self}"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _primitive(coords: Sequence[Fraction]) -> tuple[int, ...]:
    coords = [Fraction(c) for c in coords]
    den = math.lcm(1, *(c.denominator for c in coords))
    ints = [int(c * den) for c in coords]
    g = math.gcd(*ints)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


def parse_character(text: str) -> Character:
    """Parse ``"r,r,..."`` with rationals written as integers or ``p/q``."""
    return Character(Fraction(t.strip()) for t in text.split(","))


def _require_nonzero(chars: Iterable[Character]) -> list[Character]:
    chars = list(chars)
    if any(c.is_zero() for c in chars):
        raise ValueError("zero vector is not a character")
    if len({len(c) for c in chars}) > 1:
        raise ValueError("characters of different lengths")
    return chars


def halfspace_test(chars: Iterable[Character]) -> tuple[bool, Character | None]:
    """Decide whether some u has u.v > 0 for every v; return (bool, witness u).

    The system is homogeneous, so u.v > 0 for all v is solvable exactly when
    u.v >= 1 is; the second form is solved because it yields tidier points.
    """
    chars = _require_nonzero(chars)
    if not chars:
        return True, None
    d = len(chars[0])
    pt = feasible_point([Constraint(c.coords, ">=", 1) for c in chars], d)
    if pt is None:
        return False, None
    return True, Character(_primitive(pt))


@dataclass(frozen=True)
class LinearCondition:
    """coeffs . k > 0 (strict) or coeffs . k >= 0 over the cone coefficients k."""

    coeffs: tuple[int, ...]
    strict: bool

    def __str__(self):
        return f"{list(self.coeffs)} {'>' if self.strict else '>='} 0"


@dataclass(frozen=True)
class ConeSpec:
    """The classes [sum_j k_j g_j] with k satisfying every condition."""

    generators: tuple[Character, ...]
    conditions: tuple[LinearCondition, ...]
    label: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "conditions", tuple(self.conditions))
        # every admissible coefficient vector must give a nonzero character
        if feasible_point(self._coefficient_constraints() + self._sum_equals(Character([0] * self.dim)),
                          len(gens)) is not None:
            raise ValueError(f"cone {self.label or gens} admits the zero character")

    @classmethod
    def isolated(cls, v: Character, label: str = "") -> ConeSpec:
        """The single class [v]."""
        return cls((v,), (LinearCondition((1,), True),), label or f"[{v}]")

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    def _coefficient_constraints(self, offset: int = 0, total: int | None = None) -> list[Constraint]:
        r = len(self.generators)
        total = r if total is None else total
        out = []
        for cond in self.conditions:
            row = [0] * total
            row[offset:offset + r] = cond.coeffs
            out.append(Constraint(row, ">" if cond.strict else ">=", 0))
        return out

    def _sum_equals(self, target: Character) -> list[Constraint]:
        return [Constraint([g[i] for g in self.generators], "==", target[i]) for i in range(self.dim)]

    def point(self, coeffs: Sequence[Fraction]) -> Character:
        acc = Character([0] * self.dim)
        for c, g in zip(coeffs, self.generators):
            acc = acc + g * c
        return acc

    def __str__(self):
        return self.label or " + ".join(f"k{j}*{g}" for j, g in enumerate(self.generators))


@dataclass(frozen=True)
class ConeFamily:
    cones: tuple[ConeSpec, ...]

    def __init__(self, cones):
        object.__setattr__(self, "cones", tuple(cones))

    def __len__(self):
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    @classmethod
    def of_classes(cls, chars: Iterable[Character], labels: Sequence[str] | None = None) -> ConeFamily:
        chars = list(chars)
        labels = labels or [""] * len(chars)
        return cls(ConeSpec.isolated(c, lab) for c, lab in zip(chars, labels))


def cone_contains(cone: ConeSpec, v: Character) -> bool:
    """Whether the class [v] belongs to the cone (exact)."""
    if v.is_zero():
        raise ValueError("zero vector is not a character")
    cons = cone._coefficient_constraints() + cone._sum_equals(v)
    return feasible_point(cons, len(cone.generators)) is not None


def family_contains(family: ConeFamily, v: Character) -> ConeSpec | None:
    """The first cone of the family containing [v], or None."""
    for cone in family:
        if cone_contains(cone, v):
            return cone
    return None


@dataclass
class TameResult:
    m: int
    tame: bool
    certificate: list[Character] | None = None
    cone_indices: tuple[int, ...] | None = None
    plain_sum_certificate: list[Character] | None = field(default=None)

    def certificate_str(self, names: dict[tuple, str] | None = None) -> str:
        if not self.certificate:
            return ""
        names = names or {}
        return "+".join(names.get(c.coords, str(c)) for c in self.certificate) + "=0"


def _zero_sum_point(cones: Sequence[ConeSpec]) -> list[Character] | None:
    sizes = [len(c.generators) for c in cones]
    total = sum(sizes)
    dim = cones[0].dim
    cons: list[Constraint] = []
    offsets = list(itertools.accumulate([0] + sizes[:-1]))
    for cone, off in zip(cones, offsets):
        cons.extend(cone._coefficient_constraints(off, total))
    for i in range(dim):
        row = []
        for cone in cones:
            row.extend(g[i] for g in cone.generators)
        cons.append(Constraint(row, "==", 0))
    pt = feasible_point(cons, total)
    if pt is None:
        return None
    points = [cone.point(pt[off:off + len(cone.generators)]) for cone, off in zip(cones, offsets)]
    # one common positive scaling to primitive integers
    flat = _primitive([c for p in points for c in p.coords])
    return [Character(flat[i * dim:(i + 1) * dim]) for i in range(len(points))]


def plain_sum_check(chars: Sequence[Character], m: int) -> list[Character] | None:
    """Literal form of the tameness test: m representatives (repeats allowed)
    whose plain sum is zero, or None."""
    for combo in itertools.combinations_with_replacement(range(len(chars)), m):
        total = Character([0] * len(chars[0]))
        for i in combo:
            total = total + chars[i]
        if total.is_zero():
            return [chars[i] for i in combo]
    return None


def m_tame_check(family: ConeFamily, m: int) -> TameResult:
    """m-tameness of the union of the cones, by exact feasibility.

    For every multiset of m cones (lexicographic order) the system "pick x_i
    in cone i with sum x_i = 0" is solved; a solution is returned, scaled to
    primitive integers, as the certificate.  A zero positive combination of
    fewer points also shows up at size m, because a point of a cone splits
    into two points of the same cone.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    cones = list(family)
    result = TameResult(m=m, tame=True)
    reps = [c.generators[0] for c in cones if len(c.generators) == 1]
    if reps:
        result.plain_sum_certificate = plain_sum_check(reps, m)
    for combo in itertools.combinations_with_replacement(range(len(cones)), m):
        cert = _zero_sum_point([cones[i] for i in combo])
        if cert is not None:
            result.tame = False
            result.certificate = cert
            result.cone_indices = combo
            return result
    return result


def build_V(setup: Setup) -> list[tuple[Character, QMonomial]]:
    """[(w, q0^-1), (v_0, q0), ..., (v_n, qn)] for the designated block."""
    from .valuations import char_of_valuation, degree, fadic

    out = []
    qw = setup.generator(1).inverse()
    out.append((char_of_valuation(degree(), setup), qw))
    for i in range(setup.n + 1):
        out.append((char_of_valuation(fadic(i), setup), setup.generator(1 + i)))
    return out


def primitive_vectors(dim: int, radius: int) -> list[Character]:
    """One primitive integer representative per ray meeting the box [-radius, radius]^dim,
    ordered by max-norm, then 1-norm, then lexicographically."""
    out = []
    for v in itertools.product(range(-radius, radius + 1), repeat=dim):
        if any(v) and math.gcd(*v) == 1:
            out.append(v)
    out.sort(key=lambda v: (max(map(abs, v)), sum(map(abs, v)), v))
    return [Character(v) for v in out]
