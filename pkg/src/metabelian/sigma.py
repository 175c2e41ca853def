"""Evidence for Sigma-membership via the centralizer criterion.

A witness for [v] in Sigma_A is an integer combination lambda of monomials of
Q acting as the identity on A (its image in the ring is 1) with v(q) > 0 on
every monomial of its support.  Finding one proves membership; failing to
find one within the search bounds proves nothing.

The search enumerates linear relations among products of the block
polynomials.  A relation sum_j r_j P_j = 0 whose v-minimal term P_p is
unique and has a coefficient invertible in Z[1/k] rearranges to

    1 = sum_{j != p} (-r_j / r_p) P_j / P_p,

which is a witness once each term is written as (integer) * (monomial).
Relations are the circuits (minimal dependent sets) of the products of
bounded degree, computed once per setup and cached.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .charspace import (
    Character,
    ConeFamily,
    ConeSpec,
    LinearCondition,
    family_contains,
    primitive_vectors,
)
from .exactalg import LocalizedElement, QMonomial, Setup, monomial_image
from .polynomial import Poly, is_k_smooth

__all__ = [
    "SearchBounds",
    "Witness",
    "SigmaVerdict",
    "centralizer_witness_search",
    "relation_circuits",
    "sigma_c_theoremB_data",
    "verify_theoremB",
    "TheoremBReport",
    "SigmaAnomaly",
]


@dataclass(frozen=True)
class SearchBounds:
    support: int = 4
    exp_box: int = 6
    # total degree of the cleared-denominator products entering a relation
    max_degree: int = 3

    def to_json(self):
        return {"support": self.support, "exp_box": self.exp_box, "max_degree": self.max_degree}


@dataclass(frozen=True)
class Witness:
    """lambda = sum c * q over (c, q) in ``terms``."""

    terms: tuple[tuple[int, QMonomial], ...]

    @property
    def support(self) -> tuple[QMonomial, ...]:
        return tuple(q for _, q in self.terms)

    def image(self, setup: Setup) -> LocalizedElement:
        acc = setup.zero()
        for c, q in self.terms:
            acc = acc + monomial_image(q, setup) * c
        return acc

    def min_value(self, v: Character) -> Fraction:
        return min(v(q) for q in self.support)

    def check(self, setup: Setup, v: Character) -> bool:
        """Image exactly 1 and v strictly positive on the support."""
        return bool(self.terms) and self.image(setup) == setup.one() and self.min_value(v) > 0

    def __str__(self):
        parts = []
        for c, q in self.terms:
            mono = str(q)
            if mono == "1":
                parts.append(f"{c}")
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"coeff": c, "monomial": list(q.exps)} for c, q in self.terms]


@dataclass(frozen=True)
class SigmaVerdict:
    in_sigma: bool
    witness: Witness | None
    bounds: SearchBounds

    def __str__(self):
        if self.in_sigma:
            return f"InSigma(lambda = {self.witness})"
        return f"NoWitnessWithinBounds(support<={self.bounds.support}, box={self.bounds.exp_box})"


# ---------------------------------------------------------------- relations


def _products(setup: Setup, max_degree: int) -> list[tuple[tuple[int, ...], Poly]]:
    degs = setup.degrees
    out = []

    def rec(i, alpha, deg):
        if i == len(degs):
            out.append(tuple(alpha))
            return
        e = 0
        while deg + e * degs[i] <= max_degree:
            rec(i + 1, alpha + [e], deg + e * degs[i])
            e += 1

    rec(0, [], 0)
    out.sort(key=lambda a: (sum(x * d for x, d in zip(a, degs)), [-x for x in a]))
    polys = []
    for a in out:
        p = Poly((1,))
        for f, e in zip(setup.f, a):
            p = p * f ** e
        polys.append((a, p))
    return polys


def _kernel(cols: list[Poly]) -> list[list[Fraction]]:
    """Basis of {c : sum c_j cols_j = 0} over Q, by reduced row echelon form."""
    nrows = max(p.degree for p in cols) + 1
    m = [[Fraction(p[i]) for p in cols] for i in range(nrows)]
    ncols = len(cols)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -m[row][fc]
        basis.append(vec)
    return basis


@lru_cache(maxsize=32)
def relation_circuits(setup: Setup, max_terms: int, max_degree: int):
    """Circuits among the products prod f_i**a_i of degree <= max_degree.

    Each circuit is (alphas, coeffs): a minimal set of exponent vectors with
    primitive integer coefficients summing to zero.  Sets whose exponents
    share a common factor are skipped, being shifts of smaller relations.
    Ordered by number of terms, then total degree, then index.
    """
    prods = _products(setup, max_degree)
    degs = setup.degrees
    out = []
    for size in range(2, max_terms + 1):
        found = []
        for idx in itertools.combinations(range(len(prods)), size):
            alphas = [prods[i][0] for i in idx]
            if any(min(col) > 0 for col in zip(*alphas)):
                continue
            ker = _kernel([prods[i][1] for i in idx])
            if len(ker) != 1 or any(c == 0 for c in ker[0]):
                continue
            vec = ker[0]
            den = math.lcm(*(c.denominator for c in vec))
            ints = [int(c * den) for c in vec]
            g = math.gcd(*ints)
            ints = [c // g for c in ints]
            total = sum(sum(a * d for a, d in zip(al, degs)) for al in alphas)
            found.append((total, idx, tuple(alphas), tuple(ints)))
        found.sort(key=lambda t: (t[0], t[1]))
        out.extend((alphas, ints) for _, _, alphas, ints in found)
    return tuple(out)


@lru_cache(maxsize=32)
def _circuit_arrays(setup: Setup, max_terms: int, max_degree: int):
    # exponent vectors of every term on the basis (q_-1, q_{1,0..n}); k-power
    # of the coefficient goes into the q_-1 slot
    circuits = relation_circuits(setup, max_terms, max_degree)
    width = setup.n + 2
    E = np.zeros((len(circuits), max_terms, width), dtype=np.int64)
    mask = np.zeros((len(circuits), max_terms), dtype=bool)
    for ci, (alphas, coeffs) in enumerate(circuits):
        for j, (al, r) in enumerate(zip(alphas, coeffs)):
            t = 0
            while r % setup.k == 0:
                r //= setup.k
                t += 1
            E[ci, j, 0] = t
            E[ci, j, 1:] = al
            mask[ci, j] = True
    return circuits, E, mask


def _witness_from_circuit(setup: Setup, alphas, coeffs, pivot: int) -> Witness | None:
    rp = coeffs[pivot]
    if not is_k_smooth(rp, setup.k):
        return None
    terms = []
    for j, (al, r) in enumerate(zip(alphas, coeffs)):
        if j == pivot:
            continue
        c = Fraction(-r, rp)
        # c = u * k**t with u an integer not divisible by k
        t = 0
        while c.denominator != 1:
            c *= setup.k
            t -= 1
        num = c.numerator
        while num % setup.k == 0:
            num //= setup.k
            t += 1
        exps = [t] + [a - b for a, b in zip(al, alphas[pivot])]
        exps += [0] * (setup.rank - len(exps))
        terms.append((num, QMonomial(tuple(exps))))
    return Witness(tuple(terms))


def centralizer_witness_search(setup: Setup, v: Character, support_bound: int = 4,
                               exp_box: int = 6, max_degree: int = 3) -> SigmaVerdict:
    """Search for lambda with image 1 and v > 0 on its support.

    Order: single-term witnesses k**e q_{-1}**-e first, then relation
    circuits in their fixed order, pivots in term order.  The first hit is
    returned, so the result is deterministic.
    """
    if v.is_zero():
        raise ValueError("zero vector is not a character")
    if len(v) != setup.rank:
        raise ValueError(f"character has length {len(v)}, Q has rank {setup.rank}")
    bounds = SearchBounds(support_bound, exp_box, max_degree)
    if support_bound < 1:
        return SigmaVerdict(False, None, bounds)

    for e in range(1, exp_box + 1):
        q = setup.generator(0) ** (-e)
        if v(q) > 0:
            w = Witness(((setup.k ** e, q),))
            return SigmaVerdict(True, w, bounds)

    circuits, E, mask = _circuit_arrays(setup, support_bound + 1, max_degree)
    if not circuits:
        return SigmaVerdict(False, None, bounds)
    den = math.lcm(*(c.denominator for c in v.coords[:setup.n + 2]))
    vi = np.array([int(c * den) for c in v.coords[:setup.n + 2]], dtype=np.int64)
    vals = E @ vi
    big = np.iinfo(np.int64).max
    vals = np.where(mask, vals, big)
    mins = vals.min(axis=1)
    unique = (vals == mins[:, None]).sum(axis=1) == 1
    for ci in np.nonzero(unique)[0]:
        alphas, coeffs = circuits[ci]
        pivot = int(np.argmin(vals[ci]))
        w = _witness_from_circuit(setup, alphas, coeffs, pivot)
        if w is None:
            continue
        if any(abs(e) > exp_box for q in w.support for e in q.exps):
            continue
        if len(w.terms) > support_bound or w.min_value(v) <= 0:
            continue
        if w.image(setup) != setup.one():
            raise AssertionError(f"relation-derived witness {w} does not evaluate to 1")
        return SigmaVerdict(True, w, bounds)
    return SigmaVerdict(False, None, bounds)


# ---------------------------------------------------------------- Sigma^c for n = 2


def sigma_c_theoremB_data(n: int) -> ConeFamily:
    """The complement of Sigma for A_n as a cone family, on the basis
    (q_-1, q_0, ..., q_n).  Only n = 2 is available."""
    if n != 2:
        raise ValueError(f"Sigma^c data is available for n in [2] only, got n={n}")
    dim = n + 2

    def e(i):
        c = [0] * dim
        c[i + 1] = 1
        return Character(c)

    vm1, v0, v1, v2 = e(-1), e(0), e(1), e(2)
    w = -(v0 + v1 + v2)
    pos = LinearCondition
    cones = [
        ConeSpec.isolated(vm1, "[v-1]"),
        ConeSpec.isolated(v0, "[v0]"),
        ConeSpec.isolated(v1, "[v1]"),
        ConeSpec.isolated(v2, "[v2]"),
        ConeSpec.isolated(w, "[w]"),
        ConeSpec((vm1, v1), (pos((1, 0), True), pos((0, 1), True)), "k-1*v-1 + k1*v1 (k-1,k1>0)"),
        ConeSpec((vm1 + v0, v2), (pos((1, 0), True), pos((-1, 1), False)),
                 "k-1*(v-1+v0) + k2*v2 (k2>=k-1>0)"),
        ConeSpec((vm1 + v2, v0), (pos((1, 0), True), pos((-1, 1), False)),
                 "k-1*(v-1+v2) + k0*v0 (k0>=k-1>0)"),
        ConeSpec((vm1, v0 + v2), (pos((0, 1), True), pos((1, -1), False)),
                 "k-1*v-1 + k0*(v0+v2) (k-1>=k0>0)"),
        ConeSpec((vm1, w), (pos((1, 0), True), pos((0, 1), True)), "k-1*v-1 + k*w (k-1,k>0)"),
    ]
    return ConeFamily(cones)


@dataclass
class SigmaAnomaly:
    character: Character
    kind: str  # "witness-inside-family" (hard) | "no-witness-outside-family"
    detail: str

    @property
    def hard(self) -> bool:
        return self.kind == "witness-inside-family"


@dataclass
class TheoremBReport:
    rows: list[tuple[Character, ConeSpec | None, SigmaVerdict]] = field(default_factory=list)
    anomalies: list[SigmaAnomaly] = field(default_factory=list)

    @property
    def inside(self):
        return [r for r in self.rows if r[1] is not None]

    @property
    def outside(self):
        return [r for r in self.rows if r[1] is None]

    @property
    def consistent(self) -> bool:
        return not any(a.hard for a in self.anomalies)


def _is_g2(setup: Setup) -> bool:
    return setup.l == 1 and setup.k == 2 and setup.f == tuple(Poly((j, 1)) for j in range(3))


def grid_classes(dim: int, grid_resolution: int, max_classes: int | None) -> list[Character]:
    classes = primitive_vectors(dim, grid_resolution)
    return classes if max_classes is None else classes[:max_classes]


def verify_theoremB(setup: Setup, grid_resolution: int = 2, search_bounds: SearchBounds | None = None,
                    max_classes: int | None = 200) -> TheoremBReport:
    """Compare the witness search with the cone description of Sigma^c on a grid.

    Grid classes are the primitive integer vectors of the box
    [-grid_resolution, grid_resolution]^4, coarsest first, truncated to
    ``max_classes``.
    """
    if not _is_g2(setup):
        raise ValueError("this verification needs the G_2 setup (k=2, f = x, x+1, x+2)")
    bounds = search_bounds or SearchBounds()
    family = sigma_c_theoremB_data(2)
    report = TheoremBReport()
    for v in grid_classes(setup.rank, grid_resolution, max_classes):
        cone = family_contains(family, v)
        verdict = centralizer_witness_search(setup, v, bounds.support, bounds.exp_box, bounds.max_degree)
        report.rows.append((v, cone, verdict))
        if verdict.in_sigma and not verdict.witness.check(setup, v):
            raise AssertionError(f"invalid witness {verdict.witness} for {v}")
        if cone is not None and verdict.in_sigma:
            report.anomalies.append(SigmaAnomaly(
                v, "witness-inside-family", f"{verdict.witness} certifies a class listed in cone {cone}"))
        elif cone is None and not verdict.in_sigma:
            report.anomalies.append(SigmaAnomaly(
                v, "no-witness-outside-family", "no centralizer witness within bounds"))
    return report
