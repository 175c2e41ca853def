"""Character trees, the lattice [[W]], CRT normalization and vertex stabilizers.

Vertices of the tree of a character v are cosets G(v) q_v^z a, stored as a
height z and a label a in A.  Two of them coincide exactly when the heights
agree and v(a - b) >= z + beta; no canonical residue is chosen.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .charspace import Character, build_V, halfspace_test
from .exactalg import (
    GroupElement,
    LocalizedElement,
    QMonomial,
    Setup,
    loc_normalize,
    module_action,
)
from .polynomial import Poly, is_k_smooth, poly_xgcd
from .valuations import INF, ValuationId, degree, fadic, val_eval

__all__ = [
    "compute_beta",
    "TreeContext",
    "tree_context",
    "TreeVertex",
    "av_membership",
    "line_intersection_sup",
    "act_on_vertex",
    "TreeGraph",
    "tree_ball",
    "w_project_ceil",
    "orbit_reps",
    "reduce_to_rep",
    "translate",
    "CRTResult",
    "crt_normalize",
    "crt_check",
    "stabilizer_membership",
    "StabilizerData",
    "stabilizer_data",
    "connectivity_precondition",
]


def compute_beta(setup: Setup) -> int:
    """beta = -(2 + sum of the degrees of the designated block)."""
    return -(2 + sum(setup.degrees))


@dataclass(frozen=True)
class TreeContext:
    setup: Setup
    v: ValuationId
    character: Character
    q_v: QMonomial
    beta: int

    def __post_init__(self):
        if self.character(self.q_v) != 1:
            raise ValueError(f"v(q_v) = {self.character(self.q_v)}, expected 1")

    def val(self, e) -> object:
        """v on an element, or the minimum over the coordinates of a tuple."""
        if isinstance(e, LocalizedElement):
            return val_eval(self.v, e)
        return min((val_eval(self.v, c) for c in e), default=INF)


def tree_context(setup: Setup, which) -> TreeContext:
    """Context for ``"w"`` or the index i of v_i (also accepts a ValuationId)."""
    V = build_V(setup)
    if isinstance(which, ValuationId):
        which = "w" if which.kind == "degree" else which.index
    if which == "w":
        ch, q = V[0]
        vid = degree()
    else:
        i = int(which)
        if not 0 <= i <= setup.n:
            raise ValueError(f"no valuation v{i}")
        ch, q = V[1 + i]
        vid = fadic(i)
    return TreeContext(setup, vid, ch, q, compute_beta(setup))


def av_membership(ctx: TreeContext, e, c: int) -> bool:
    """Whether e lies in A_v o q_v^c, i.e. v(e) >= c."""
    return ctx.val(e) >= c


def _diff(a, b):
    if isinstance(a, LocalizedElement):
        return a - b
    return tuple(x - y for x, y in zip(a, b))


def line_intersection_sup(ctx: TreeContext, a, b):
    """z0 with the lines of a and b meeting exactly at heights <= z0 (INF if a = b)."""
    d = ctx.val(_diff(a, b))
    return INF if d is INF else d - ctx.beta


@dataclass(frozen=True, eq=False)
class TreeVertex:
    ctx: TreeContext
    z: int
    label: LocalizedElement

    def __eq__(self, other):
        if not isinstance(other, TreeVertex):
            return NotImplemented
        return self.z == other.z and self.ctx.val(_diff(self.label, other.label)) >= self.z + self.ctx.beta

    def __hash__(self):
        return hash(self.z)

    def __repr__(self):
        return f"TreeVertex(z={self.z}, label={self.label})"


def act_on_vertex(vert: TreeVertex, g: GroupElement) -> TreeVertex:
    """Right action (z, a) * (b, q) = (z + v(q), a o q + b).

    Matches the composition (a,q)(b,p) = (a o p + b, qp), so
    (vert * g) * h == vert * (g h).
    """
    ctx = vert.ctx
    dz = ctx.character(g.q)
    if dz.denominator != 1:
        raise ValueError("non-integral character value")
    return TreeVertex(ctx, vert.z + int(dz), module_action(vert.label, g.q) + g.a)


@dataclass
class TreeGraph:
    vertices: list[tuple[int, LocalizedElement]]
    edges: list[tuple[int, int]]
    window: tuple[int, int] | None = None  # heights actually covered

    def is_tree(self) -> bool:
        n = len(self.vertices)
        if n == 0:
            return True
        if len(self.edges) != n - 1:
            return False
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def tree_ball(ctx: TreeContext, seeds: Sequence[LocalizedElement], window: tuple[int, int],
              connect: bool = True) -> TreeGraph:
    """Union of the seed lines over heights z_lo..z_hi, merged where they meet.

    Two lines may only meet below z_lo, in which case the window alone gives
    a forest.  With ``connect`` the window is lowered to the height where all
    seed lines have merged, so the result is always a tree; the heights used
    are reported in ``window``.
    """
    z_lo, z_hi = window
    if z_lo > z_hi or not seeds:
        return TreeGraph([], [], None)
    seeds = list(seeds)
    if connect and len(seeds) > 1:
        meet = min(line_intersection_sup(ctx, a, b) for a, b in itertools.combinations(seeds, 2))
        if meet is not INF and meet < z_lo:
            z_lo = meet
    zs = range(z_lo, z_hi + 1)
    nodes = [(z, s) for s in range(len(seeds)) for z in zs]
    index = {node: i for i, node in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s, t in itertools.combinations(range(len(seeds)), 2):
        z0 = line_intersection_sup(ctx, seeds[s], seeds[t])
        for z in zs:
            if z <= z0:
                parent[find(index[(z, s)])] = find(index[(z, t)])
    roots = {}
    vertices = []
    for (z, s), i in index.items():
        r = find(i)
        if r not in roots:
            roots[r] = len(vertices)
            vertices.append((z, seeds[s]))
    edges = set()
    for s in range(len(seeds)):
        for z in range(z_lo, z_hi):
            a = roots[find(index[(z, s)])]
            b = roots[find(index[(z + 1, s)])]
            edges.add((min(a, b), max(a, b)))
    return TreeGraph(vertices, sorted(edges), (z_lo, z_hi))


# ---------------------------------------------------------------- [[W]]


def _weights(setup: Setup) -> list[int]:
    # the linear form y_w + sum d_i y_{v_i}
    return [1] + list(setup.degrees)


def w_project_ceil(point: Sequence, setup: Setup) -> tuple[bool, tuple[int, ...], int]:
    """(point in W, coordinate-wise ceiling, s_w + sum d_i s_{v_i} at the ceiling)."""
    pt = [Fraction(c) for c in point]
    wts = _weights(setup)
    if len(pt) != len(wts):
        raise ValueError(f"point has {len(pt)} coordinates, V has {len(wts)} characters")
    in_w = sum(a * c for a, c in zip(wts, pt)) == 0
    ceil = tuple(math.ceil(c) for c in pt)
    bound = sum(a * c for a, c in zip(wts, ceil))
    return in_w, ceil, bound


def translate(point: Sequence[int], q: QMonomial, setup: Setup) -> tuple:
    """The action of q on [[W]]: add (w(q), v_0(q), ..., v_n(q))."""
    shift = [c(q) for c, _ in build_V(setup)]
    return tuple(p + int(s) for p, s in zip(point, shift))


def orbit_reps(setup: Setup) -> list[tuple[int, ...]]:
    """Representatives (s_w, 0, ..., 0), 0 <= s_w < 1 + sum d_i, of Q\\[[W]]."""
    return [(s,) + (0,) * (setup.n + 1) for s in range(1 + sum(setup.degrees))]


def reduce_to_rep(point: Sequence[int], setup: Setup) -> tuple[tuple[int, ...], QMonomial]:
    """(representative, q) with point translated by q equal to the representative."""
    exps = [0] * setup.rank
    for i, s in enumerate(point[1:]):
        exps[1 + i] = -s
    q = QMonomial(tuple(exps))
    return translate(point, q, setup), q


# ---------------------------------------------------------------- CRT


@dataclass
class CRTResult:
    a: LocalizedElement
    a_prime: Poly           # numerator in the normalized frame, deg < deg F^t
    t: int
    F_t: Poly
    q: QMonomial            # Q-translation to the normalized frame
    shift: LocalizedElement  # a_w after that translation
    heights: tuple[int, ...]  # normalized heights (s_w, 0, ..., 0)


def _as_poly(e: LocalizedElement) -> Poly:
    """e as a polynomial over Q; e must have no negative f-exponents."""
    p = e.numer
    for f, x in zip(e.setup.f, e.exp):
        if x < 0:
            raise ArithmeticError(f"{e} is not a polynomial")
        p = p * f ** x
    return p.scale(Fraction(e.setup.k) ** e.kexp)


def _from_poly(p: Poly, exps, setup: Setup) -> LocalizedElement:
    den = p.denominator()
    if not is_k_smooth(den, setup.k):
        raise ArithmeticError(f"CRT solution has denominator {den}, not a unit in Z[1/{setup.k}]")
    return loc_normalize(p, exps, 0, setup)


def crt_normalize(setup: Setup, labels: Sequence[LocalizedElement], heights: Sequence[int]) -> CRTResult:
    """Find a with [(a_v, s_v)] = [(a, s_v)] for every v in V = (w, v_0, ..., v_n).

    ``labels`` and ``heights`` follow the order of V.  The heights are moved
    by Q to (s_w, 0, ..., 0) and the labels by A so that a_w = 0; there the
    Chinese remainder solution a' is found, and a = a' F^-t is mapped back to
    the original frame.  In the normalized frame a satisfies the stronger
    conditions v_i(a - a_{v_i}) >= 0 and w(a - a_w) > 0.
    """
    n = setup.n
    if len(labels) != n + 2 or len(heights) != n + 2:
        raise ValueError(f"expected {n + 2} labels and heights")
    beta = compute_beta(setup)
    rep, q = reduce_to_rep(heights, setup)
    if not 0 <= rep[0] < -beta:
        raise ValueError(f"heights {tuple(heights)} are not in [[W]] (normalized s_w = {rep[0]})")
    moved = [module_action(a, q) for a in labels]
    shift = moved[0]
    targets = [a - shift for a in moved[1:]]

    fs = setup.f
    F = Poly((1,))
    for f in fs:
        F = F * f
    t = max([0] + [-e for a in targets if not a.is_zero() for e in a.exp])
    Ft = F ** t
    a_prime = Poly()
    if t:
        lift = setup.element(1, [t] * (n + 1))
        for f, a in zip(fs, targets):
            if a.is_zero():
                continue
            fit = f ** t
            cofactor = Ft // fit
            g, s, _ = poly_xgcd(cofactor, fit)
            if g != Poly((1,)):
                raise ArithmeticError(f"{f} is not coprime to the other factors")
            # cofactor * s is 1 mod f^t and 0 mod the other factors
            a_prime = a_prime + _as_poly(a * lift) * s * cofactor
        a_prime = a_prime % Ft
    a_norm = _from_poly(a_prime, [-t] * (n + 1), setup)
    a = module_action(a_norm + shift, q.inverse())
    return CRTResult(a, a_prime, t, Ft, q, shift, rep)


def crt_check(setup: Setup, labels, heights, result: CRTResult) -> bool:
    """Coset equality v(a - a_v) >= s_v + beta for every v, plus deg a' < deg F^t."""
    beta = compute_beta(setup)
    vals = [degree()] + [fadic(i) for i in range(setup.n + 1)]
    ok = all(val_eval(v, result.a - a_v) >= s + beta for v, a_v, s in zip(vals, labels, heights))
    return ok and (result.t == 0 or result.a_prime.degree < result.F_t.degree)


# ---------------------------------------------------------------- stabilizers


@dataclass
class StabilizerData:
    s_w: int
    d: int
    rank: int
    basis: list[LocalizedElement]
    hnn: dict | None = None


def stabilizer_data(setup: Setup, s_w: int) -> StabilizerData:
    """Module part of the stabilizer of (G(w) q_w^s_w, G(v_0), ..., G(v_n))."""
    beta = compute_beta(setup)
    if not 0 <= s_w < -beta:
        raise ValueError(f"s_w must satisfy 0 <= s_w < {-beta}, got {s_w}")
    d = -(s_w + beta * sum(setup.degrees))
    n = setup.n
    # q0^(j+beta) (f_1 ... f_n)^beta
    basis = [setup.element(1, [j + beta] + [beta] * n) for j in range(d + 1)]
    hnn = None
    if setup.l == 1:
        hnn = {
            "generators": [f"x{i}" for i in range(d + 1)] + ["t"],
            "relations": [f"t^-1 x{i} t = x{i}^{setup.k}" for i in range(d + 1)],
            "relation_exponent": setup.k,
        }
    return StabilizerData(s_w, d, d + 1, basis, hnn)


def stabilizer_membership(setup: Setup, s_w: int, e: LocalizedElement) -> bool:
    """e in A_w o q_w^(s_w+beta) and in A_{v_i} o q_{v_i}^beta for every i."""
    beta = compute_beta(setup)
    if val_eval(degree(), e) < s_w + beta:
        return False
    return all(val_eval(fadic(i), e) >= beta for i in range(setup.n + 1))


def connectivity_precondition(setup: Setup, m: int) -> tuple[bool, list[Character] | None]:
    """Every m-subset of V in an open halfspace; the first failing subset otherwise."""
    chars = [c for c, _ in build_V(setup)]
    for subset in itertools.combinations(chars, m):
        ok, _ = halfspace_test(subset)
        if not ok:
            return False, list(subset)
    return True, None
