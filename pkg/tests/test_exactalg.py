import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from metabelian import (
    GroupElement,
    InvalidSetup,
    QMonomial,
    g_n_setup,
    loc_arith,
    loc_normalize,
    module_action,
    monomial_image,
    setup_validate,
)
from metabelian.exactalg import SetupMismatch, check_setup
from metabelian.polynomial import Poly

from conftest import random_element


def codes(raw):
    return {v.code for v in check_setup(raw)[0]}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_g_n_validates(n):
    s = g_n_setup(n)
    assert s.k == [2, 6, 24][n - 2]
    assert s.degrees == (1,) * (n + 1)


def test_rejections():
    assert codes({"k": 3, "blocks": [[[0, 1], [2, 1]]]}) == {"coprime"}
    assert codes({"k": 2, "blocks": [[[0, 1], [1, 2]]]}) == {"monic"}
    assert "first" in codes({"k": 2, "blocks": [[[1, 1], [1, 0, 1]]]})
    assert codes({"k": 1, "blocks": [[[0, 1]]]}) == {"k"}
    assert codes({"k": 2, "blocks": [[[0, 1], [-1, 0, 1]]]}) == {"irreducible"}
    assert codes({"k": 2, "blocks": [[[0, 1], [5]]]}) == {"constant"}


def test_violation_names_the_pair():
    with pytest.raises(InvalidSetup) as info:
        setup_validate({"k": 3, "blocks": [[[0, 1], [2, 1]]]})
    (v,) = info.value.violations
    assert v.where == (1, 0, 1)
    assert "Res" in v.message and "2" in v.message


def test_high_degree_needs_assertion():
    quartic = [1, 0, 0, 0, 1]  # x^4 + 1; Res(x, x^4+1) = 1
    assert codes({"k": 2, "blocks": [[[0, 1], quartic]]}) == {"irreducible"}
    s = setup_validate({"k": 2, "blocks": [{"polys": [[0, 1], quartic], "assert_irreducible": True}]})
    assert s.notes and "asserted" in s.notes[0]


def test_all_violations_reported():
    vs, _ = check_setup({"k": 3, "blocks": [[[1, 1], [0, 2], [2, 1]]]})
    assert {"first", "monic"} <= {v.code for v in vs}


def test_setup_derived_fields(g2):
    assert g2.beta == -5
    assert g2.rank == 4
    assert g2.m == 3 and g2.l == 1
    two = setup_validate({"k": 2, "blocks": [[[0, 1], [1, 1]], [[0, 1]]]})
    assert two.rank == 4 and two.m == 1 and two.l == 2


def test_normalize_examples(g2):
    e = loc_normalize(Poly.parse("x^2+x"), [-1, 0, 0], 0, g2)
    assert (e.numer, e.exp, e.kexp) == (Poly((1,)), (0, 1, 0), 0)
    six = g2.element(6)
    assert (six.numer, six.kexp) == (Poly((3,)), 1)
    z = g2.element(0, [3, 1, 2], 5)
    assert z == g2.zero() and z.exp == (0, 0, 0) and z.kexp == 0


def test_composite_k_content():
    s = g_n_setup(3)  # k = 6
    two = s.element(2)
    assert (two.numer, two.kexp) == (Poly((2,)), 0)
    assert s.element(36) == s.element(1, kexp=2)
    # 1/2 = 3/6 is a unit
    half = s.element(Poly([Fraction(1, 2)]))
    assert (half.numer, half.kexp) == (Poly((3,)), -1)
    assert half * 2 == s.one()


def test_arith_examples(g2):
    inv_x = g2.element(1, [-1, 0, 0])
    inv_x1 = g2.element(1, [0, -1, 0])
    assert inv_x + inv_x1 == g2.element("2x+1", [-1, -1, 0])
    assert g2.x() * inv_x == g2.one()
    assert g2.element(1, kexp=-1) * 2 == g2.one()


def test_normalize_idempotent(g2):
    rng = random.Random(1)
    for _ in range(300):
        e = random_element(g2, rng)
        again = loc_normalize(e.numer, e.exp, e.kexp, g2)
        assert (again.numer, again.exp, again.kexp) == (e.numer, e.exp, e.kexp)


@pytest.mark.parametrize("n", [2, 3])
def test_ring_axioms(n):
    s = g_n_setup(n)
    rng = random.Random(100 + n)
    for _ in range(1000 if n == 2 else 200):
        a, b, c = (random_element(s, rng, max_deg=2) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == s.zero()


def test_setup_mismatch(g2):
    other = g_n_setup(3)
    with pytest.raises(SetupMismatch):
        loc_arith("add", g2.one(), other.one())


def test_units(g2):
    u = g2.element(1, [2, -1, 3], -2)
    assert u * u.unit_inverse() == g2.one()
    assert u ** -2 * u ** 2 == g2.one()
    with pytest.raises(ValueError):
        g2.element("x^2+1").unit_inverse()


def test_monomial_image(g2):
    assert monomial_image(g2.generator(0), g2) == g2.element(2)
    q = QMonomial((0, -1, 1, 0))
    assert monomial_image(q, g2) == g2.element("x+1", [-1, 0, 0])
    assert monomial_image(g2.identity(), g2) == g2.one()


@given(st.lists(st.integers(-4, 4), min_size=8, max_size=8))
@settings(max_examples=200, deadline=None)
def test_monomial_image_multiplicative(exps):
    s = g_n_setup(2)
    q, p = QMonomial(tuple(exps[:4])), QMonomial(tuple(exps[4:]))
    assert monomial_image(q * p, s) == monomial_image(q, s) * monomial_image(p, s)


def test_module_action(g2):
    a = g2.element("x^2+3")
    assert module_action(a, g2.generator(1)) == g2.x() * a
    assert module_action(a, g2.generator(0)) == a * 2
    assert module_action(g2.one(), g2.generator(2).inverse()) == g2.element(1, [0, -1, 0])


def test_tau_injective(g2):
    seen = {}
    for exps in itertools.product(range(-3, 4), repeat=4):
        img = monomial_image(QMonomial(exps), g2)
        key = (img.numer, img.exp, img.kexp)
        assert key not in seen
        seen[key] = exps
    assert len(seen) == 7 ** 4


def test_group_law(g2):
    rng = random.Random(7)

    def rand_g():
        q = QMonomial(tuple(rng.randint(-2, 2) for _ in range(4)))
        return GroupElement(random_element(g2, rng, max_deg=2), q)

    e = GroupElement.identity(g2)
    for _ in range(100):
        a, b, c = rand_g(), rand_g(), rand_g()
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == e and a.inverse() * a == e
        assert a * e == a
