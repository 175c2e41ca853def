import pytest

from metabelian import Character, centralizer_witness_search, g_n_setup, sigma_c_theoremB_data, verify_theoremB
from metabelian.charspace import family_contains
from metabelian.sigma import relation_circuits


def test_k_direction_witness(g2):
    verdict = centralizer_witness_search(g2, Character((-1, 0, 0, 0)))
    assert verdict.in_sigma
    ((c, q),) = verdict.witness.terms
    assert c == g2.k and q == g2.generator(0).inverse()


def test_relation_witness(g2):
    v = Character((0, 1, -1, 0))
    verdict = centralizer_witness_search(g2, v)
    assert verdict.in_sigma
    w = verdict.witness
    assert w.check(g2, v)
    assert {q.exps for q in w.support} == {(0, 0, -1, 0), (0, 1, -1, 0)}


@pytest.mark.parametrize("coords", [(0, 0, 1, 0), (0, -1, -1, -1), (1, 0, 0, 0), (1, 1, 0, 1)])
def test_no_witness_inside_family(g2, coords):
    verdict = centralizer_witness_search(g2, Character(coords))
    assert not verdict.in_sigma
    assert "NoWitnessWithinBounds" in str(verdict)


def test_zero_character_rejected(g2):
    with pytest.raises(ValueError):
        centralizer_witness_search(g2, Character((0, 0, 0, 0)))


def test_deterministic(g2):
    v = Character((1, -2, 1, 1))
    a = centralizer_witness_search(g2, v)
    b = centralizer_witness_search(g2, v)
    assert a == b


def test_bounds_are_respected(g2):
    v = Character((0, 1, -1, 0))
    assert not centralizer_witness_search(g2, v, support_bound=1).in_sigma
    verdict = centralizer_witness_search(g2, Character((-1, 0, 0, 0)), exp_box=0)
    assert not verdict.in_sigma or all(abs(e) == 0 for q in verdict.witness.support for e in q.exps)


def test_circuits_are_relations(g2):
    circuits = relation_circuits(g2, 3, 2)
    assert circuits
    from metabelian.polynomial import Poly

    for alphas, coeffs in circuits[:200]:
        total = Poly()
        for alpha, c in zip(alphas, coeffs):
            p = Poly((c,))
            for f, e in zip(g2.f, alpha):
                p = p * f ** e
            total = total + p
        assert total.is_zero()


def test_family_data():
    fam = sigma_c_theoremB_data(2)
    assert family_contains(fam, Character((1, 0, 0, 0)))
    assert family_contains(fam, Character((3, 0, 2, 0)))
    assert family_contains(fam, Character((1, 1, 0, 2)))
    assert not family_contains(fam, Character((0, 1, 1, 0)))
    assert not family_contains(fam, Character((2, 2, 0, 1)))
    with pytest.raises(ValueError, match=r"\[2\]"):
        sigma_c_theoremB_data(3)


def test_verify_small_grid(g2):
    report = verify_theoremB(g2, grid_resolution=1, max_classes=None)
    assert len(report.rows) == 80
    assert not report.anomalies
    for v, cone, verdict in report.rows:
        if verdict.in_sigma:
            assert verdict.witness.check(g2, v)


def test_verify_needs_g2():
    with pytest.raises(ValueError):
        verify_theoremB(g_n_setup(3))


def test_witnesses_on_g3():
    s = g_n_setup(3)
    verdict = centralizer_witness_search(s, Character((-1, 0, 0, 0, 0)))
    assert verdict.in_sigma and verdict.witness.terms[0][0] == 6
    v = Character((0, 1, -1, 0, 0))
    verdict = centralizer_witness_search(s, v, max_degree=2)
    assert verdict.in_sigma and verdict.witness.check(s, v)
