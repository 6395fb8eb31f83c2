"""The coefficient algebra: generators, signs, structure maps, enumeration."""

import itertools
import random

import pytest

from fmk.algebra import (
    AlgebraElement,
    GENERATOR_DEGREES,
    GENERATOR_NAMES,
    Monomial,
    alpha_s,
    alpha_s_v,
    enumerate_monomials,
    nu_s,
    theta,
    theta_s,
    xi_s,
)
from fmk.degrees import TriDegree, parity
from fmk.sampling import random_element, random_homogeneous_element, random_monomial
from fmk.scalars import QQ, PrimeField

F = QQ


def g(name):
    return AlgebraElement.generator(name, F)


def test_generator_degrees():
    degrees = dict(zip(GENERATOR_NAMES, GENERATOR_DEGREES))
    assert degrees["x1"] == TriDegree(0, 2, 0)
    assert degrees["y2"] == TriDegree(2, -2, 0)
    assert degrees["nu1"] == TriDegree(-1, 2, 0)
    assert degrees["xi2"] == TriDegree(0, 0, 1)
    # odd exactly when self-pairing is 1
    odd = [n for n, d in degrees.items() if parity(d, d)]
    assert odd == ["nu1", "nu2", "xi1", "xi2"]


def test_parity_form_symmetric_bilinear():
    rng = random.Random(1)
    degs = [random_monomial(rng).degree for _ in range(12)]
    for a, b, c in itertools.combinations(degs, 3):
        assert parity(a, b) == parity(b, a)
        assert parity(a + b, c) == (parity(a, c) + parity(b, c)) % 2


def test_nu_generators_anticommute():
    assert g("nu2") * g("nu1") == -(g("nu1") * g("nu2"))
    assert (g("nu1") * g("nu1")).is_zero()


def test_nu_and_xi_commute():
    # the two exterior families carry independent parities
    assert g("xi1") * g("nu1") == g("nu1") * g("xi1")


def test_quadratic_identity():
    lhs = nu_s(F) * (g("nu2") * g("y1") + g("nu1") * g("y2"))
    rhs = (g("y1") + g("y2")) * g("nu1") * g("nu2")
    assert lhs == rhs


def test_kappa_on_generators():
    assert g("nu1").kappa() == g("x1")
    assert g("nu2").kappa() == g("x2")
    assert (g("x1") * g("y2")).kappa().is_zero()
    assert g("xi1").kappa().is_zero()


def test_kappa_leibniz_on_nu_pair():
    assert (g("nu1") * g("nu2")).kappa() == g("x1") * g("nu2") - g("x2") * g("nu1")


def test_kappa_raises_degree():
    el = g("nu1") * g("y2") * g("xi1")
    assert el.kappa().degree() == el.degree() + TriDegree(1, 0, 0)


def test_s_action_swaps_indices():
    assert g("x1").s_action() == g("x2")
    assert alpha_s(F).s_action() == -alpha_s(F)
    assert xi_s(F).s_action() == -xi_s(F)
    # theta is fixed by the full involution; theta_s is its index-twisted
    # companion, not the image of theta under s
    assert theta(F).s_action() == theta(F)
    assert theta_s(F) == g("nu2") * g("y1") + g("nu1") * g("y2")


def test_theta_identities_exact():
    th, ths = theta(F), theta_s(F)
    assert th - ths == nu_s(F) * alpha_s_v(F)
    quad = (g("y1") + g("y2")) * g("nu1") * g("nu2")
    assert quad == nu_s(F) * ths == nu_s(F) * th
    assert quad == -(ths * nu_s(F)) == -(th * nu_s(F))
    assert (th * th).is_zero() and (ths * ths).is_zero()
    assert th.kappa() == g("x1") * g("y1") + g("x2") * g("y2")


def test_demazure():
    x1, x2 = g("x1"), g("x2")
    one = AlgebraElement.one(F)
    assert x1.demazure() == one
    assert (x1 * x2).demazure().is_zero()
    assert (x1 * x1).demazure() == x1 + x2
    assert (x1 * x1 * x2).demazure() == x1 * x2


def test_demazure_rejects_non_polynomial():
    with pytest.raises(ValueError):
        g("nu1").demazure()
    with pytest.raises(ValueError):
        g("y1").demazure()


def test_alpha_pairing():
    assert g("xi1").alpha_pairing() == F.one
    assert xi_s(F).alpha_pairing() == F.from_int(2)
    assert (g("xi1") + g("xi2")).alpha_pairing() == F.zero
    with pytest.raises(ValueError):
        (g("xi1") * g("xi2")).alpha_pairing()
    with pytest.raises(ValueError):
        g("x1").alpha_pairing()


def test_enumerate_monomials_examples():
    assert enumerate_monomials(TriDegree(-4, 4, 1)) == []
    assert enumerate_monomials(TriDegree(0, 0, 0)) == [Monomial((0,) * 8)]
    found = {str(m) for m in enumerate_monomials(TriDegree(-1, 2, 0))}
    assert found == {"nu1", "nu2"}


def test_enumerate_respects_allowed_subset():
    found = enumerate_monomials(TriDegree(0, 2, 0), allowed=("x1", "xi1"))
    assert [str(m) for m in found] == ["x1"]


def _brute_force(degree):
    out = set()
    for a1 in range(11):
        for a2 in range(11):
            for b1 in range(5):
                for b2 in range(5):
                    for bits in itertools.product((0, 1), repeat=4):
                        mono = Monomial((a1, a2, b1, b2) + bits)
                        if mono.degree == TriDegree(*degree):
                            out.add(mono)
    return out


@pytest.mark.parametrize(
    "degree",
    [(-1, 2, 0), (2, 0, 0), (0, 4, 1), (1, -2, 1), (-2, 4, 2), (4, -4, 0), (0, 0, 2), (3, 0, 1)],
)
def test_enumerate_against_brute_force(degree):
    got = enumerate_monomials(TriDegree(*degree))
    assert len(set(got)) == len(got)
    assert set(got) == _brute_force(degree)
    for mono in got:
        assert mono.degree == TriDegree(*degree)


def test_sampled_laws():
    rng = random.Random(0)
    for _ in range(200):
        a = random_element(rng, F)
        b = random_element(rng, F)
        c = random_element(rng, F)
        assert a.kappa().kappa().is_zero()
        assert a.s_action().s_action() == a
        assert a.kappa().s_action() == a.s_action().kappa()
        assert (a * b).s_action() == a.s_action() * b.s_action()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        hom = random_homogeneous_element(rng, F)
        sign = -1 if hom.degree().i % 2 else 1
        assert (hom * b).kappa() == hom.kappa() * b + (hom * b.kappa()).scale(sign)
        m = AlgebraElement.from_monomial(random_monomial(rng), 1, F)
        n = AlgebraElement.from_monomial(random_monomial(rng), 1, F)
        p = parity(m.degree(), n.degree())
        assert m * n == (n * m).scale(-1 if p else 1)


def test_homogeneous_components():
    el = g("x1") + g("nu1") * g("y1")
    comps = el.homogeneous_components()
    assert set(comps) == {TriDegree(0, 2, 0), TriDegree(1, 0, 0)}
    assert sum(comps.values(), AlgebraElement.zero(F)) == el


def test_prime_field_coefficients():
    f5 = PrimeField(5)
    el = AlgebraElement.generator("x1", f5).scale(3) + AlgebraElement.generator("x1", f5).scale(2)
    assert el.is_zero()


def test_exterior_exponent_validation():
    with pytest.raises(ValueError):
        Monomial((0, 0, 0, 0, 2, 0, 0, 0))
    with pytest.raises(ValueError):
        Monomial((0, -1, 0, 0, 0, 0, 0, 0))
