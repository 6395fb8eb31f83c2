"""The expression language and the JSON round trips."""

import pytest

from fmk.algebra import AlgebraElement, alpha_s, nu_s, theta_s, xi_s
from fmk.homs import HomElement, compose, left_box, right_box
from fmk.parsing import ParseError, parse_expression
from fmk.scalars import QQ, PrimeField
from fmk.serialize import (
    algebra_from_json,
    algebra_to_json,
    fm_from_json,
    fm_to_json,
    hom_from_json,
    hom_to_json,
    seq_morphism_from_json,
    seq_morphism_to_json,
)
from fmk.complexes import T_s, phi_s

F = QQ


def g(name):
    return AlgebraElement.generator(name, F)


def test_parse_generators_and_constants():
    assert parse_expression("x1", F) == g("x1")
    assert parse_expression("alpha_s", F) == alpha_s(F)
    assert parse_expression("nu_s * theta_s", F) == nu_s(F) * theta_s(F)
    assert parse_expression("xi_s * xi_s", F).is_zero()


def test_parse_numbers_and_rationals():
    assert parse_expression("3", F) == AlgebraElement.scalar(3, F)
    assert parse_expression("3/4", F) == AlgebraElement.scalar(F.from_string("3/4"), F)
    assert parse_expression("2^3", F) == AlgebraElement.scalar(8, F)
    assert parse_expression("-x1 + x1", F).is_zero()
    assert parse_expression("(x1 - x2)^2", F) == alpha_s(F) * alpha_s(F)


def test_parse_diagram_expressions():
    got = parse_expression("nu_s * hd + xi_s * l", F)
    want = left_box(nu_s(F), HomElement.diagram(F, "hd")) + left_box(
        xi_s(F), HomElement.diagram(F, "l")
    )
    assert got == want
    # * composes diagram morphisms, right factor first
    assert parse_expression("d * u", F) == compose(
        HomElement.diagram(F, "d"), HomElement.diagram(F, "u")
    )
    # a coefficient on the right is a right box
    assert parse_expression("l * xi1", F) == right_box(HomElement.diagram(F, "l"), g("xi1"))


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_expression("x1 +", F)
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_expression("x1 @ x2", F)
    assert err.value.position == 3
    with pytest.raises(ParseError) as err:
        parse_expression("zz * 2", F)
    assert err.value.position == 0


def test_parse_type_errors():
    with pytest.raises(ParseError):
        parse_expression("x1 + u", F)
    with pytest.raises(ParseError):
        parse_expression("u * u", F)  # objects do not match
    with pytest.raises(ParseError):
        parse_expression("x1 / x2", F)


def test_parse_prime_field():
    f5 = PrimeField(5)
    el = parse_expression("7 * x1", f5)
    assert el == AlgebraElement.generator("x1", f5).scale(2)


def test_algebra_json_round_trip():
    el = nu_s(F) * theta_s(F) - alpha_s(F).scale(F.from_string("3/2"))
    data = algebra_to_json(el)
    assert all(set(item) == {"coeff", "monomial"} for item in data)
    assert algebra_from_json(F, data) == el


def test_hom_json_round_trip():
    h = left_box(nu_s(F), HomElement.diagram(F, "hd")) + left_box(
        xi_s(F), HomElement.diagram(F, "l")
    )
    data = hom_to_json(h)
    assert {t["diagram"] for t in data["terms"]} <= {"one", "u", "d", "l", "h", "uh", "hd", "beta", "hbeta"}
    assert hom_from_json(F, data) == h


def test_seq_morphism_json_round_trip():
    phi = phi_s(F)
    data = seq_morphism_to_json(phi)
    assert seq_morphism_from_json(F, data) == phi


def test_fm_json_round_trip():
    ts = T_s(F)
    data = fm_to_json(ts)
    assert set(data) == {"sequence", "summands", "delta"}
    restored = fm_from_json(F, data)  # re-validates the curvature identity
    assert restored.seq == ts.seq
    assert restored.delta == ts.delta


def test_parse_serialize_round_trip():
    el = parse_expression("nu_s * theta_s + (1/2) * alpha_s^2", F)
    assert algebra_from_json(F, algebra_to_json(el)) == el
