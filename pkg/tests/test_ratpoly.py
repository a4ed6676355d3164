"""Exact polynomial arithmetic: ring laws, calculus, serialization."""

import json
from fractions import Fraction

import pytest

from todasym.ratpoly import Polynomial, UniverseError, Vars, var_names
from conftest import random_polynomial


def test_variable_order():
    assert var_names(3) == ("a1", "a2", "b1", "b2", "b3", "t")


def test_additive_inverse_cancels():
    v = Vars(2)
    p = v.a(1) * v.b(2)
    assert (p + (-p)).is_zero()


def test_add_merges_like_terms():
    v = Vars(2)
    q = v.b(1) ** 2
    assert q + q == 2 * v.b(1) ** 2


def test_add_x1_b_component_instance():
    # b-component of the first master field at the chain start, N=2
    v = Vars(2)
    total = 5 * v.a(1) ** 2 + v.b(1) ** 2
    assert (5 * v.a(1) ** 2) + (v.b(1) ** 2) == total


def test_mul_by_zero(rng):
    v = Vars(3)
    p = random_polynomial(rng, 3)
    assert (p * v.zero).is_zero()


def test_square_of_sum():
    v = Vars(2)
    b1, b2 = v.b(1), v.b(2)
    assert (b1 + b2) ** 2 == b1**2 + 2 * b1 * b2 + b2**2


def test_mul_flow_component():
    v = Vars(2)
    assert v.a(1) * (v.b(2) - v.b(1)) == v.a(1) * v.b(2) - v.a(1) * v.b(1)


def test_diff_power_rule():
    v = Vars(2)
    assert (v.b(1) ** 2).diff("b1") == 2 * v.b(1)


def test_diff_absent_variable():
    v = Vars(2)
    assert (v.a(1) * v.b(2)).diff("t").is_zero()


def test_diff_h2_in_a1():
    # H_2 at N=2 expanded by hand: b1^2/2 + b2^2/2 + a1^2
    v = Vars(2)
    h2 = v.b(1) ** 2 / 2 + v.b(2) ** 2 / 2 + v.a(1) ** 2
    assert h2.diff("a1") == 2 * v.a(1)


def test_evaluate_exact():
    v = Vars(2)
    assert (v.b(1) + v.b(2)).evaluate({"b1": 1, "b2": 2}) == Fraction(3)


def test_evaluate_zero():
    assert Polynomial.zero(3).evaluate({}) == 0


def test_evaluate_boundary_expression():
    # 2 a1^2 - 2 a0^2 with a0 the zero polynomial
    v = Vars(2)
    p = 2 * v.a(1) ** 2 - 2 * v.a(0) ** 2
    assert p.evaluate({"a1": Fraction(1, 2)}) == Fraction(1, 2)


def test_evaluate_float_mode():
    v = Vars(2)
    value = (v.a(1) * v.b(1)).evaluate({"a1": 0.5, "b1": 4})
    assert isinstance(value, float) and value == 2.0


def test_evaluate_missing_assignment():
    v = Vars(2)
    with pytest.raises(ValueError, match="missing assignment"):
        (v.a(1) + v.b(1)).evaluate({"a1": 1})


def test_is_zero_after_cancellation():
    v = Vars(2)
    p = (v.b(1) + v.b(2)) ** 2 - v.b(1) ** 2 - 2 * v.b(1) * v.b(2) - v.b(2) ** 2
    assert p.is_zero()


def test_self_difference_is_zero(rng):
    p = random_polynomial(rng, 3, with_t=True)
    assert (p - p).is_zero()


def test_ring_axioms_random(rng):
    for _ in range(40):
        p = random_polynomial(rng, 3)
        q = random_polynomial(rng, 3)
        r = random_polynomial(rng, 3)
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_product_degree_adds(rng):
    for _ in range(20):
        p = random_polynomial(rng, 2)
        q = random_polynomial(rng, 2)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).total_degree() == p.total_degree() + q.total_degree()


def test_mixed_partials_commute(rng):
    for _ in range(30):
        p = random_polynomial(rng, 3, max_terms=5, max_degree=4, with_t=True)
        for x, y in (("a1", "b2"), ("b1", "t"), ("a2", "a1")):
            assert p.diff(x).diff(y) == p.diff(y).diff(x)


def test_product_rule(rng):
    for _ in range(20):
        p = random_polynomial(rng, 2)
        q = random_polynomial(rng, 2)
        lhs = (p * q).diff("b1")
        rhs = p.diff("b1") * q + p * q.diff("b1")
        assert lhs == rhs


def test_evaluate_is_ring_homomorphism(rng):
    point = {name: Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for name in var_names(2)}
    for _ in range(20):
        p = random_polynomial(rng, 2, with_t=True)
        q = random_polynomial(rng, 2, with_t=True)
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
        assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


def test_universe_mismatch_rejected():
    with pytest.raises(UniverseError):
        Polynomial.variable(2, "b1") + Polynomial.variable(3, "b1")
    with pytest.raises(UniverseError):
        Polynomial.variable(2, "b1") * Polynomial.variable(3, "b1")


def test_unknown_variable_rejected():
    with pytest.raises(UniverseError):
        Polynomial.variable(2, "a2")
    with pytest.raises(UniverseError):
        Polynomial.variable(2, "b1").diff("b3")


def test_vars_boundary_convention():
    v = Vars(4)
    assert v.a(0).is_zero() and v.a(4).is_zero()
    assert v.b(0).is_zero() and v.b(5).is_zero()
    assert not v.a(3).is_zero() and not v.b(4).is_zero()


def test_json_round_trip_bit_exact(rng):
    for _ in range(20):
        p = random_polynomial(rng, 3, max_terms=6, with_t=True)
        blob = json.dumps(p.to_json_terms())
        q = Polynomial.from_json_terms(3, json.loads(blob))
        assert q == p
        assert json.dumps(q.to_json_terms()) == blob


def test_json_terms_sorted_and_sparse():
    v = Vars(2)
    p = v.b(2) ** 2 + 3 * v.a(1) - Fraction(1, 2) * v.t
    data = p.to_json_terms()
    assert [item["coeff"] for item in data] == ["3", "-1/2", "1"]
    assert data[0]["exps"] == {"a1": 1}
    assert data[1]["exps"] == {"t": 1}
    assert data[2]["exps"] == {"b2": 2}
    assert all(0 not in item["exps"].values() for item in data)


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        Polynomial.from_json_terms(2, [{"coeff": "1", "exps": {"c1": 1}}])
    with pytest.raises(ValueError):
        Polynomial.from_json_terms(2, [{"coeff": "1", "exps": {"a1": 0}}])


def test_str_rendering():
    v = Vars(2)
    p = -v.a(1) * v.b(1) + 3 * v.a(1) * v.b(2)
    assert str(p) == "-a1*b1 + 3*a1*b2"
    assert str(Polynomial.zero(2)) == "0"


def test_homogeneity_predicate():
    v = Vars(2)
    assert (v.a(1) * v.b(1) + v.b(2) ** 2).is_homogeneous(2)
    assert not (v.a(1) + v.b(2) ** 2).is_homogeneous()
