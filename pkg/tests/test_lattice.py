"""Phase space, Lax matrices, Hamiltonians and the flow."""

import math
import random

import numpy as np
import pytest

from todasym.lattice import (
    PhasePoint,
    flaschka,
    flow_residuals,
    gradient,
    hamiltonian,
    hamiltonian_value,
    jacobi_matrix,
    lax_b_matrix,
    matmul_symbolic,
    symbolic_lax,
    symbolic_lax_b,
    toda_rhs,
)
from todasym.ratpoly import Polynomial, Vars


# -- Flaschka map -----------------------------------------------------------


def test_flaschka_at_origin():
    point = flaschka([0.0, 0.0, 0.0], [0.0, 0.0, 0.0])
    assert point.a == (0.5, 0.5)
    assert point.b == (0.0, 0.0, 0.0)
    assert point.time == 0.0


def test_flaschka_momentum_scaling():
    point = flaschka([1.0, -2.0], [2.0, -2.0])
    assert point.b == (-1.0, 1.0)


def test_flaschka_log_positions():
    point = flaschka([2.0 * math.log(2.0), 0.0], [0.0, 0.0])
    assert point.a[0] == pytest.approx(1.0, abs=1e-15)


def test_flaschka_positivity():
    rng = random.Random(5)
    q = [rng.uniform(-3, 3) for _ in range(4)]
    p = [rng.uniform(-3, 3) for _ in range(4)]
    assert all(ai > 0 for ai in flaschka(q, p).a)


# -- symbolic Hamiltonians ---------------------------------------------------


def test_h1_is_trace():
    v = Vars(4)
    assert hamiltonian(1, 4) == v.b(1) + v.b(2) + v.b(3) + v.b(4)


def test_h2_hand_expansion():
    v = Vars(2)
    assert hamiltonian(2, 2) == v.b(1) ** 2 / 2 + v.b(2) ** 2 / 2 + v.a(1) ** 2


def test_h3_hand_expansion():
    v = Vars(2)
    expected = (v.b(1) ** 3 + v.b(2) ** 3) / 3 + v.a(1) ** 2 * (v.b(1) + v.b(2))
    assert hamiltonian(3, 2) == expected


def test_h_homogeneous():
    for n in (2, 3):
        for m in range(1, 6):
            assert hamiltonian(m, n).is_homogeneous(m)


def test_h_rejects_bad_index():
    with pytest.raises(ValueError):
        hamiltonian(0, 3)


# -- gradients ---------------------------------------------------------------


def test_gradient_h1():
    n = 3
    grads = gradient(hamiltonian(1, n), n)
    assert all(g.is_zero() for g in grads[: n - 1])
    assert all(g == Polynomial.const(n, 1) for g in grads[n - 1 :])


def test_gradient_h2():
    v = Vars(2)
    assert gradient(hamiltonian(2, 2), 2) == (2 * v.a(1), v.b(1), v.b(2))


def test_gradient_constant():
    grads = gradient(Polynomial.const(3, 7), 3)
    assert all(g.is_zero() for g in grads)


# -- the flow ------------------------------------------------------------------


def test_toda_rhs_n2():
    v = Vars(2)
    flow = toda_rhs(2)
    assert flow.a == (v.a(1) * v.b(2) - v.a(1) * v.b(1),)
    assert flow.b == (2 * v.a(1) ** 2, -2 * v.a(1) ** 2)


def test_flow_vanishes_at_zero_coupling():
    flow = toda_rhs(3)
    point = {"a1": 0, "a2": 0, "b1": 3, "b2": -1, "b3": 2}
    assert all(c.evaluate(point) == 0 for c in flow.components())


def test_flow_conserves_hamiltonians():
    for n in (2, 3, 4):
        flow = toda_rhs(n)
        for m in range(1, 2 * n + 1):
            assert flow.apply(hamiltonian(m, n)).is_zero(), (n, m)


def test_h1_conservation_telescopes():
    # the b-components sum to zero before any cancellation against H_1
    flow = toda_rhs(3)
    total = flow.b[0] + flow.b[1] + flow.b[2]
    assert total.is_zero()


# -- residuals ------------------------------------------------------------------


def test_residuals_vanish_on_flow_symbolically():
    for n in (2, 3):
        v = Vars(n)
        flow = toda_rhs(n)
        a = [v.a(i) for i in range(1, n)]
        b = [v.b(i) for i in range(1, n + 1)]
        gammas, deltas = flow_residuals(a, b, list(flow.a), list(flow.b))
        assert all(g.is_zero() for g in gammas)
        assert all(d.is_zero() for d in deltas)


def test_residuals_at_fixed_point_numeric():
    gammas, deltas = flow_residuals([0.0], [1.0, -1.0], [0.0], [0.0, 0.0])
    assert gammas == [0.0] and deltas == [0.0, 0.0]


def test_residuals_linear_in_perturbation():
    v = Vars(2)
    flow = toda_rhs(2)
    a = [v.a(1)]
    b = [v.b(1), v.b(2)]
    one = Polynomial.const(2, 1)
    gammas, _ = flow_residuals(a, b, [flow.a[0] + one], list(flow.b))
    assert gammas[0] == one


# -- Lax pair --------------------------------------------------------------------


def test_lax_b_zero_coupling():
    point = PhasePoint((0.0, 0.0), (1.0, 2.0, 3.0))
    assert np.array_equal(lax_b_matrix(point), np.zeros((3, 3)))


def test_lax_b_shape_n2():
    point = PhasePoint((1.0,), (0.0, 0.0))
    assert np.array_equal(lax_b_matrix(point), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def test_commutator_hand_check_n2():
    lax = symbolic_lax(2)
    skew = symbolic_lax_b(2)
    comm_bl = matmul_symbolic(skew, lax)
    comm_lb = matmul_symbolic(lax, skew)
    v = Vars(2)
    assert comm_bl[0][0] - comm_lb[0][0] == 2 * v.a(1) ** 2
    assert comm_bl[1][1] - comm_lb[1][1] == -2 * v.a(1) ** 2
    assert comm_bl[0][1] - comm_lb[0][1] == v.a(1) * (v.b(2) - v.b(1))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_commutator_assembles_flow(n):
    lax = symbolic_lax(n)
    skew = symbolic_lax_b(n)
    flow = toda_rhs(n)
    bl = matmul_symbolic(skew, lax)
    lb = matmul_symbolic(lax, skew)
    for i in range(n):
        for j in range(n):
            diff = bl[i][j] - lb[i][j]
            if i == j:
                assert diff == flow.b[i]
            elif abs(i - j) == 1:
                assert diff == flow.a[min(i, j)]
            else:
                assert diff.is_zero()


# -- numeric Hamiltonians ----------------------------------------------------------


def test_hamiltonian_value_routes_agree():
    rng = random.Random(11)
    for n in (2, 4, 6):
        point = PhasePoint(
            tuple(rng.uniform(0.1, 1.0) for _ in range(n - 1)),
            tuple(rng.uniform(-1.0, 1.0) for _ in range(n)),
        )
        values = {name: float(val) for name, val in zip_point(point)}
        for m in range(1, n + 1):
            eig = hamiltonian_value(point, m, method="eigen")
            power = hamiltonian_value(point, m, method="power")
            symbolic = hamiltonian(m, n).evaluate(values)
            assert eig == pytest.approx(power, rel=1e-12, abs=1e-12)
            assert eig == pytest.approx(symbolic, rel=1e-12, abs=1e-12)


def zip_point(point):
    names = [f"a{i}" for i in range(1, point.n)] + [f"b{i}" for i in range(1, point.n + 1)]
    return zip(names, list(point.a) + list(point.b))


def test_jacobi_matrix_layout():
    point = PhasePoint((1.0, 2.0), (5.0, 6.0, 7.0))
    expected = np.array([[5.0, 1.0, 0.0], [1.0, 6.0, 2.0], [0.0, 2.0, 7.0]])
    assert np.array_equal(jacobi_matrix(point), expected)


# -- phase point serialization --------------------------------------------------------


def test_phase_point_json_round_trip():
    point = PhasePoint((0.25, 0.5), (-1.0, 0.0, 1.0), 2.5)
    again = PhasePoint.from_json_obj(point.to_json_obj())
    assert again == point


def test_phase_point_accepts_positions_momenta():
    obj = {"q": [0.0, 0.0], "p": [2.0, -2.0]}
    point = PhasePoint.from_json_obj(obj)
    assert point.a == (0.5,)
    assert point.b == (-1.0, 1.0)


def test_phase_point_rejects_half_qp():
    with pytest.raises(ValueError):
        PhasePoint.from_json_obj({"q": [0.0, 0.0]})


def test_phase_point_rejects_non_finite():
    with pytest.raises(ValueError):
        PhasePoint((float("nan"),), (0.0, 0.0))


def test_toda_rhs_equals_chi2():
    from todasym.hierarchy import chi

    for n in (2, 3, 4):
        assert toda_rhs(n) == chi(2, n)
