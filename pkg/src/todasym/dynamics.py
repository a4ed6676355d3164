"""Numerical side: integrate flows, certify spectra, probe symmetries.

Everything here is deliberately plain: a fixed-step classical fourth-order
Runge-Kutta stepper (trajectories of interest are short and smooth, and a
fixed step keeps drift assertions deterministic), LAPACK's symmetric
tridiagonal eigensolver for spectra, and finite differences to measure how
well a perturbed trajectory still satisfies the equations.

The continuous Toda flow preserves a_i > 0 exactly; the discrete stepper
does not, so crossing a_i <= 0 aborts with a diagnostic (the step size is
too coarse for the data).  Polynomial fields are compiled once to coefficient
and exponent arrays before stepping.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Callable, IO

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .fields import VectorField
from .lattice import PhasePoint, flow_residuals, toda_velocity
from .symmetry import SymmetryCandidate

FieldFunc = Callable[[np.ndarray, float], np.ndarray]


class CompiledField:
    """Polynomial vector field flattened to numpy arrays for fast evaluation."""

    def __init__(self, field: VectorField):
        self.n = field.n
        width = 2 * field.n
        comps = []
        for poly in field.components():
            if poly.terms:
                exps = np.array(list(poly.terms.keys()), dtype=np.int64)
                coeffs = np.array([float(c) for c in poly.terms.values()])
            else:
                exps = np.zeros((0, width), dtype=np.int64)
                coeffs = np.zeros(0)
            comps.append((exps, coeffs))
        self._comps = comps

    def __call__(self, x: np.ndarray, t: float) -> np.ndarray:
        values = np.append(x, t)
        out = np.empty(len(self._comps))
        for i, (exps, coeffs) in enumerate(self._comps):
            if coeffs.size == 0:
                out[i] = 0.0
            else:
                out[i] = np.prod(values**exps, axis=1) @ coeffs
        return out


def _toda_func(x: np.ndarray, t: float) -> np.ndarray:
    n = (len(x) + 1) // 2
    da, db = toda_velocity(x[: n - 1], x[n - 1 :])
    return np.concatenate([da, db])


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution: times strictly increasing, one state row per sample."""

    n: int
    times: np.ndarray
    states: np.ndarray
    dt: float
    integrator: str = "rk4"

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("sample times must be strictly increasing")
        if self.states.shape != (len(self.times), 2 * self.n - 1):
            raise ValueError("state array shape does not match times and size")

    def point(self, index: int) -> PhasePoint:
        return PhasePoint.from_state(self.n, self.states[index], float(self.times[index]))

    @property
    def a_states(self) -> np.ndarray:
        return self.states[:, : self.n - 1]

    @property
    def b_states(self) -> np.ndarray:
        return self.states[:, self.n - 1 :]

    def write_csv(self, stream: IO[str]) -> None:
        writer = csv.writer(stream)
        header = ["t"]
        header += [f"a{i}" for i in range(1, self.n)]
        header += [f"b{i}" for i in range(1, self.n + 1)]
        writer.writerow(header)
        for t, row in zip(self.times, self.states):
            writer.writerow([repr(float(t))] + [repr(float(v)) for v in row])


def integrate(
    z0: PhasePoint,
    t_end: float,
    dt: float,
    field: VectorField | FieldFunc | None = None,
    require_positive_a: bool | None = None,
    store_stride: int = 1,
) -> Trajectory:
    """Integrate from z0 with fixed-step classical fourth-order Runge-Kutta.

    field=None integrates the Toda flow itself; a VectorField (possibly
    t-dependent) is compiled first; any callable (x, t) -> dx is accepted.
    require_positive_a defaults to True for the Toda flow when the initial
    couplings are all positive (losing positivity then means dt is too
    coarse); data starting on an a_i = 0 invariant plane is left alone.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_end < 0:
        raise ValueError("t_end must be non-negative")
    if require_positive_a is None:
        require_positive_a = field is None and all(ai > 0 for ai in z0.a)
    if field is None:
        func: FieldFunc = _toda_func
        name = "rk4/toda"
    elif isinstance(field, VectorField):
        if field.n != z0.n:
            raise ValueError("field and initial point have different lattice sizes")
        func = CompiledField(field)
        name = "rk4/compiled"
    else:
        func = field
        name = "rk4/callable"

    steps = int(round(t_end / dt))
    n = z0.n
    x = z0.state()
    t = z0.time
    times = [t]
    states = [x.copy()]
    for step in range(steps):
        k1 = func(x, t)
        k2 = func(x + 0.5 * dt * k1, t + 0.5 * dt)
        k3 = func(x + 0.5 * dt * k2, t + 0.5 * dt)
        k4 = func(x + dt * k3, t + dt)
        x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t = z0.time + (step + 1) * dt
        if not np.all(np.isfinite(x)):
            raise RuntimeError(
                f"non-finite state at t={t:.6g} (step {step + 1}); "
                "reduce dt or check the field"
            )
        if require_positive_a and n > 1 and np.any(x[: n - 1] <= 0.0):
            raise RuntimeError(
                f"off-diagonal entry crossed zero at t={t:.6g} (step {step + 1}); "
                "dt is too large for this trajectory"
            )
        if (step + 1) % store_stride == 0:
            times.append(t)
            states.append(x.copy())
    return Trajectory(n, np.array(times), np.array(states), dt, name)


def spectrum(point: PhasePoint) -> np.ndarray:
    """Eigenvalues of the Jacobi matrix, ascending."""
    return eigh_tridiagonal(
        np.asarray(point.b, dtype=float),
        np.asarray(point.a, dtype=float),
        eigvals_only=True,
    )


@dataclass(frozen=True)
class DriftReport:
    """Worst-case movement of spectrum and Hamiltonians along a trajectory."""

    eigenvalue_drift: float
    h_drift: dict[int, float]

    def max_h_drift(self) -> float:
        return max(self.h_drift.values(), default=0.0)

    def to_json_obj(self) -> dict:
        return {
            "eigenvalue_drift": self.eigenvalue_drift,
            "H_drift": {str(m): v for m, v in sorted(self.h_drift.items())},
        }


def drift_report(traj: Trajectory, m_max: int, stride: int = 1) -> DriftReport:
    """Compare eigenvalues and H_1..H_{m_max} of each sample to the first."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    rows = range(0, len(traj.times), stride)
    spectra = np.array([spectrum(traj.point(i)) for i in rows])
    eig_drift = float(np.max(np.abs(spectra - spectra[0])))
    h_drift = {}
    for m in range(1, m_max + 1):
        values = np.sum(spectra**m, axis=1) / m
        h_drift[m] = float(np.max(np.abs(values - values[0])))
    return DriftReport(eig_drift, h_drift)


def order_of_accuracy_ratio(
    z0: PhasePoint, t_end: float, dt: float, field: VectorField | None = None
) -> float:
    """Step-halving error ratio; close to 16 for a fourth-order method."""
    finals = []
    for scale in (1, 2, 4):
        traj = integrate(z0, t_end, dt / scale, field=field)
        finals.append(traj.states[-1])
    e1 = np.max(np.abs(finals[0] - finals[1]))
    e2 = np.max(np.abs(finals[1] - finals[2]))
    if e2 == 0.0:
        raise RuntimeError("halved-step solutions coincide; dt too small to resolve")
    return float(e1 / e2)


@dataclass(frozen=True)
class SymmetryMapResult:
    """Finite-difference residuals of a perturbed trajectory.

    raw_residual is the max equation residual of the perturbed curve,
    baseline_residual the same for the unperturbed samples (pure
    discretization), and defect the max residual after subtracting the
    baseline arrays, which isolates the part introduced by the perturbation.
    For a true symmetry the defect scales like eps^2, for anything else
    like eps.
    """

    eps: float
    defect: float
    raw_residual: float
    baseline_residual: float


def symmetry_map_test(
    cand: SymmetryCandidate,
    z0: PhasePoint,
    eps: float,
    t_end: float = 1.0,
    dt: float = 5.0e-4,
    sample_stride: int = 5,
) -> SymmetryMapResult:
    """Push a solution by eps times a candidate field and re-test the equations.

    The Toda flow is integrated from z0, each sample z(t) is displaced to
    z(t) + eps * Y(z(t), t), and the displaced curve's time derivative
    (central differences on the sample grid) is compared against the flow.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not cand.is_evolutionary():
        raise ValueError("the map test applies to evolutionary candidates (tau = 0)")
    traj = integrate(z0, t_end, dt, store_stride=sample_stride)
    compiled = CompiledField(cand.as_field())
    samples = traj.states
    times = traj.times
    shifts = np.array([compiled(samples[i], float(times[i])) for i in range(len(times))])
    baseline = _grid_residuals(traj.n, times, samples)
    perturbed = _grid_residuals(traj.n, times, samples + eps * shifts)
    separated = perturbed - baseline
    return SymmetryMapResult(
        eps=eps,
        defect=float(np.max(np.abs(separated))),
        raw_residual=float(np.max(np.abs(perturbed))),
        baseline_residual=float(np.max(np.abs(baseline))),
    )


def _grid_residuals(n: int, times: np.ndarray, states: np.ndarray) -> np.ndarray:
    """Central-difference equation residuals at interior samples."""
    h = times[1:] - times[:-1]
    if not np.allclose(h, h[0]):
        raise ValueError("residual grid must be uniform")
    xdot = (states[2:] - states[:-2]) / (2.0 * h[0])
    rows = []
    for i in range(xdot.shape[0]):
        mid = states[i + 1]
        gammas, deltas = flow_residuals(
            mid[: n - 1], mid[n - 1 :], xdot[i, : n - 1], xdot[i, n - 1 :]
        )
        rows.append(np.concatenate([gammas, deltas]))
    return np.array(rows)
