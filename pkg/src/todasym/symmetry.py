"""Infinitesimal symmetries of the Toda equations.

A candidate generator is

    v = tau d/dt + sum_j phi_j d/da_j + sum_j psi_j d/db_j

with polynomial coefficients in (a, b, t).  Writing D for the total
derivative along solutions (d/dt plus the flow substituted for all dotted
variables), first prolongation of v applied to the system residuals yields
the determining equations

    D(phi_j) - D(tau) a_j (b_{j+1} - b_j) + phi_j (b_j - b_{j+1})
             + a_j psi_j - a_j psi_{j+1} = 0,            j = 1..N-1,

    D(psi_j) - 2 D(tau) (a_j^2 - a_{j-1}^2)
             - 4 a_j phi_j + 4 a_{j-1} phi_{j-1} = 0,    j = 1..N,

with the boundary products a_0 phi_0 and a_N phi_N vanishing.  A candidate
is an infinitesimal symmetry exactly when every residual is the zero
polynomial.

For evolutionary candidates (tau = 0) the same condition reads

    dY/dt + [chi_2, Y] = 0

componentwise, where chi_2 is the Toda field itself.  Both routes are
implemented independently and agree term by term; the main family

    Y_k = X_k + t * chi_{k+2},     k >= -1,

passes both, which is verified exactly by verify_theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fields import VectorField
from .hierarchy import chi, master_field
from .lattice import toda_rhs
from .ratpoly import Polynomial, Vars


@dataclass(frozen=True, eq=False)
class SymmetryCandidate:
    """Coefficients (tau, phi_1..phi_{N-1}, psi_1..psi_N) of a generator."""

    n: int
    tau: Polynomial
    phi: tuple[Polynomial, ...]
    psi: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.phi) != self.n - 1 or len(self.psi) != self.n:
            raise ValueError(
                f"expected {self.n - 1} phi and {self.n} psi components, "
                f"got {len(self.phi)} and {len(self.psi)}"
            )
        for poly in (self.tau, *self.phi, *self.psi):
            if poly.n != self.n:
                raise ValueError("coefficient universe does not match candidate size")

    def is_evolutionary(self) -> bool:
        return self.tau.is_zero()

    def as_field(self) -> VectorField:
        """The (phi, psi) part as a vector field; requires tau = 0."""
        if not self.is_evolutionary():
            raise ValueError("only evolutionary candidates map to plain fields")
        return VectorField(self.n, self.phi, self.psi)

    @classmethod
    def from_field(cls, field: VectorField) -> "SymmetryCandidate":
        return cls(field.n, Polynomial.zero(field.n), field.a, field.b)

    def __add__(self, other: "SymmetryCandidate") -> "SymmetryCandidate":
        if self.n != other.n:
            raise ValueError("candidates live over different lattice sizes")
        return SymmetryCandidate(
            self.n,
            self.tau + other.tau,
            tuple(p + q for p, q in zip(self.phi, other.phi)),
            tuple(p + q for p, q in zip(self.psi, other.psi)),
        )

    def scale(self, c) -> "SymmetryCandidate":
        return SymmetryCandidate(
            self.n,
            self.tau.scale(c),
            tuple(p.scale(c) for p in self.phi),
            tuple(p.scale(c) for p in self.psi),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetryCandidate):
            return NotImplemented
        return (
            self.n == other.n
            and self.tau == other.tau
            and self.phi == other.phi
            and self.psi == other.psi
        )

    def to_json_obj(self) -> dict:
        return {
            "N": self.n,
            "tau": self.tau.to_json_terms(),
            "phi": [p.to_json_terms() for p in self.phi],
            "psi": [p.to_json_terms() for p in self.psi],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "SymmetryCandidate":
        psi = obj["psi"]
        n = obj.get("N", len(psi))
        tau = Polynomial.from_json_terms(n, obj.get("tau", []))
        phi = tuple(Polynomial.from_json_terms(n, item) for item in obj["phi"])
        psi_polys = tuple(Polynomial.from_json_terms(n, item) for item in psi)
        return cls(n, tau, phi, psi_polys)


@dataclass(frozen=True)
class DeterminingResidual:
    """Residuals of the determining equations; all zero iff a symmetry."""

    gamma: tuple[Polynomial, ...]
    delta: tuple[Polynomial, ...]

    def all_zero(self) -> bool:
        return all(p.is_zero() for p in self.gamma + self.delta)

    def first_nonzero(self) -> tuple[str, Polynomial] | None:
        for j, poly in enumerate(self.gamma, start=1):
            if not poly.is_zero():
                return f"gamma_{j}", poly
        for j, poly in enumerate(self.delta, start=1):
            if not poly.is_zero():
                return f"delta_{j}", poly
        return None

    def __add__(self, other: "DeterminingResidual") -> "DeterminingResidual":
        return DeterminingResidual(
            tuple(p + q for p, q in zip(self.gamma, other.gamma)),
            tuple(p + q for p, q in zip(self.delta, other.delta)),
        )


def total_derivative(f: Polynomial) -> Polynomial:
    """Derivative of f(a, b, t) along solutions: d/dt with the flow substituted."""
    n = f.n
    flow = toda_rhs(n)
    out = f.diff("t")
    for idx, comp in enumerate(flow.components()):
        part = f.diff_index(idx)
        if not part.is_zero():
            out = out + comp * part
    return out


def determining_residuals(cand: SymmetryCandidate) -> DeterminingResidual:
    """Exact residuals of both determining-equation families."""
    n = cand.n
    v = Vars(n)
    tau_dot = total_derivative(cand.tau)
    gamma = []
    for j in range(1, n):
        phi_j = cand.phi[j - 1]
        res = (
            total_derivative(phi_j)
            - tau_dot * v.a(j) * (v.b(j + 1) - v.b(j))
            + phi_j * (v.b(j) - v.b(j + 1))
            + v.a(j) * cand.psi[j - 1]
            - v.a(j) * cand.psi[j]
        )
        gamma.append(res)
    delta = []
    for j in range(1, n + 1):
        psi_j = cand.psi[j - 1]
        res = total_derivative(psi_j) - 2 * tau_dot * (v.a(j) ** 2 - v.a(j - 1) ** 2)
        if j <= n - 1:
            res = res - 4 * v.a(j) * cand.phi[j - 1]
        if j >= 2:
            res = res + 4 * v.a(j - 1) * cand.phi[j - 2]
        delta.append(res)
    return DeterminingResidual(tuple(gamma), tuple(delta))


def evolutionary_defect(y: VectorField) -> VectorField:
    """dY/dt + [chi_2, Y]; the zero field iff Y generates a symmetry."""
    return y.dt_partial() + chi(2, y.n).bracket(y)


# ---------------------------------------------------------------------------
# the catalogue of known generators
# ---------------------------------------------------------------------------


def candidate_shift(n: int) -> SymmetryCandidate:
    """tau = 0, phi = 0, psi = 1: rigid shift of all b (this is X_{-1})."""
    v = Vars(n)
    return SymmetryCandidate(n, v.zero, (v.zero,) * (n - 1), (v.one,) * n)


def candidate_time_translation(n: int) -> SymmetryCandidate:
    """tau = -1 with no coefficient part; evolutionary form is the flow itself."""
    v = Vars(n)
    return SymmetryCandidate(n, v.const(-1), (v.zero,) * (n - 1), (v.zero,) * n)


def candidate_time_translation_evolutionary(n: int) -> SymmetryCandidate:
    return SymmetryCandidate.from_field(toda_rhs(n))

def candidate_scaling(n: int) -> SymmetryCandidate:
    """tau = -t, phi_j = a_j, psi_j = b_j: the grading symmetry.

    The chain equations are invariant under a -> s a, b -> s b, t -> t / s;
    differentiating at s = 1 gives tau = -t (a constant tau fails the
    determining equations, which the tests pin down).  Its evolutionary
    representative is X_0 + t chi_2 = build_Y(0).
    """
    v = Vars(n)
    return SymmetryCandidate(
        n,
        -v.t,
        tuple(v.a(i) for i in range(1, n)),
        tuple(v.b(i) for i in range(1, n + 1)),
    )


@lru_cache(maxsize=None)
def build_Y(k: int, n: int) -> SymmetryCandidate:
    """The time-dependent symmetry Y_k = X_k + t chi_{k+2} (tau = 0)."""
    if k < -1:
        raise ValueError(f"symmetry index must be >= -1, got {k}")
    t = Vars(n).t
    field = master_field(k, n) + chi(k + 2, n).mul_poly(t)
    return SymmetryCandidate.from_field(field)


# ---------------------------------------------------------------------------
# suite runners
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCase:
    """Outcome of both symmetry criteria for one Y_k."""

    k: int
    n: int
    determining_ok: bool
    evolutionary_ok: bool
    routes_agree: bool
    witness: str | None

    @property
    def ok(self) -> bool:
        return self.determining_ok and self.evolutionary_ok and self.routes_agree


def verify_theorem(k_max: int, n: int) -> list[TheoremCase]:
    """Check Y_k for k = -1..k_max by both routes, exactly."""
    if k_max < -1:
        raise ValueError(f"k_max must be >= -1, got {k_max}")
    cases = []
    for k in range(-1, k_max + 1):
        cand = build_Y(k, n)
        residual = determining_residuals(cand)
        defect = evolutionary_defect(cand.as_field())
        agree = _routes_agree(residual, defect)
        witness = None
        found = residual.first_nonzero()
        if found is not None:
            witness = f"{found[0]} = {found[1]}"
        elif not defect.is_zero():
            witness = "evolutionary defect nonzero"
        cases.append(
            TheoremCase(
                k=k,
                n=n,
                determining_ok=residual.all_zero(),
                evolutionary_ok=defect.is_zero(),
                routes_agree=agree,
                witness=witness,
            )
        )
    return cases


def _routes_agree(residual: DeterminingResidual, defect: VectorField) -> bool:
    """For tau = 0 the two criteria are the same polynomials, slot by slot."""
    return tuple(residual.gamma) == defect.a and tuple(residual.delta) == defect.b


@dataclass(frozen=True)
class BracketCase:
    """Outcome of one ladder bracket identity [X_k, chi_l] = (l-1) chi_{k+l}."""

    k: int
    l: int
    n: int
    ok: bool
    witness: str | None


def bracket_relation_suite(
    n: int, k_range=(0, 1, 2, 3), l_range=(1, 2, 3, 4)
) -> list[BracketCase]:
    """Exact check of [X_k, chi_l] = (l-1) chi_{k+l} over a grid."""
    out = []
    for k in k_range:
        for l in l_range:
            lhs = master_field(k, n).bracket(chi(l, n))
            rhs = chi(k + l, n).scale(l - 1)
            diff = lhs - rhs
            witness = None
            if not diff.is_zero():
                for idx, comp in enumerate(diff.components()):
                    if not comp.is_zero():
                        witness = f"component {idx}: {comp}"
                        break
            out.append(BracketCase(k=k, l=l, n=n, ok=diff.is_zero(), witness=witness))
    return out
