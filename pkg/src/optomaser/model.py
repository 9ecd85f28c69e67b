"""Driven optomechanical model: Hamiltonian, dissipators, Liouvillian.

All rates and frequencies are dimensionless, in units of the mechanical
frequency.  The Hamiltonian in the pump frame is

    H = -delta a'a + b'b + g0 (b + b') a'a + E (a + a'),

with a the cavity mode (zero-temperature bath, decay kappa) and b the
mechanical mode (thermal bath with occupation n_th, decay gamma_m = 1/Q_m).
Positive delta means the pump is blue of the bare cavity resonance.

Vectorization convention (used everywhere, including the steady-state
trace pinning): column stacking, vec(rho) = rho.flatten(order='F'), so
vec(A rho B) = kron(B.T, A) vec(rho).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import DimensionMismatchError, InvalidDimensionError
from .operators import (
    HilbertSpace,
    Operator,
    create,
    destroy,
    identity,
    number,
    tensor,
)

__all__ = [
    "SystemParams",
    "SuperOperator",
    "hamiltonian",
    "cavity_ops",
    "lindblad_term",
    "commutator_superop",
    "dissipator_cavity",
    "dissipator_mech",
    "liouvillian",
    "trace_row",
    "vec",
    "unvec",
]


@dataclass(frozen=True)
class SystemParams:
    """Dimensionless model constants plus truncation cutoffs.

    The physical pump power behind E is P = hbar * omega_p * E^2 / kappa;
    it is never used internally.
    """

    delta: float = 0.0
    g0: float = 0.0
    kappa: float = 0.3
    gamma_m: float = 1e-4
    E: float = 0.1
    n_th: float = 0.0
    n_cav: int = 4
    n_mech: int = 200

    def __post_init__(self):
        if self.kappa <= 0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")
        if self.gamma_m <= 0:
            raise ValueError(f"gamma_m must be positive, got {self.gamma_m}")
        if self.n_th < 0:
            raise ValueError(f"n_th must be nonnegative, got {self.n_th}")
        if self.E < 0:
            raise ValueError(f"E must be nonnegative, got {self.E}")
        if self.n_cav < 2 or self.n_mech < 2:
            raise InvalidDimensionError(
                f"cutoffs must be >= 2, got {self.n_cav} x {self.n_mech}"
            )

    @property
    def q_m(self) -> float:
        return 1.0 / self.gamma_m

    @property
    def g0_over_kappa(self) -> float:
        return self.g0 / self.kappa

    @property
    def space(self) -> HilbertSpace:
        return HilbertSpace((self.n_cav, self.n_mech))

    def replace(self, **changes) -> "SystemParams":
        from dataclasses import replace as _replace

        return _replace(self, **changes)


@dataclass(frozen=True)
class SuperOperator:
    """Sparse matrix acting on column-stacked density matrices."""

    space: HilbertSpace
    data: sp.csr_matrix = field(repr=False)

    def __post_init__(self):
        m = sp.csr_matrix(self.data, dtype=np.complex128)
        m.sum_duplicates()
        m.eliminate_zeros()
        m.sort_indices()
        n2 = self.space.total**2
        if m.shape != (n2, n2):
            raise DimensionMismatchError(
                f"superoperator shape {m.shape}, expected {(n2, n2)}"
            )
        object.__setattr__(self, "data", m)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __add__(self, other: "SuperOperator") -> "SuperOperator":
        if self.space.dims != other.space.dims:
            raise DimensionMismatchError("superoperator spaces differ")
        return SuperOperator(self.space, self.data + other.data)

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        """Apply to a density matrix given as a square array."""
        n = self.space.total
        return unvec(self.data @ vec(np.asarray(rho)), n)


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stack a square matrix."""
    return np.asarray(rho).flatten(order="F")


def unvec(v: np.ndarray, n: int | None = None) -> np.ndarray:
    """Inverse of vec."""
    v = np.asarray(v)
    if n is None:
        n = int(round(np.sqrt(v.size)))
    if n * n != v.size:
        raise DimensionMismatchError(f"length {v.size} is not a perfect square")
    return v.reshape((n, n), order="F")


def cavity_ops(p: SystemParams) -> tuple[Operator, Operator]:
    """Composite-space annihilation operators (a, b)."""
    a = tensor(destroy(p.n_cav), identity(p.n_mech))
    b = tensor(identity(p.n_cav), destroy(p.n_mech))
    return a, b


def hamiltonian(p: SystemParams) -> Operator:
    """Pump-frame Hamiltonian on the composite space; Hermitian."""
    na = tensor(number(p.n_cav), identity(p.n_mech))
    nb = tensor(identity(p.n_cav), number(p.n_mech))
    x_b = tensor(identity(p.n_cav), destroy(p.n_mech) + create(p.n_mech))
    x_a = tensor(destroy(p.n_cav) + create(p.n_cav), identity(p.n_mech))
    return -p.delta * na + nb + p.g0 * (x_b @ na) + p.E * x_a


def lindblad_term(c: Operator, rate: float) -> SuperOperator:
    """(rate/2) (2 c rho c' - c'c rho - rho c'c) as a superoperator."""
    cd = c.dag()
    cdc = (cd @ c).data
    n = c.space.total
    eye = sp.eye_array(n, format="csr")
    data = 0.5 * rate * (
        2.0 * sp.kron(c.data.conjugate(), c.data)
        - sp.kron(eye, cdc)
        - sp.kron(cdc.T, eye)
    )
    return SuperOperator(c.space, data)


def commutator_superop(h: Operator) -> SuperOperator:
    """-i [H, .] in vectorized form."""
    n = h.space.total
    eye = sp.eye_array(n, format="csr")
    data = -1j * (sp.kron(eye, h.data) - sp.kron(h.data.T, eye))
    return SuperOperator(h.space, data)


def dissipator_cavity(p: SystemParams) -> SuperOperator:
    """Cavity decay at rate kappa into a zero-temperature port."""
    a, _ = cavity_ops(p)
    return lindblad_term(a, p.kappa)


def dissipator_mech(p: SystemParams) -> SuperOperator:
    """Mechanical thermal bath: downward (n_th+1) and upward n_th terms."""
    _, b = cavity_ops(p)
    down = lindblad_term(b, p.gamma_m * (p.n_th + 1.0))
    up = lindblad_term(b.dag(), p.gamma_m * p.n_th)
    return down + up


def liouvillian(p: SystemParams) -> SuperOperator:
    """Full generator: -i[H, .] plus cavity and mechanical dissipators."""
    return (
        commutator_superop(hamiltonian(p))
        + dissipator_cavity(p)
        + dissipator_mech(p)
    )


def trace_row(n: int) -> sp.csr_matrix:
    """The trace functional as a 1 x n^2 row acting on vec(rho)."""
    cols = np.arange(n) * (n + 1)
    return sp.csr_matrix(
        (np.ones(n), (np.zeros(n, dtype=int), cols)), shape=(1, n * n)
    )
