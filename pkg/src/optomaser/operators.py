"""Sparse operators on truncated Fock spaces.

Everything is complex double precision.  Operator matrices are kept in a
canonical CSR form (sorted indices, duplicates summed, no stored zeros) so
that equality of two operators is equality of their raw index/data arrays.
The composite-space convention is fixed package-wide: subsystem 0 is the
cavity, subsystem 1 is the mechanical mode, and ``tensor`` concatenates
dims in that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import DimensionMismatchError, InvalidDimensionError

__all__ = [
    "HilbertSpace",
    "Operator",
    "Ket",
    "DensityMatrix",
    "destroy",
    "create",
    "number",
    "identity",
    "tensor",
    "expect",
    "fock",
    "ket2dm",
]

#: tolerance on ket norms (see Ket)
NORM_TOL = 1e-12
#: tolerances on physical density matrices
TRACE_TOL = 1e-10
HERM_TOL = 1e-10
POSITIVITY_TOL = 1e-8


@dataclass(frozen=True)
class HilbertSpace:
    """Ordered truncation dimensions of the subsystems."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise InvalidDimensionError(f"dims must be positive, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def total(self) -> int:
        return math.prod(self.dims)

    def __mul__(self, other: "HilbertSpace") -> "HilbertSpace":
        return HilbertSpace(self.dims + other.dims)


def _canonical(data) -> sp.csr_matrix:
    """Bring a sparse/dense matrix to canonical complex CSR form."""
    m = sp.csr_matrix(data, dtype=np.complex128)
    m.sum_duplicates()
    m.eliminate_zeros()
    m.sort_indices()
    return m


@dataclass(frozen=True)
class Operator:
    """A sparse operator tagged with the space it acts on."""

    space: HilbertSpace
    data: sp.csr_matrix = field(repr=False)

    def __post_init__(self):
        data = _canonical(self.data)
        n = self.space.total
        if data.shape != (n, n):
            raise DimensionMismatchError(
                f"matrix shape {data.shape} does not match space total {n}"
            )
        object.__setattr__(self, "data", data)

    def dag(self) -> "Operator":
        return Operator(self.space, self.data.conjugate().transpose())

    def to_array(self) -> np.ndarray:
        return self.data.toarray()

    @property
    def nnz(self) -> int:
        return self.data.nnz

    def _check_space(self, other: "Operator"):
        if self.space.dims != other.space.dims:
            raise DimensionMismatchError(
                f"operator spaces differ: {self.space.dims} vs {other.space.dims}"
            )

    def __add__(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.data + other.data)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.data - other.data)

    def __neg__(self) -> "Operator":
        return Operator(self.space, -self.data)

    def __mul__(self, scalar) -> "Operator":
        if isinstance(scalar, Operator):
            raise TypeError("use @ for operator products")
        return Operator(self.space, self.data * complex(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.data @ other.data)

    def same_elements(self, other: "Operator") -> bool:
        """Exact (bit-level) equality of the canonical sparse data."""
        a, b = self.data, other.data
        return (
            self.space.dims == other.space.dims
            and np.array_equal(a.indptr, b.indptr)
            and np.array_equal(a.indices, b.indices)
            and np.array_equal(a.data, b.data)
        )


@dataclass(frozen=True)
class Ket:
    """Dense state vector on a Hilbert space."""

    space: HilbertSpace
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).ravel()
        if amps.shape != (self.space.total,):
            raise DimensionMismatchError(
                f"amplitude length {amps.shape[0]} does not match space total "
                f"{self.space.total}"
            )
        if np.linalg.norm(amps) > 1.0 + NORM_TOL:
            raise ValueError("ket norm exceeds 1")
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian unit-trace state, stored dense."""

    space: HilbertSpace
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.complex128)
        n = self.space.total
        if data.shape != (n, n):
            raise DimensionMismatchError(
                f"matrix shape {data.shape} does not match space total {n}"
            )
        object.__setattr__(self, "data", data)

    def trace(self) -> complex:
        return complex(np.trace(self.data))

    def herm_defect(self) -> float:
        """Max-norm of rho - rho^dagger."""
        return float(np.max(np.abs(self.data - self.data.conj().T), initial=0.0))

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(0.5 * (self.data + self.data.conj().T))[0])

    def validate(self, positivity_tol: float = POSITIVITY_TOL):
        """Raise if the state violates trace, Hermiticity, or positivity."""
        if abs(self.trace() - 1.0) > TRACE_TOL:
            raise ValueError(f"trace deviates from 1 by {abs(self.trace() - 1.0):.3e}")
        if self.herm_defect() > HERM_TOL:
            raise ValueError(f"Hermiticity defect {self.herm_defect():.3e}")
        lam = self.min_eigenvalue()
        if lam < -positivity_tol:
            raise ValueError(f"negative eigenvalue {lam:.3e}")


def destroy(n: int) -> Operator:
    """Annihilation operator on an n-level truncated Fock space.

    Matrix elements <m-1|a|m> = sqrt(m) for 1 <= m <= n-1.
    """
    if n < 2:
        raise InvalidDimensionError(f"destroy needs n >= 2, got {n}")
    return Operator(
        HilbertSpace((n,)),
        sp.diags_array(np.sqrt(np.arange(1, n, dtype=np.float64)), offsets=1),
    )


def create(n: int) -> Operator:
    """Creation operator, the adjoint of destroy(n)."""
    if n < 2:
        raise InvalidDimensionError(f"create needs n >= 2, got {n}")
    return destroy(n).dag()


def number(n: int) -> Operator:
    """Number operator diag(0, 1, ..., n-1)."""
    if n < 1:
        raise InvalidDimensionError(f"number needs n >= 1, got {n}")
    return Operator(
        HilbertSpace((n,)),
        sp.diags_array(np.arange(n, dtype=np.float64)),
    )


def identity(n: int) -> Operator:
    if n < 1:
        raise InvalidDimensionError(f"identity needs n >= 1, got {n}")
    return Operator(HilbertSpace((n,)), sp.eye_array(n))


def tensor(a: Operator, b: Operator) -> Operator:
    """Kronecker product; subsystem order is (a, b), cavity first."""
    return Operator(a.space * b.space, sp.kron(a.data, b.data, format="csr"))


def expect(a: Operator, rho: DensityMatrix) -> complex:
    """Tr(A rho), evaluated over the nonzeros of A only."""
    if a.space.dims != rho.space.dims:
        raise DimensionMismatchError(
            f"operator space {a.space.dims} does not match state space "
            f"{rho.space.dims}"
        )
    return complex(a.data.multiply(rho.data.T).sum())


def fock(space: HilbertSpace, *levels: int) -> Ket:
    """Fock basis ket |n0, n1, ...> with one level per subsystem."""
    if len(levels) != len(space.dims):
        raise DimensionMismatchError(
            f"expected {len(space.dims)} levels, got {len(levels)}"
        )
    idx = 0
    for lev, dim in zip(levels, space.dims):
        if not 0 <= lev < dim:
            raise InvalidDimensionError(f"level {lev} out of range for dim {dim}")
        idx = idx * dim + lev
    amps = np.zeros(space.total, dtype=np.complex128)
    amps[idx] = 1.0
    return Ket(space, amps)


def ket2dm(psi: Ket) -> DensityMatrix:
    return DensityMatrix(psi.space, np.outer(psi.amplitudes, psi.amplitudes.conj()))
