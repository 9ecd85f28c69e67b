"""Steady states of the Liouvillian via the trace-pinned linear system.

The singular system L vec(rho) = 0 is made invertible by adding a matrix M
whose only action is M vec(rho) = (Tr rho, 0, ...)^T, and solving

    (L + M) vec(rho) = (w, 0, ...)^T,

where w scales the trace row to the size of L's entries (an estimate of
||L||_inf) so the pinned system stays well conditioned.  The residual of a
solution is always reported against the original L.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import DimensionMismatchError, SolverFailureError
from .model import SuperOperator, trace_row, unvec, vec
from .operators import DensityMatrix, HilbertSpace

__all__ = [
    "SteadyStateReport",
    "solve_steady",
    "dense_nullspace_oracle",
    "DIRECT",
    "ITERATIVE",
]

DIRECT = "direct-factorization"
ITERATIVE = "iterative-krylov"

#: default residual tolerances per solver
DEFAULT_TOL = {DIRECT: 1e-10, ITERATIVE: 1e-8}

#: dense-oracle feasibility guard on the Hilbert-space dimension
ORACLE_MAX_DIM = 40


@dataclass(frozen=True)
class SteadyStateReport:
    """Solved state plus solve diagnostics."""

    rho: DensityMatrix
    residual: float
    solver: str
    iterations: int = 0
    herm_correction: float = 0.0
    trace_correction: float = 0.0
    solve_time: float = 0.0


def _pinned_system(L: SuperOperator):
    """(L + M, rhs) with the scaled trace row added onto row 0."""
    n = L.space.total
    data = L.data
    # max absolute row sum, the inf-norm of L
    weight = float(abs(data).sum(axis=1).max())
    if weight == 0.0:
        weight = 1.0
    pin = sp.csr_matrix(
        (np.full(n, weight, dtype=np.complex128),
         (np.zeros(n, dtype=int), np.arange(n) * (n + 1))),
        shape=data.shape,
    )
    rhs = np.zeros(data.shape[0], dtype=np.complex128)
    rhs[0] = weight
    return (data + pin).tocsc(), rhs


def _finalize(L, v, solver, iterations, tol, t0):
    n = L.space.total
    trace = trace_row(n) @ v
    tr = complex(trace[0])
    if tr == 0 or not np.isfinite(tr):
        raise SolverFailureError("solution has zero or non-finite trace", residual=None)
    v = v / tr
    rho = unvec(v, n)
    herm_corr = float(np.max(np.abs(rho - rho.conj().T))) / 2.0
    rho = 0.5 * (rho + rho.conj().T)
    tr2 = float(np.real(np.trace(rho)))
    rho = rho / tr2
    v_final = vec(rho)
    residual = float(np.max(np.abs(L.data @ v_final)))
    if residual > tol:
        raise SolverFailureError(
            f"steady-state residual {residual:.3e} exceeds tol {tol:.1e}",
            residual=residual,
        )
    return SteadyStateReport(
        rho=DensityMatrix(L.space, rho),
        residual=residual,
        solver=solver,
        iterations=iterations,
        herm_correction=herm_corr,
        trace_correction=abs(tr2 - 1.0),
        solve_time=time.perf_counter() - t0,
    )


def solve_steady(
    L: SuperOperator,
    method: str = DIRECT,
    tol: float | None = None,
    maxiter: int = 2000,
    drop_tol: float = 1e-5,
    fill_factor: float = 40.0,
) -> SteadyStateReport:
    """Solve L rho = 0 with unit trace.

    method is ``DIRECT`` (sparse LU, the default) or ``ITERATIVE``
    (LGMRES with an incomplete-LU preconditioner, for solves too large to
    factorize).  The returned state is symmetrized, renormalized, and
    carries the inf-norm residual of the original L.
    """
    if method not in (DIRECT, ITERATIVE):
        raise ValueError(f"unknown method {method!r}")
    if tol is None:
        tol = DEFAULT_TOL[method]
    if tol <= 0:
        raise ValueError("tol must be positive")
    dim = L.data.shape[0]
    n = int(round(math.sqrt(dim)))
    if n * n != dim:
        raise DimensionMismatchError(f"superoperator dimension {dim} not a square")

    t0 = time.perf_counter()
    A, rhs = _pinned_system(L)

    if method == DIRECT:
        try:
            lu = spla.splu(A, permc_spec="COLAMD")
            v = lu.solve(rhs)
        except (RuntimeError, MemoryError) as exc:
            raise SolverFailureError(f"sparse LU failed: {exc}", residual=None)
        return _finalize(L, v, DIRECT, 0, tol, t0)

    count = {"n": 0}

    def _tick(_):
        count["n"] += 1

    try:
        prec = spla.spilu(A, drop_tol=drop_tol, fill_factor=fill_factor)
        M = spla.LinearOperator(A.shape, matvec=prec.solve)
    except (RuntimeError, MemoryError) as exc:
        raise SolverFailureError(f"ILU preconditioner failed: {exc}", residual=None)
    v, info = spla.lgmres(
        A, rhs, M=M, rtol=tol * 1e-3, atol=0.0, maxiter=maxiter, callback=_tick
    )
    if info != 0:
        best = float(np.max(np.abs(L.data @ (v / max(abs(trace_row(n) @ v)[0], 1e-300)))))
        raise SolverFailureError(
            f"LGMRES did not converge (info={info})", residual=best
        )
    return _finalize(L, v, ITERATIVE, count["n"], tol, t0)


def dense_nullspace_oracle(L: SuperOperator) -> DensityMatrix:
    """Independent small-system check: dense eigenvector of eigenvalue ~0.

    Guarded to Hilbert-space dimension <= 40 (dense 1600 x 1600 at most).
    """
    n = L.space.total
    if n > ORACLE_MAX_DIM:
        raise DimensionMismatchError(
            f"dense oracle limited to dimension {ORACLE_MAX_DIM}, got {n}"
        )
    w, vecs = np.linalg.eig(L.data.toarray())
    v = vecs[:, np.argmin(np.abs(w))]
    rho = unvec(v, n)
    rho = 0.5 * (rho + rho.conj().T)
    rho = rho / np.real(np.trace(rho))
    return DensityMatrix(L.space, rho)
