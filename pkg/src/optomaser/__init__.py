"""Two-mode optomechanical simulator: quantum steady states, semiclassical
limit cycles, and Wigner-function nonclassicality diagnostics."""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    IntegrationFailureError,
    InvalidDimensionError,
    OptomaserError,
    SolverFailureError,
    UndefinedFanoError,
    WindowTooSmallError,
)
from .model import (
    SuperOperator,
    SystemParams,
    dissipator_cavity,
    dissipator_mech,
    hamiltonian,
    liouvillian,
)
from .operators import (
    DensityMatrix,
    HilbertSpace,
    Ket,
    Operator,
    create,
    destroy,
    expect,
    fock,
    identity,
    ket2dm,
    number,
    tensor,
)
from .steadystate import (
    DIRECT,
    ITERATIVE,
    SteadyStateReport,
    dense_nullspace_oracle,
    solve_steady,
)

__all__ = [
    "__version__",
    "ConvergenceError",
    "DimensionMismatchError",
    "IntegrationFailureError",
    "InvalidDimensionError",
    "OptomaserError",
    "SolverFailureError",
    "UndefinedFanoError",
    "WindowTooSmallError",
    "SuperOperator",
    "SystemParams",
    "dissipator_cavity",
    "dissipator_mech",
    "hamiltonian",
    "liouvillian",
    "DensityMatrix",
    "HilbertSpace",
    "Ket",
    "Operator",
    "create",
    "destroy",
    "expect",
    "fock",
    "identity",
    "ket2dm",
    "number",
    "tensor",
    "DIRECT",
    "ITERATIVE",
    "SteadyStateReport",
    "dense_nullspace_oracle",
    "solve_steady",
]
