"""Peres-Horodecki negativity for two-qubit states.

Negativity here is -2 times the sum of the negative eigenvalues of the
partial transpose: 0 for separable states, 1 for maximally entangled ones.
X-shaped states admit a closed form; arbitrary 4x4 density matrices (as
produced by the brute-force oracle) go through an eigensolve.
"""

from __future__ import annotations

import math

import numpy as np

from .model import XState

# eigenvalues this close to zero are eigensolver noise, not entanglement
ZERO_EIGENVALUE_TOL = 1e-12

HERMITICITY_TOL = 1e-8


def negativity_x(state: XState) -> float:
    """Closed-form negativity of an X-shaped state.

    The partial transpose moves the coherence into the (|++>, |-->) block, so
    at most one eigenvalue can turn negative, and it does so exactly when the
    squared coherence exceeds pop_ee * pop_gg.
    """
    a, d, e = state.pop_ee, state.pop_gg, state.coherence
    if e * e > a * d:
        return math.sqrt((d - a) * (d - a) + 4.0 * e * e) - d - a
    return 0.0


def partial_transpose(rho: np.ndarray, atom: int = 1) -> np.ndarray:
    """Transpose the indices of one atom (0 = first, 1 = second) of a 4x4 matrix."""
    if atom not in (0, 1):
        raise ValueError(f"atom must be 0 or 1; got {atom!r}")
    r = np.asarray(rho).reshape(2, 2, 2, 2)
    axes = (0, 3, 2, 1) if atom == 1 else (2, 1, 0, 3)
    return r.transpose(axes).reshape(4, 4)


def negativity_general(rho: np.ndarray) -> float:
    """Negativity of an arbitrary two-qubit density matrix.

    Partial-transposes the second atom, diagonalizes, and returns -2 times
    the sum of the negative eigenvalues (the choice of atom does not matter).
    Rejects non-Hermitian input.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix; got shape {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > HERMITICITY_TOL:
        raise ValueError("density matrix must be Hermitian")
    eigs = np.linalg.eigvalsh(partial_transpose(rho, atom=1))
    negative = eigs[eigs < -ZERO_EIGENVALUE_TOL]
    return float(-2.0 * negative.sum())


def check_density_matrix(
    rho: np.ndarray,
    herm_tol: float = 1e-10,
    trace_tol: float = 1e-10,
    positivity_tol: float = 1e-10,
) -> np.ndarray:
    """Assert the two-qubit density-matrix invariants; returns rho unchanged.

    Hermitian within herm_tol, unit trace within trace_tol, eigenvalues above
    -positivity_tol.  Used by the tests on every producer of 4x4 states.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix; got shape {rho.shape}")
    herm = np.abs(rho - rho.conj().T).max()
    if herm > herm_tol:
        raise ValueError(f"not Hermitian: max asymmetry {herm:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"trace {tr} deviates from 1 by more than {trace_tol:.1e}")
    lo = np.linalg.eigvalsh(rho).min()
    if lo < -positivity_tol:
        raise ValueError(f"negative eigenvalue {lo:.3e}")
    return rho
