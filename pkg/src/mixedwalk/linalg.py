"""Dense complex linear algebra kernels.

Everything here operates on square ``numpy`` arrays of ``complex128``.
The algorithms are deliberately self-contained: LU with partial pivoting
for determinants and solves, a trace recurrence for characteristic
polynomials, and cyclic complex Jacobi rotations for Hermitian
eigenvalues.  All of it targets desk-scale matrices (n up to a few dozen),
where clarity and cross-checkability beat speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, DimensionError, InternalConsistencyError

HERMITICITY_TOL = 1e-10
UNITARY_TOL = 1e-10
EIGENVALUE_GROUP_TOL = 1e-7
IDENTITY_TOL = 1e-8
TRACE_SUM_TOL = 1e-9
JACOBI_OFFDIAG_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
RENORMALIZE_EVERY = 64


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionError(f"expected a matrix, got ndim={a.ndim}")
    return a


def _require_square(m: np.ndarray) -> int:
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m.shape[0]


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def hermitian_defect(m) -> float:
    """Largest entrywise deviation of M from its conjugate transpose."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return math.inf
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - m.conj().T)))


def _lu_decompose(m: np.ndarray):
    """In-place LU with partial pivoting; returns (lu, pivots, sign)."""
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    pivots = list(range(n))
    sign = 1
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) == 0.0:
            continue
        if p != k:
            a[[k, p], :] = a[[p, k], :]
            pivots[k], pivots[p] = pivots[p], pivots[k]
            sign = -sign
        a[k + 1 :, k] /= a[k, k]
        a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k], a[k, k + 1 :])
    return a, pivots, sign


def determinant(m) -> complex:
    """Determinant via LU with partial pivoting."""
    m = as_matrix(m)
    n = _require_square(m)
    if n == 0:
        return complex(1.0)
    lu, _, sign = _lu_decompose(m)
    return complex(sign * np.prod(np.diag(lu)))


def solve(a, b) -> np.ndarray:
    """Solve A X = B through the LU factorization."""
    a, b = as_matrix(a), as_matrix(b)
    n = _require_square(a)
    if b.shape[0] != n:
        raise DimensionError(f"incompatible right-hand side {b.shape}")
    lu, pivots, _ = _lu_decompose(a)
    x = b[pivots, :].astype(complex)
    for k in range(n):  # forward substitution, unit lower triangle
        x[k + 1 :, :] -= np.outer(lu[k + 1 :, k], x[k, :])
    for k in range(n - 1, -1, -1):  # back substitution
        if abs(lu[k, k]) == 0.0:
            raise ContractViolationError("matrix is singular to working precision")
        x[k, :] /= lu[k, k]
        x[:k, :] -= np.outer(lu[:k, k], x[k, :])
    return x


def inverse(m) -> np.ndarray:
    m = as_matrix(m)
    n = _require_square(m)
    return solve(m, np.eye(n, dtype=complex))


def charpoly(m) -> np.ndarray:
    """Coefficients of det(lambda*I - M), stored low-to-high, monic.

    Uses the trace recurrence (one matrix product per degree), which is
    exact in exact arithmetic and adequate in double precision at this
    scale.
    """
    m = as_matrix(m)
    n = _require_square(m)
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = 1.0
    eye = np.eye(n, dtype=complex)
    am = np.zeros((n, n), dtype=complex)
    for k in range(1, n + 1):
        am = m @ (am + coeffs[n - k + 1] * eye)
        coeffs[n - k] = -np.trace(am) / k
    return coeffs


def polyval(coeffs, x: complex) -> complex:
    """Evaluate a low-to-high coefficient polynomial by Horner's rule."""
    acc = complex(0.0)
    for c in reversed(np.asarray(coeffs, dtype=complex)):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as (value, multiplicity) pairs, sorted by (re, im)."""

    pairs: tuple[tuple[complex, int], ...]

    @classmethod
    def from_values(cls, values, tol: float = EIGENVALUE_GROUP_TOL) -> "Spectrum":
        vals = sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag))
        pairs: list[tuple[complex, int]] = []
        group: list[complex] = []
        for v in vals:
            if group and abs(v - group[-1]) > tol:
                pairs.append((sum(group) / len(group), len(group)))
                group = []
            group.append(v)
        if group:
            pairs.append((sum(group) / len(group), len(group)))
        return cls(tuple(pairs))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    def expand(self) -> list[complex]:
        out: list[complex] = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def real_values(self) -> list[float]:
        return [v.real for v in self.expand()]


def hermitian_eigenvalues(m, group_tol: float = EIGENVALUE_GROUP_TOL) -> Spectrum:
    """Real eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    The input must be Hermitian to ``HERMITICITY_TOL``.  Eigenvalues are
    grouped into multiplicities with ``group_tol`` and their sum is checked
    against the trace.
    """
    m = as_matrix(m)
    n = _require_square(m)
    defect = hermitian_defect(m)
    if defect > HERMITICITY_TOL:
        raise ContractViolationError(
            f"matrix is not Hermitian (defect {defect:.3e} > {HERMITICITY_TOL:.0e})"
        )
    if n == 0:
        return Spectrum(())
    a = (m + m.conj().T) / 2.0  # kill the sub-tolerance defect exactly
    for _ in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(sum(abs(a[p, q]) ** 2 + abs(a[q, p]) ** 2
                            for p in range(n - 1) for q in range(p + 1, n)))
        if off < JACOBI_OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = a[p, q]
                habs = abs(beta)
                if habs < 1e-30:
                    continue
                phase = beta / habs
                theta = (a[q, q].real - a[p, p].real) / (2.0 * habs)
                # annihilation condition: t^2 - 2*theta*t - 1 = 0, small root
                sign = 1.0 if theta >= 0 else -1.0
                t = -sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(phase) * col_q
                a[:, q] = -s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * phase * row_q
                a[q, :] = -s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    eigs = [float(x) for x in np.diag(a).real]
    if abs(sum(eigs) - np.trace(m).real) > TRACE_SUM_TOL:
        raise InternalConsistencyError(
            "eigenvalue sum drifted away from the trace"
        )
    return Spectrum.from_values(eigs, tol=group_tol)


def matrix_power_step(u, acc) -> np.ndarray:
    """One powering step: returns acc @ u."""
    u, acc = as_matrix(u), as_matrix(acc)
    if u.shape != acc.shape or u.shape[0] != u.shape[1]:
        raise DimensionError(f"power step needs equal square shapes, got {acc.shape} and {u.shape}")
    return acc @ u


def distance_to_identity(m) -> float:
    """Max entrywise |M - I|."""
    m = as_matrix(m)
    n = _require_square(m)
    if n == 0:
        return 0.0
    return float(np.max(np.abs(m - np.eye(n, dtype=complex))))


def unitary_defect(m) -> float:
    m = as_matrix(m)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0], dtype=complex))))


def is_unitary(m, tol: float = UNITARY_TOL) -> bool:
    return unitary_defect(m) <= tol


def project_to_unitary(m) -> np.ndarray:
    """One Newton step toward the nearest unitary: X <- (X + (X*)^-1) / 2.

    Used to renormalize long power chains; a single step is plenty when the
    drift is small.
    """
    m = as_matrix(m)
    _require_square(m)
    return (m + inverse(m.conj().T)) / 2.0
