"""
Hermitian checks, eigenvalues, characteristic polynomials and cospectrality.
"""

import logging
from typing import Any, List, Union

import numpy as np

from ..constants import (
    CHAR_POLY_MAX_DIMENSION,
    CHAR_POLY_RESIDUE_TOLERANCE,
    COSPECTRAL_TOLERANCE,
    HERMITIAN_TOLERANCE,
)
from ..exceptions import (
    ComplexResidueError,
    DimensionMismatchError,
    DimensionTooLargeError,
    NoConvergenceError,
    NotHermitianError,
    ValidationError,
)
from ..models.distance_matrix import DistanceMatrix
from ..models.spectrum import CharPoly, Coefficient, Spectrum

logger = logging.getLogger(__name__)

MatrixLike = Union[DistanceMatrix, np.ndarray, Any]


def as_matrix(m: MatrixLike) -> np.ndarray:
    """
    Coerce a DistanceMatrix or array-like to a square complex128 array.

    Raises:
        ValidationError: If the input is not square
    """
    a = m.entries if isinstance(m, DistanceMatrix) else np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError("matrix", a.shape, "Matrix must be square")
    return a


def _scale(a: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0


def hermitian_deviation(m: MatrixLike) -> float:
    a = as_matrix(m)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def is_hermitian(m: MatrixLike, tol: float = HERMITIAN_TOLERANCE) -> bool:
    """
    True iff entry (v, u) is the conjugate of entry (u, v) for all pairs.

    The tolerance is relative to the largest entry modulus (at least 1).
    """
    a = as_matrix(m)
    return hermitian_deviation(a) <= tol * _scale(a)


def hermitian_eigenvalues(m: MatrixLike) -> Spectrum:
    """
    All eigenvalues of a Hermitian matrix, ascending.

    Raises:
        NotHermitianError: If the matrix fails the Hermitian gate
        NoConvergenceError: If LAPACK does not converge
    """
    a = as_matrix(m)
    if not is_hermitian(a, HERMITIAN_TOLERANCE):
        raise NotHermitianError(hermitian_deviation(a))

    n = a.shape[0]
    norm = _scale(a) * n
    # Exact Hermitian part so the solver sees a consistent lower triangle
    symmetric = (a + a.conj().T) / 2.0
    try:
        values = np.linalg.eigvalsh(symmetric)
    except np.linalg.LinAlgError as e:
        raise NoConvergenceError(None, str(e))

    return Spectrum.from_values(values, tolerance=1e-9 * (1.0 + norm))


def char_poly(m: MatrixLike) -> CharPoly:
    """
    Monic coefficients of det(xI - m) via the Faddeev-LeVerrier trace recurrence.

    Hermitian input yields real coefficients; the imaginary residue must stay
    below the rounding tolerance.

    Raises:
        DimensionTooLargeError: If n exceeds the conditioning guard
        ComplexResidueError: If a Hermitian input leaves a large imaginary residue
    """
    a = as_matrix(m)
    n = a.shape[0]
    if n > CHAR_POLY_MAX_DIMENSION:
        raise DimensionTooLargeError(n, CHAR_POLY_MAX_DIMENSION)

    identity = np.eye(n, dtype=np.complex128)
    coeffs: List[complex] = [1 + 0j]
    mk = identity
    for k in range(1, n + 1):
        product = a @ mk
        ck = -np.trace(product) / k
        coeffs.append(complex(ck))
        mk = product + ck * identity

    if not is_hermitian(a, HERMITIAN_TOLERANCE):
        return CharPoly(tuple(coeffs))

    residue = max((abs(c.imag) / max(1.0, abs(c)) for c in coeffs), default=0.0)
    if residue > CHAR_POLY_RESIDUE_TOLERANCE:
        raise ComplexResidueError(residue)
    real_coeffs: List[Coefficient] = [1.0] + [c.real for c in coeffs[1:]]
    return CharPoly(tuple(real_coeffs))


def cospectral(a: MatrixLike, b: MatrixLike, tol: float = COSPECTRAL_TOLERANCE) -> bool:
    """
    True iff the sorted spectra of two Hermitian matrices agree elementwise within tol.

    Raises:
        DimensionMismatchError: If the dimensions differ
        NotHermitianError: If either matrix is not Hermitian
    """
    left = as_matrix(a)
    right = as_matrix(b)
    if left.shape != right.shape:
        raise DimensionMismatchError(left.shape[0], right.shape[0])

    spectrum_a = hermitian_eigenvalues(left).as_array()
    spectrum_b = hermitian_eigenvalues(right).as_array()
    if not spectrum_a.size:
        return True
    gap = float(np.max(np.abs(spectrum_a - spectrum_b)))
    logger.debug(f"Spectral gap between matrices: {gap:.3e}")
    return gap <= tol
