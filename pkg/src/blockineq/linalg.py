"""Dense complex matrix primitives.

Everything downstream (block construction, witnesses, spectral checks,
extremal searches) is built on the handful of operations in this module:
eigendecomposition, SVD, matrix absolute value and square root, polar
factors, the matrix geometric mean, and order/majorization predicates.

Matrices are plain square complex numpy arrays.  Hermitian results are
always returned in explicitly symmetrized form (M + M*)/2.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionMismatch,
    InvalidSpectrum,
    NotHermitian,
    NotPsd,
    SingularInput,
)
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = [
    "Spectrum",
    "as_matrix",
    "hermitian_part",
    "require_hermitian",
    "require_psd",
    "is_unitary",
    "is_symmetry",
    "eigh",
    "eigvalsh",
    "svd",
    "matrix_abs",
    "sqrt_psd",
    "polar_unitary",
    "hermitian_sign_symmetry",
    "geometric_mean",
    "geo_mean_unitary_link",
    "loewner_leq",
    "weak_log_majorization",
    "kyfan_weak_majorization",
    "schur_product",
    "direct_sum",
    "diag_entries_desc",
    "max_abs",
]


class Spectrum:
    """Real eigenvalue/singular-value vector sorted non-increasing.

    ``lam(i)`` is 1-based and returns 0 for i beyond the natural
    dimension, matching the zero-padding convention used by the
    eigenvalue corollaries.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        v = np.sort(np.asarray(values, dtype=float))[::-1]
        if v.ndim != 1:
            raise InvalidSpectrum("spectrum must be a 1-d vector")
        if not np.all(np.isfinite(v)):
            raise InvalidSpectrum("spectrum entries must be finite")
        self.values = v

    @property
    def natural_dim(self):
        return len(self.values)

    def lam(self, i):
        if i < 1:
            raise IndexError("spectrum indices are 1-based")
        if i > len(self.values):
            return 0.0
        return float(self.values[i - 1])

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return f"Spectrum({self.values.tolist()})"


def as_matrix(M):
    """Coerce to a square complex matrix with finite entries."""
    A = np.asarray(M, dtype=complex)
    if A.ndim == 0:
        A = A.reshape(1, 1)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A.real)) or not np.all(np.isfinite(A.imag)):
        raise InvalidSpectrum("matrix entries must be finite")
    return A


def max_abs(M):
    M = np.asarray(M)
    return float(np.max(np.abs(M))) if M.size else 0.0


def hermitian_part(M):
    A = as_matrix(M)
    return (A + A.conj().T) / 2


def require_hermitian(M, tol: ToleranceCfg = DEFAULT_TOL):
    """Check Hermitianness entrywise and return the symmetrized matrix."""
    A = as_matrix(M)
    dev = max_abs(A - A.conj().T)
    if dev > tol.abs + tol.rel * max(1.0, max_abs(A)):
        raise NotHermitian(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return hermitian_part(A)


def require_psd(M, tol: ToleranceCfg = DEFAULT_TOL):
    """Check positive semidefiniteness and return the symmetrized matrix."""
    A = require_hermitian(M, tol)
    w = np.linalg.eigvalsh(A)
    lo, hi = float(w[0]), float(w[-1])
    if lo < -tol.rel * max(1.0, hi):
        raise NotPsd(f"matrix is not PSD (min eigenvalue {lo:.3e})", min_eig=lo)
    return A


def is_unitary(V, tol: ToleranceCfg = DEFAULT_TOL):
    V = as_matrix(V)
    return max_abs(V @ V.conj().T - np.eye(V.shape[0])) <= tol.abs + tol.rel * 10


def is_symmetry(V, tol: ToleranceCfg = DEFAULT_TOL):
    V = as_matrix(V)
    return is_unitary(V, tol) and max_abs(V - V.conj().T) <= tol.abs + tol.rel * 10


def eigh(H, tol: ToleranceCfg = DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns (Spectrum, U) with eigenvalues sorted non-increasing and
    matching eigenvector columns, so H = U diag(lam) U*.
    """
    A = require_hermitian(H, tol)
    try:
        w, v = np.linalg.eigh(A)
    except np.linalg.LinAlgError as e:  # pragma: no cover - LAPACK failure
        raise ConvergenceError(f"eigensolver did not converge: {e}") from e
    return Spectrum(w), v[:, ::-1].copy()


def eigvalsh(H, tol: ToleranceCfg = DEFAULT_TOL):
    """Spectrum of a Hermitian matrix, sorted non-increasing."""
    A = require_hermitian(H, tol)
    return Spectrum(np.linalg.eigvalsh(A))


def svd(M):
    """SVD M = U diag(sigma) W* with sigma sorted non-increasing."""
    A = as_matrix(M)
    try:
        U, s, Wh = np.linalg.svd(A)
    except np.linalg.LinAlgError as e:  # pragma: no cover
        raise ConvergenceError(f"SVD did not converge: {e}") from e
    return U, Spectrum(s), Wh.conj().T


def matrix_abs(M):
    """|M| = (M* M)^(1/2); its spectrum equals the singular values of M.

    (Skew-)Hermitian inputs are detected and handled through a single
    eigendecomposition of M (resp. iM) instead of squaring, which avoids
    the sqrt(eps) noise floor near zero eigenvalues and keeps |M|
    consistent with the sign symmetry of the same matrix.
    """
    A = as_matrix(M)
    scale = max(1.0, max_abs(A))
    if max_abs(A - A.conj().T) <= 1e-14 * scale:
        w, v = np.linalg.eigh(hermitian_part(A))
    elif max_abs(A + A.conj().T) <= 1e-14 * scale:
        w, v = np.linalg.eigh(hermitian_part(1j * A))
    else:
        # General case through the SVD: |A| = W diag(sigma) W*.  Forming
        # A*A first would square the condition number and leave
        # sqrt(eps)-level noise on the zero singular values.
        _, s, Wh = np.linalg.svd(A)
        return hermitian_part((Wh.conj().T * s) @ Wh)
    return hermitian_part((v * np.abs(w)) @ v.conj().T)


def sqrt_psd(P, tol: ToleranceCfg = DEFAULT_TOL):
    """PSD square root; eigenvalues negative within tolerance are clamped."""
    A = require_psd(P, tol)
    w, v = np.linalg.eigh(A)
    w = np.sqrt(np.clip(w, 0.0, None))
    return hermitian_part((v * w) @ v.conj().T)


def polar_unitary(M):
    """Unitary polar factor U with M = U |M|.

    For singular M the null directions are completed deterministically
    from the SVD bases, so M = U |M| holds for every square M.
    """
    U, _, W = svd(M)
    return U @ W.conj().T


def hermitian_sign_symmetry(H, tol: ToleranceCfg = DEFAULT_TOL):
    """Sign symmetry V = sum sign(lam_i) u_i u_i* of a Hermitian matrix.

    Uses sign(0) := +1, so the result is a symmetry (V = V* = V^-1) even
    for singular H; it satisfies H = V |H| = |H| V within tolerance.
    """
    A = require_hermitian(H, tol)
    w, v = np.linalg.eigh(A)
    cut = tol.abs * max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    signs = np.where(w < -cut, -1.0, 1.0)
    return hermitian_part((v * signs) @ v.conj().T)


def _inv_sqrt_psd(A):
    w, v = np.linalg.eigh(A)
    w = np.clip(w, 0.0, None)
    inv = np.where(w > 0, w, 1.0) ** -0.5
    inv = np.where(w > 0, inv, 0.0)
    return hermitian_part((v * inv) @ v.conj().T)


def geometric_mean(A, B, tol: ToleranceCfg = DEFAULT_TOL):
    """Matrix geometric mean A # B.

    For positive definite A this is A^(1/2) (A^(-1/2) B A^(-1/2))^(1/2)
    A^(1/2).  Singular inputs are handled by the continuous extension
    (A + eps I) # (B + eps I) with eps = 1e-12 * max(1, lam_max(A),
    lam_max(B)).
    """
    A = require_psd(A, tol)
    B = require_psd(B, tol)
    if A.shape != B.shape:
        raise DimensionMismatch("geometric mean needs equal dimensions")
    wa = np.linalg.eigvalsh(A)
    wb = np.linalg.eigvalsh(B)
    scale = max(1.0, float(wa[-1]), float(wb[-1]))
    eps = 1e-12 * scale
    if wa[0] < eps or wb[0] < eps:
        n = A.shape[0]
        A = A + eps * np.eye(n)
        B = B + eps * np.eye(n)
    w, v = np.linalg.eigh(A)
    w = np.clip(w, eps, None)
    sq = hermitian_part((v * np.sqrt(w)) @ v.conj().T)
    isq = hermitian_part((v * (w**-0.5)) @ v.conj().T)
    mid = hermitian_part(isq @ B @ isq)
    wm, vm = np.linalg.eigh(mid)
    root = hermitian_part((vm * np.sqrt(np.clip(wm, 0.0, None))) @ vm.conj().T)
    return hermitian_part(sq @ root @ sq)


def geo_mean_unitary_link(A, B, tol: ToleranceCfg = DEFAULT_TOL):
    """The unitary W with A # B = A^(1/2) W B^(1/2) for definite A, B."""
    A = require_psd(A, tol)
    B = require_psd(B, tol)
    wa = np.linalg.eigvalsh(A)
    wb = np.linalg.eigvalsh(B)
    if wa[0] <= tol.rel * max(1.0, wa[-1]) or wb[0] <= tol.rel * max(1.0, wb[-1]):
        raise SingularInput("geo_mean_unitary_link requires positive definite inputs")
    G = geometric_mean(A, B, tol)
    return _inv_sqrt_psd(A) @ G @ _inv_sqrt_psd(B)


def loewner_leq(L, R, tol: ToleranceCfg = DEFAULT_TOL):
    """Loewner-order test L <= R.

    Returns (pass, margin) with margin = lam_min(R - L); pass iff
    margin >= -tol.rel * max(1, ||R - L||_op).
    """
    Lh = require_hermitian(L, tol)
    Rh = require_hermitian(R, tol)
    if Lh.shape != Rh.shape:
        raise DimensionMismatch("loewner_leq needs equal dimensions")
    w = np.linalg.eigvalsh(Rh - Lh)
    margin = float(w[0])
    opnorm = float(np.max(np.abs(w))) if w.size else 0.0
    return margin >= -tol.rel * max(1.0, opnorm), margin


def _desc_nonneg(x, tol: ToleranceCfg):
    v = x.values if isinstance(x, Spectrum) else np.sort(np.asarray(x, dtype=float))[::-1]
    if v.size and float(v[-1]) < -(tol.abs + tol.rel * max(1.0, float(np.max(np.abs(v))))):
        raise InvalidSpectrum(f"negative spectrum entry {float(v[-1]):.3e}")
    return np.clip(v, 0.0, None)


def weak_log_majorization(x, y, tol: ToleranceCfg = DEFAULT_TOL):
    """x prec_wlog y: leading partial products of x bounded by those of y.

    Computed with log-sums; entries at noise level (relative to the top
    values) are treated as exact zeros.
    """
    xv = _desc_nonneg(x, tol)
    yv = _desc_nonneg(y, tol)
    n = max(len(xv), len(yv))
    xv = np.pad(xv, (0, n - len(xv)))
    yv = np.pad(yv, (0, n - len(yv)))
    top = max([1.0] + [float(v[0]) for v in (xv, yv) if len(v)])
    cut = tol.abs + tol.rel * top
    xv = np.where(xv <= cut, 0.0, xv)
    yv = np.where(yv <= cut, 0.0, yv)
    slack = math.log1p(tol.rel)
    lx = ly = 0.0
    for i in range(n):
        if xv[i] == 0.0:
            return True  # x partial products vanish from here on
        lx += math.log(xv[i])
        if yv[i] == 0.0:
            return False
        ly += math.log(yv[i])
        if lx > ly + slack:
            return False
    return True


def kyfan_weak_majorization(x, y, tol: ToleranceCfg = DEFAULT_TOL):
    """Weak majorization: all leading partial sums of x bounded by those of y."""
    xv = _desc_nonneg(x, tol)
    yv = _desc_nonneg(y, tol)
    n = max(len(xv), len(yv))
    cx = np.cumsum(np.pad(xv, (0, n - len(xv))))
    cy = np.cumsum(np.pad(yv, (0, n - len(yv))))
    return bool(np.all(cx <= cy + tol.abs + tol.rel * np.maximum(1.0, cy)))


def schur_product(A, B):
    """Entrywise (Schur/Hadamard) product."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch("Schur product needs equal shapes")
    return A * B


def direct_sum(A, B):
    """Block-diagonal embedding A (+) B."""
    A = as_matrix(A)
    B = as_matrix(B)
    n, m = A.shape[0], B.shape[0]
    out = np.zeros((n + m, n + m), dtype=complex)
    out[:n, :n] = A
    out[n:, n:] = B
    return out


def diag_entries_desc(H, tol: ToleranceCfg = DEFAULT_TOL):
    """Diagonal entries of a Hermitian matrix, sorted non-increasing."""
    A = require_hermitian(H, tol)
    return Spectrum(np.real(np.diag(A)))
