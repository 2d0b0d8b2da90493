"""Construction, validation and sampling of 2n x 2n PSD partitioned matrices.

The carrier type is :class:`PsdBlock`, holding the four named n x n
blocks of [[A, X], [X*, B]].  Every constructor validates positive
semidefiniteness eagerly and records the achieved margin, so downstream
code may assume PSD without re-checking.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, DominanceViolated, NotPsd
from .linalg import (
    as_matrix,
    direct_sum,
    hermitian_part,
    loewner_leq,
    matrix_abs,
    max_abs,
    require_hermitian,
)
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = [
    "PsdBlock",
    "make_block",
    "gram_block",
    "gram_pair_block",
    "polar_block",
    "dominance_block",
    "hermitian_dilation",
    "sample_psd_block",
]


@dataclass(frozen=True)
class PsdBlock:
    """A validated 2n x 2n PSD matrix with named blocks A, X, B."""

    A: np.ndarray
    X: np.ndarray
    B: np.ndarray
    n: int
    psd_margin: float = field(default=0.0)

    def assembled(self):
        n = self.n
        M = np.zeros((2 * n, 2 * n), dtype=complex)
        M[:n, :n] = self.A
        M[:n, n:] = self.X
        M[n:, :n] = self.X.conj().T
        M[n:, n:] = self.B
        return M

    def swapped(self):
        """The congruent block [[B, X*], [X, A]]."""
        return PsdBlock(self.B, self.X.conj().T, self.A, self.n, self.psd_margin)


def make_block(A, X, B, tol: ToleranceCfg = DEFAULT_TOL):
    A = as_matrix(A)
    X = as_matrix(X)
    B = as_matrix(B)
    if not (A.shape == X.shape == B.shape):
        raise DimensionMismatch(
            f"blocks must share one dimension, got {A.shape}, {X.shape}, {B.shape}"
        )
    n = A.shape[0]
    # Fast preconditions: the diagonal blocks must be PSD on their own.
    for name, M in (("A", A), ("B", B)):
        H = require_hermitian(M, tol)
        lo = float(np.linalg.eigvalsh(H)[0])
        if lo < -tol.rel * max(1.0, max_abs(H)):
            raise NotPsd(f"diagonal block {name} is not PSD (min eig {lo:.3e})", min_eig=lo)
    blk = PsdBlock(hermitian_part(A), X, hermitian_part(B), n)
    M = hermitian_part(blk.assembled())
    w = np.linalg.eigvalsh(M)
    margin = float(w[0])
    if margin < -tol.rel * max(1.0, float(np.max(np.abs(w)))):
        raise NotPsd(f"assembled block is not PSD (min eig {margin:.3e})", min_eig=margin)
    return PsdBlock(blk.A, blk.X, blk.B, n, margin)


def gram_block(pairs, tol: ToleranceCfg = DEFAULT_TOL):
    """Gram block from factor pairs: A = sum Ai* Ai, X = sum Ai* Bi, B = sum Bi* Bi."""
    pairs = [(as_matrix(a), as_matrix(b)) for a, b in pairs]
    if not pairs:
        raise DimensionMismatch("gram_block needs a nonempty factor list")
    d = pairs[0][0].shape[0]
    for a, b in pairs:
        if a.shape != (d, d) or b.shape != (d, d):
            raise DimensionMismatch("all factor pairs must share one dimension")
    A = sum(a.conj().T @ a for a, _ in pairs)
    X = sum(a.conj().T @ b for a, b in pairs)
    B = sum(b.conj().T @ b for _, b in pairs)
    return make_block(A, X, B, tol)


def gram_pair_block(A, B, tol: ToleranceCfg = DEFAULT_TOL):
    """Single-pair Gram block [[A*A, A*B], [B*A, B*B]]."""
    return gram_block([(A, B)], tol)


def polar_block(Z, tol: ToleranceCfg = DEFAULT_TOL):
    """The PSD block [[|Z*|, Z], [Z*, |Z|]] from the polar decomposition of Z."""
    Z = as_matrix(Z)
    return make_block(matrix_abs(Z.conj().T), Z, matrix_abs(Z), tol)


def dominance_block(S, T, tol: ToleranceCfg = DEFAULT_TOL):
    """The PSD block [[T, S], [S, T]] available whenever +-S <= T."""
    S = require_hermitian(S, tol)
    T = require_hermitian(T, tol)
    if S.shape != T.shape:
        raise DimensionMismatch("dominance_block needs equal dimensions")
    for sign, label in ((1.0, "+S <= T"), (-1.0, "-S <= T")):
        ok, margin = loewner_leq(sign * S, T, tol)
        if not ok:
            raise DominanceViolated(
                f"dominance {label} fails by {margin:.3e}", side=label, margin=margin
            )
    return make_block(T, S, T, tol)


def hermitian_dilation(A):
    """The 2n x 2n Hermitian dilation [[0, A], [A*, 0]]."""
    A = as_matrix(A)
    n = A.shape[0]
    M = np.zeros((2 * n, 2 * n), dtype=complex)
    M[:n, n:] = A
    M[n:, :n] = A.conj().T
    return M


def ginibre(rows, cols, rng):
    """iid standard complex Gaussian matrix."""
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def sample_psd_block(n, rank, rng_seed, tol: ToleranceCfg = DEFAULT_TOL):
    """Random PSD block: partition of G*G with G a rank x 2n complex Ginibre matrix.

    Deterministic for a fixed seed; the rank parameter deliberately
    exercises the singular cases the semidefinite hypotheses allow.
    """
    if not 1 <= rank <= 2 * n:
        raise ValueError(f"rank must be in [1, {2 * n}], got {rank}")
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    G = ginibre(rank, 2 * n, rng)
    M = G.conj().T @ G
    return make_block(M[:n, :n], M[:n, n:], M[n:, n:], tol)


def _dilation_abs(A):
    """|[[0, A], [A*, 0]]| computed directly: |A*| (+) |A|."""
    return direct_sum(matrix_abs(A.conj().T), matrix_abs(A))
