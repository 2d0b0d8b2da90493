"""Explicit matrix families with known sharpness behaviour.

These are the fixed constructions the probes, witnesses and tests keep
returning to: the rank-one block family attaining the 1/4 constant for
the sum case, its Schur-product analogue, the dominance and
normal-Schur sharpness pairs, the orthogonal-projection pair behind the
1/2 triangle constant, and the angle-parametrized projection pair with
unbounded second-eigenvalue ratio.
"""
from __future__ import annotations

import numpy as np

from .blocks import PsdBlock, make_block
from .errors import DegenerateAngle, NonpositiveParam
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = [
    "niceex_block",
    "schur_sharp_block",
    "dominance_pair",
    "normal_schur_pair",
    "referee_projections",
    "referee_contractions",
    "projection_pair",
]


def niceex_block(t, tol: ToleranceCfg = DEFAULT_TOL) -> PsdBlock:
    """Rank-one block with A = diag(t, 0), X = e1 e2^T, B = diag(0, 1/t)."""
    if t <= 0:
        raise NonpositiveParam(f"family parameter must be positive, got {t}")
    A = np.diag([t, 0.0])
    X = np.array([[0.0, 1.0], [0.0, 0.0]])
    B = np.diag([0.0, 1.0 / t])
    return make_block(A, X, B, tol)


def schur_sharp_block(t, tol: ToleranceCfg = DEFAULT_TOL) -> PsdBlock:
    """Schur-case analogue: A = B = diag(sqrt(t), 1/sqrt(t)), X the swap."""
    if t <= 0:
        raise NonpositiveParam(f"family parameter must be positive, got {t}")
    D = np.diag([np.sqrt(t), 1.0 / np.sqrt(t)])
    X = np.array([[0.0, 1.0], [1.0, 0.0]])
    return make_block(D, X, D, tol)


def dominance_pair():
    """The Hermitian pair (S, T) with +-S <= T attaining the 1/4 constant."""
    T = np.diag([2.0, 0.5]).astype(complex)
    S = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    return S, T


def normal_schur_pair():
    """The normal pair (A, B) attaining the 1/4 constant for Schur products."""
    A = np.array([[2.0, 1.0], [1.0, 0.5]], dtype=complex)
    B = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    return A, B


def referee_projections():
    """Two orthogonal rank-one projections P, Q in M_3 and the sign matrix V."""
    s3 = np.sqrt(3.0)
    P = 0.5 * np.array(
        [
            [1.0, 0.5, s3 / 2],
            [0.5, 0.25, s3 / 4],
            [s3 / 2, s3 / 4, 0.75],
        ],
        dtype=complex,
    )
    Q = 0.5 * np.array(
        [
            [1.0, -0.5, -s3 / 2],
            [-0.5, 0.25, s3 / 4],
            [-s3 / 2, s3 / 4, 0.75],
        ],
        dtype=complex,
    )
    V = np.diag([1.0, 1.0, -1.0]).astype(complex)
    return P, Q, V


def referee_contractions():
    """The contraction pair C1 = P - Q, C2 = V C1 V* attaining the 1/2 constant."""
    P, Q, V = referee_projections()
    C1 = P - Q
    C2 = V @ C1 @ V.conj().T
    return C1, C2


def projection_pair(a):
    """Rank-one projections P = e1 e1^T and Q onto (cos a, sin a)."""
    if not 0.0 < a < np.pi:
        raise DegenerateAngle(f"angle must lie strictly in (0, pi), got {a}")
    P = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    c, s = np.cos(a), np.sin(a)
    Q = np.array([[c * c, c * s], [c * s, s * s]], dtype=complex)
    return P, Q
