"""Block constructors: validation, named families, deterministic sampling."""
import numpy as np
import pytest

from blockineq import (
    dominance_block,
    gram_block,
    gram_pair_block,
    hermitian_dilation,
    make_block,
    polar_block,
    sample_psd_block,
)
from blockineq.blocks import ginibre
from blockineq.errors import (
    DegenerateAngle,
    DimensionMismatch,
    DominanceViolated,
    NonpositiveParam,
    NotPsd,
)
from blockineq.families import (
    dominance_pair,
    niceex_block,
    normal_schur_pair,
    projection_pair,
    referee_contractions,
    referee_projections,
    schur_sharp_block,
)
from blockineq.linalg import matrix_abs, max_abs

from conftest import random_psd


def test_make_block_validates_psd(rng):
    with pytest.raises(NotPsd):
        make_block(np.eye(2), 5 * np.eye(2), np.eye(2))
    with pytest.raises(NotPsd):
        make_block(-np.eye(2), np.zeros((2, 2)), np.eye(2))
    with pytest.raises(DimensionMismatch):
        make_block(np.eye(2), np.zeros((2, 2)), np.eye(3))
    blk = make_block(np.eye(2), 0.5 * np.eye(2), np.eye(2))
    assert blk.n == 2
    assert blk.psd_margin >= 0.5 - 1e-12


def test_assembled_and_swapped(rng):
    blk = sample_psd_block(3, 4, rng)
    M = blk.assembled()
    assert max_abs(M[:3, :3] - blk.A) == 0
    assert max_abs(M[:3, 3:] - blk.X) == 0
    assert max_abs(M[3:, 3:] - blk.B) == 0
    sw = blk.swapped()
    assert max_abs(sw.A - blk.B) == 0 and max_abs(sw.X - blk.X.conj().T) == 0
    # The swap is a unitary congruence, so it is PSD too.
    assert np.linalg.eigvalsh(sw.assembled() + sw.assembled().conj().T).min() > -1e-9


def test_gram_block_additivity(rng):
    pairs = [(ginibre(3, 3, rng), ginibre(3, 3, rng)) for _ in range(3)]
    total = gram_block(pairs).assembled()
    parts = sum(gram_pair_block(a, b).assembled() for a, b in pairs)
    assert max_abs(total - parts) < 1e-10
    with pytest.raises(DimensionMismatch):
        gram_block([])


def test_polar_block_unitary_case():
    Q = np.array([[0.0, 1.0], [-1.0, 0.0]])
    blk = polar_block(Q)
    assert max_abs(blk.A - np.eye(2)) < 1e-12
    assert max_abs(blk.B - np.eye(2)) < 1e-12


def test_polar_block_nilpotent():
    Z = np.array([[0.0, 1.0], [0.0, 0.0]])
    blk = polar_block(Z)
    assert max_abs(blk.A - np.diag([1.0, 0.0])) < 1e-12
    assert max_abs(blk.B - np.diag([0.0, 1.0])) < 1e-12


def test_dominance_block(rng):
    S, T = dominance_pair()
    blk = dominance_block(S, T)
    assert max_abs(blk.A - T) == 0 and max_abs(blk.X - S) == 0
    with pytest.raises(DominanceViolated) as exc:
        dominance_block(np.eye(2), np.zeros((2, 2)))
    assert exc.value.side is not None
    with pytest.raises(DominanceViolated):
        dominance_block(-2 * np.eye(2), np.eye(2))


def test_hermitian_dilation(rng):
    A = ginibre(2, 2, rng)
    D = hermitian_dilation(A)
    assert max_abs(D - D.conj().T) < 1e-12
    # The dilation squares to (AA*) (+) (A*A): spectra come in +- pairs.
    w = np.linalg.eigvalsh(D)
    sv = np.linalg.svd(A, compute_uv=False)
    assert np.allclose(sorted(np.abs(w)), sorted(np.concatenate([sv, sv])), atol=1e-10)


def test_sample_psd_block_determinism_and_rank():
    b1 = sample_psd_block(3, 2, 42)
    b2 = sample_psd_block(3, 2, 42)
    assert max_abs(b1.assembled() - b2.assembled()) == 0
    w = np.linalg.eigvalsh((b1.assembled() + b1.assembled().conj().T) / 2)
    assert (w > 1e-9).sum() == 2  # the requested rank
    with pytest.raises(ValueError):
        sample_psd_block(3, 7, 0)
    with pytest.raises(ValueError):
        sample_psd_block(3, 0, 0)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def test_niceex_block_values():
    blk = niceex_block(0.5)
    assert max_abs(blk.A - np.diag([0.5, 0.0])) < 1e-12
    assert max_abs(blk.B - np.diag([0.0, 2.0])) < 1e-12
    assert blk.psd_margin > -1e-12
    with pytest.raises(NonpositiveParam):
        niceex_block(0.0)


def test_schur_sharp_block_values():
    blk = schur_sharp_block(4.0)
    assert max_abs(blk.A - np.diag([2.0, 0.5])) < 1e-12
    with pytest.raises(NonpositiveParam):
        schur_sharp_block(-1.0)


def test_referee_projections_are_orthogonal_projections():
    P, Q, V = referee_projections()
    for R in (P, Q):
        assert max_abs(R @ R - R) < 1e-12
        assert max_abs(R - R.conj().T) < 1e-12
        assert abs(np.trace(R).real - 1.0) < 1e-12  # rank one
    assert max_abs(P @ Q) < 1e-12 and max_abs(Q @ P) < 1e-12
    assert max_abs(V @ V - np.eye(3)) < 1e-12


def test_referee_contractions_are_contractions():
    C1, C2 = referee_contractions()
    for C in (C1, C2):
        assert np.linalg.svd(C, compute_uv=False)[0] <= 1.0 + 1e-12
    # C2 is unitarily congruent to C1, so |C1| and |C2| share spectra.
    s1 = np.linalg.eigvalsh(matrix_abs(C1))
    s2 = np.linalg.eigvalsh(matrix_abs(C2))
    assert np.allclose(s1, s2, atol=1e-10)


def test_projection_pair():
    P, Q = projection_pair(np.pi / 3)
    assert max_abs(P @ P - P) < 1e-12 and max_abs(Q @ Q - Q) < 1e-12
    with pytest.raises(DegenerateAngle):
        projection_pair(0.0)
    with pytest.raises(DegenerateAngle):
        projection_pair(np.pi)


def test_normal_schur_pair_is_normal():
    A, B = normal_schur_pair()
    for M in (A, B):
        assert max_abs(M @ M.conj().T - M.conj().T @ M) < 1e-12
