"""Constructive witnesses: canonical V, certified inequalities, exact cases."""
import numpy as np
import pytest

from blockineq import (
    ando_sum_bound,
    bhatia_kittaneh_witness,
    make_block,
    mean_witness,
    minus_witness,
    normal_schur_witness,
    offdiag_bound,
    pm_dominance_witness,
    prop0_witness,
    sample_psd_block,
    tao_bound,
    theorem_witness,
    triangle_bound,
)
from blockineq.blocks import ginibre
from blockineq.errors import DimensionMismatch, NotContraction, NotNormal
from blockineq.families import dominance_pair, niceex_block, normal_schur_pair
from blockineq.linalg import is_symmetry, is_unitary, matrix_abs, max_abs

from conftest import random_psd


@pytest.fixture(params=[(2, 1), (2, 4), (3, 2), (3, 6), (4, 5)])
def block(request, rng):
    n, rank = request.param
    return sample_psd_block(n, rank, rng)


# ---------------------------------------------------------------------------
# Main 1/4-constant witnesses
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("op", ["plus", "schur"])
def test_theorem_witness_random(block, op):
    agm, geo = theorem_witness(block, op)
    for rep in (agm, geo):
        assert rep.passed, rep.margin
        assert is_symmetry(rep.V)
        assert rep.witness_class == "symmetry"
    # The geometric-mean form is the stronger one: its rhs sits below the
    # AGM rhs, so its margin can only be smaller.
    assert np.linalg.eigvalsh(agm.rhs - geo.rhs).min() > -1e-8


def test_theorem_witness_niceex_equality():
    agm, geo = theorem_witness(niceex_block(0.5), "plus")
    # Sharp family at the optimum: zero residual margin in the AGM form.
    assert abs(agm.margin) < 1e-10
    assert agm.passed and geo.passed


def test_theorem_witness_bad_op(block):
    with pytest.raises(ValueError):
        theorem_witness(block, "minus")


def test_minus_witness(block):
    geo, agm = minus_witness(block)
    assert geo.passed and agm.passed
    assert is_symmetry(geo.V)
    K = block.X - block.X.conj().T
    # V linearizes i(X - X*): V |X - X*| = -i K.
    assert max_abs(geo.V @ matrix_abs(K) - 1j * K) < 1e-8 * max(1.0, max_abs(K))


def test_minus_witness_imaginary_entries_for_real_input():
    # Real X can force a genuinely non-real witness.
    X = np.array([[0.0, 1.0], [0.0, 0.0]])
    blk = make_block(np.eye(2), X, np.eye(2))
    geo, _ = minus_witness(blk)
    assert max_abs(np.imag(geo.V)) > 0.4


@pytest.mark.parametrize("op", ["plus", "minus"])
def test_mean_witness(block, op):
    rep = mean_witness(block, op)
    assert rep.passed
    assert rep.claim_id == f"mean_{op}"
    with pytest.raises(ValueError):
        mean_witness(block, "schur")


# ---------------------------------------------------------------------------
# Off-diagonal and elementary bounds
# ---------------------------------------------------------------------------


def test_offdiag_bound(block):
    r1, r2 = offdiag_bound(block)
    for rep in (r1, r2):
        assert rep.passed
        assert rep.witness_class == "unitary"
        assert is_unitary(rep.V)
        # The arithmetic relaxation is certified alongside.
        assert rep.aux["mean_margin"] > -1e-8


def test_tao_bound(block):
    rep = tao_bound(block)
    assert rep.passed
    assert rep.worst_violation <= 1e-9


def test_prop0_witness(block):
    rep = prop0_witness(block)
    assert rep.passed
    U1, U2 = rep.V
    assert is_unitary(U1) and is_unitary(U2)


# ---------------------------------------------------------------------------
# Product / sum factor bounds
# ---------------------------------------------------------------------------


def test_bhatia_kittaneh_witness(rng):
    for _ in range(10):
        A = ginibre(3, 3, rng)
        B = ginibre(3, 3, rng)
        rep = bhatia_kittaneh_witness(A, B)
        assert rep.passed
        assert is_unitary(rep.V)
        assert rep.aux["tao_worst_violation"] <= 1e-9
    with pytest.raises(DimensionMismatch):
        bhatia_kittaneh_witness(np.eye(2), np.eye(3))


def test_ando_sum_bound(rng):
    pairs = [(ginibre(3, 3, rng), ginibre(3, 3, rng)) for _ in range(3)]
    geo, mean = ando_sum_bound(pairs)
    assert geo.passed and mean.passed
    assert is_unitary(geo.V)
    with pytest.raises(DimensionMismatch):
        ando_sum_bound([])


# ---------------------------------------------------------------------------
# Normality / dominance / triangle
# ---------------------------------------------------------------------------


def test_normal_schur_witness_sharp_pair():
    A, B = normal_schur_pair()
    rep = normal_schur_witness(A, B)
    assert rep.passed
    # rhs is exactly diag(17/8, 1), lhs exactly the identity.
    assert max_abs(rep.rhs - np.diag([17.0 / 8.0, 1.0])) < 1e-10
    assert max_abs(rep.lhs - np.eye(2)) < 1e-10
    assert abs(rep.margin) < 1e-10


def test_normal_schur_witness_rejects_nonnormal():
    with pytest.raises(NotNormal):
        normal_schur_witness(np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2))


def test_pm_dominance_witness_sharp_pair():
    S, T = dominance_pair()
    rep = pm_dominance_witness(S, T)
    assert rep.passed
    assert abs(rep.margin) < 1e-10  # the 1/4 constant is attained


def test_pm_dominance_witness_random(rng):
    for _ in range(5):
        G = ginibre(3, 3, rng)
        S = (G + G.conj().T) / 2
        T = matrix_abs(S) + 0.1 * random_psd(3, rng)
        rep = pm_dominance_witness(S, T)
        assert rep.passed


def test_triangle_bound_hermitian_and_general(rng):
    herm = []
    for _ in range(3):
        G = ginibre(3, 3, rng)
        H = (G + G.conj().T) / 2
        herm.append(H / max(1.0, np.abs(np.linalg.eigvalsh(H)).max()))
    rep = triangle_bound(herm)
    assert rep.passed and rep.aux["route"] == "hermitian"

    gen = []
    for _ in range(3):
        M = ginibre(3, 3, rng)
        gen.append(M / max(1.0, np.linalg.svd(M, compute_uv=False)[0]))
    rep = triangle_bound(gen)
    assert rep.passed and rep.aux["route"] == "dilation"


def test_triangle_bound_errors():
    with pytest.raises(ValueError):
        triangle_bound([np.eye(2)])
    with pytest.raises(NotContraction) as exc:
        triangle_bound([np.eye(2), 3 * np.eye(2)])
    assert exc.value.sigma_max > 1
    with pytest.raises(DimensionMismatch):
        triangle_bound([np.eye(2), np.eye(3)])


def test_report_serialization(block):
    agm, _ = theorem_witness(block, "plus")
    data = agm.to_jsonable()
    assert data["claim_id"] == "theorem_plus_agm"
    assert data["pass"] is True
    assert len(data["lhs_spectrum"]) == block.n
    rep = tao_bound(block)
    data = rep.to_jsonable()
    assert data["check_id"] == "tao"
