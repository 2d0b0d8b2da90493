"""Eigenvalue, diagonal, norm, majorization and determinant checkers."""
import math

import numpy as np
import pytest

from blockineq import (
    akext2_check,
    akext_check,
    bhatia_davis_check,
    det_schwarz_check,
    diag_check,
    gram_geo_check,
    gram_norm_check,
    norm_check,
    projection_ratio,
    sample_psd_block,
    weyl_geo_check,
    zpolar_checks,
)
from blockineq.blocks import ginibre
from blockineq.errors import IndexConstraint


@pytest.fixture(params=[(2, 2), (3, 1), (3, 5), (4, 8)])
def block(request, rng):
    n, rank = request.param
    return sample_psd_block(n, rank, rng)


@pytest.mark.parametrize("op", ["plus", "schur", "minus"])
def test_weyl_geo_check(block, op):
    for j, k in ((0, 0), (0, 1), (1, 1), (0, 2)):
        rep = weyl_geo_check(block, op, j, k)
        assert rep.passed, (op, j, k, rep.worst_violation)
    with pytest.raises(IndexConstraint):
        weyl_geo_check(block, op, -1, 0)


def test_weyl_padding_beyond_dimension(block):
    # Indices past the natural dimension read as zero eigenvalues: the
    # bound degenerates to 0 <= 0 and must still pass.
    n = block.n
    rep = weyl_geo_check(block, "plus", n, n)
    assert rep.passed


@pytest.mark.parametrize("op", ["plus", "schur"])
def test_gram_geo_check(rng, op):
    A, B = ginibre(3, 3, rng), ginibre(3, 3, rng)
    for j, k in ((0, 0), (1, 1), (0, 2)):
        rep = gram_geo_check(A, B, op, j, k)
        assert rep.passed
        assert rep.check_id == "gram_geo"


@pytest.mark.parametrize("op", ["plus", "schur"])
def test_norm_check(block, op):
    rep = norm_check(block, op)
    assert rep.passed
    assert rep.params["wlog"] is True
    assert rep.lhs_value <= rep.rhs_value + 1e-8 * max(1.0, rep.rhs_value)


def test_gram_norm_check(rng):
    A, B = ginibre(4, 4, rng), ginibre(4, 4, rng)
    for op in ("plus", "schur"):
        rep = gram_norm_check(A, B, op)
        assert rep.passed


def test_diag_check(rng):
    Z = ginibre(4, 4, rng)
    for j in range(4):
        assert diag_check(Z, j).passed
    with pytest.raises(IndexConstraint):
        diag_check(Z, 4)
    with pytest.raises(IndexConstraint):
        diag_check(Z, -1)


def test_zpolar_checks(rng):
    Z = ginibre(3, 3, rng)
    for op in ("plus", "schur"):
        wlog, geo = zpolar_checks(Z, op)
        assert wlog.passed and geo.passed


def test_akext_check(block):
    n = block.n
    for j in range(2 * n + 1):
        for k in range(2 * j + 1):
            rep = akext_check(block, j, k, 2 * j - k)
            assert rep.passed, (j, k)
    with pytest.raises(IndexConstraint):
        akext_check(block, 1, 0, 1)  # 2j != k + l
    with pytest.raises(IndexConstraint):
        akext_check(block, -1, 0, -2)


def test_akext2_check(rng):
    A, B = ginibre(3, 3, rng), ginibre(3, 3, rng)
    for j, k in ((0, 0), (1, 1), (2, 1)):
        rep = akext2_check(A, B, j, k, 2 * j - k)
        assert rep.passed
        assert rep.check_id == "akext2"


def test_bhatia_davis_check(rng):
    pairs = [(ginibre(3, 3, rng), ginibre(3, 3, rng)) for _ in range(2)]
    rep = bhatia_davis_check(pairs)
    assert rep.passed
    assert rep.params["worst_alpha"] in (0.1, 0.5, 1.0, 2.0, 4.0)


def test_det_schwarz_check(rng):
    pairs = [(ginibre(3, 3, rng), ginibre(3, 3, rng))]
    rep = det_schwarz_check(pairs)
    assert rep.passed
    # Singular product: lhs log-det is -inf, inequality holds trivially.
    Z = np.diag([1.0, 0.0, 1.0]).astype(complex)
    rep = det_schwarz_check([(Z, Z)])
    assert rep.passed
    assert rep.lhs_value == -math.inf


@pytest.mark.parametrize("a", [0.5, 0.1, 0.02, 1.0, np.pi / 2])
def test_projection_ratio_closed_form(a):
    ratio, closed = projection_ratio(a)
    assert abs(ratio - closed) <= 1e-8 * max(1.0, closed)
    assert abs(closed - math.sin(a) / (1.0 - math.cos(a))) < 1e-12


def test_projection_ratio_unbounded():
    ratio, _ = projection_ratio(0.02)
    assert ratio > 99
    ratio_smaller, _ = projection_ratio(0.002)
    assert ratio_smaller > ratio  # grows like 2/a near zero
