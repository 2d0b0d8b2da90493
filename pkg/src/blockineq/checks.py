"""Eigenvalue, diagonal, norm, log-majorization and determinant checkers.

Each checker evaluates one proved inequality family on concrete inputs
and returns a :class:`CheckReport`.  "All unitarily invariant norms" is
covered exhaustively through Ky Fan norms (Fan dominance); "all alpha >
0" through weak log-majorization, with a redundant grid of spot checks.
"""
from __future__ import annotations

import math

import numpy as np

from .blocks import PsdBlock, gram_pair_block, make_block, polar_block
from .errors import IndexConstraint
from .families import projection_pair
from .linalg import (
    Spectrum,
    as_matrix,
    diag_entries_desc,
    eigvalsh,
    hermitian_part,
    kyfan_weak_majorization,
    matrix_abs,
    schur_product,
    weak_log_majorization,
)
from .reports import CheckReport
from .tolerances import DEFAULT_TOL, ToleranceCfg
from .witnesses import _diamond, _diamond_diag, theorem_witness

__all__ = [
    "ALPHA_GRID",
    "weyl_geo_check",
    "gram_geo_check",
    "norm_check",
    "gram_norm_check",
    "diag_check",
    "zpolar_checks",
    "akext_check",
    "akext2_check",
    "bhatia_davis_check",
    "det_schwarz_check",
    "projection_ratio",
]

ALPHA_GRID = (0.1, 0.5, 1.0, 2.0, 4.0)


def _scalar_report(check_id, params, lhs, rhs, tol):
    return CheckReport(
        check_id=check_id,
        params=params,
        lhs_value=float(lhs),
        rhs_value=float(rhs),
        passed=lhs <= rhs + tol.rel * max(1.0, abs(rhs)),
        worst_violation=float(lhs - rhs),
    )


def _sv(M):
    return Spectrum(np.linalg.svd(as_matrix(M), compute_uv=False))


def _weyl_values(s_off: Spectrum, s_diag: Spectrum, j, k):
    lhs = s_off.lam(1 + j + k) ** 2
    rhs = s_diag.lam(1 + j) * s_diag.lam(1 + k)
    return lhs, rhs


def weyl_geo_check(blk: PsdBlock, op, j, k, tol: ToleranceCfg = DEFAULT_TOL):
    """Weyl-type bound lam^2_(1+j+k)(|X (d) X*|) <= lam_(1+j)(D) lam_(1+k)(D).

    For op "minus" the right side uses D = A + B, consistent with the
    minus-variant corollary (interpretation recorded in the design
    notes).
    """
    if j < 0 or k < 0:
        raise IndexConstraint("indices j, k must be nonnegative")
    if op == "minus":
        s_off = _sv(blk.X - blk.X.conj().T)
        s_diag = eigvalsh(blk.A + blk.B, tol)
    else:
        s_off = _sv(_diamond(blk.X, op))
        s_diag = eigvalsh(_diamond_diag(blk.A, blk.B, op), tol)
    lhs, rhs = _weyl_values(s_off, s_diag, j, k)
    return _scalar_report("weyl_geo", {"op": op, "j": j, "k": k}, lhs, rhs, tol)


def gram_geo_check(A, B, op, j, k, tol: ToleranceCfg = DEFAULT_TOL):
    """Gram special case: lam^2_(1+j+k)(|A*B (d) B*A|) <= products over A*A (d) B*B."""
    rep = weyl_geo_check(gram_pair_block(A, B, tol), op, j, k, tol)
    return CheckReport("gram_geo", rep.params, rep.lhs_value, rep.rhs_value, rep.passed, rep.worst_violation)


def _clamped_pair(x: Spectrum, y: Spectrum, tol):
    """Pad to equal length and zero out noise-level entries of both vectors.

    Fractional powers blow noise-floor values up to order one (1e-16 to
    the 0.1 is about 0.025), so entries tiny relative to the top value
    must be treated as exact zeros before any Ky Fan comparison.
    """
    xv = np.clip(x.values, 0.0, None)
    yv = np.clip(y.values, 0.0, None)
    n = max(len(xv), len(yv))
    xv = np.pad(xv, (0, n - len(xv)))
    yv = np.pad(yv, (0, n - len(yv)))
    top = max([1.0] + [float(v[0]) for v in (xv, yv) if len(v)])
    cut = tol.abs + tol.rel * top
    return np.where(xv <= cut, 0.0, xv), np.where(yv <= cut, 0.0, yv)


def _kyfan_grid_worst(x: Spectrum, y: Spectrum, alpha_grid, tol):
    """Worst relative Ky Fan partial-sum violation over the alpha grid."""
    xv, yv = _clamped_pair(x, y, tol)
    worst = (-np.inf, 0.0, 0.0, None, 0)
    for alpha in alpha_grid:
        cx = np.cumsum(xv**alpha)
        cy = np.cumsum(yv**alpha)
        rel = (cx - cy) / np.maximum(1.0, cy)
        i = int(np.argmax(rel))
        if rel[i] > worst[0]:
            worst = (float(rel[i]), float(cx[i]), float(cy[i]), alpha, i + 1)
    return worst


def norm_check(blk: PsdBlock, op, tol: ToleranceCfg = DEFAULT_TOL):
    """UI-norm family check via weak log-majorization plus Ky Fan spot checks."""
    x = _sv(_diamond(blk.X, op))
    y = eigvalsh(_diamond_diag(blk.A, blk.B, op), tol)
    wlog = weak_log_majorization(x, y, tol)
    xv, yv = _clamped_pair(x, y, tol)
    grid_ok = all(
        kyfan_weak_majorization(xv**a, yv**a, tol) for a in ALPHA_GRID
    )
    _, cx, cy, alpha, kk = _kyfan_grid_worst(x, y, ALPHA_GRID, tol)
    return CheckReport(
        check_id="norm",
        params={"op": op, "worst_alpha": alpha, "worst_k": kk, "wlog": wlog},
        lhs_value=cx,
        rhs_value=cy,
        passed=bool(wlog and grid_ok),
        worst_violation=float(cx - cy),
    )


def gram_norm_check(A, B, op, tol: ToleranceCfg = DEFAULT_TOL):
    """Norm family for the Gram block: |||A*B (d) B*A|^a|| <= |||A*A (d) B*B|^a||."""
    rep = norm_check(gram_pair_block(A, B, tol), op, tol)
    return CheckReport("gram_norm", rep.params, rep.lhs_value, rep.rhs_value, rep.passed, rep.worst_violation)


def diag_check(Z, j, tol: ToleranceCfg = DEFAULT_TOL):
    """Diagonal bound lam_(1+2j)(|Z o Z*|) <= min diag entries of Z*Z and ZZ*."""
    Z = as_matrix(Z)
    n = Z.shape[0]
    if not 0 <= j <= n - 1:
        raise IndexConstraint(f"j must lie in [0, {n - 1}], got {j}")
    s = _sv(schur_product(Z, Z.conj().T))
    d1 = diag_entries_desc(hermitian_part(Z.conj().T @ Z), tol)
    d2 = diag_entries_desc(hermitian_part(Z @ Z.conj().T), tol)
    lhs = s.lam(1 + 2 * j)
    rhs = min(d1.lam(1 + j), d2.lam(1 + j))
    return _scalar_report("diag", {"j": j}, lhs, rhs, tol)


def zpolar_checks(Z, op, tol: ToleranceCfg = DEFAULT_TOL):
    """Polar-block consequences for a single matrix Z.

    Returns the weak log-majorization check |Z (d) Z*| prec_wlog
    |Z| (d) |Z*| and the geometric-mean witness report obtained from the
    main theorem on the polar block of Z.
    """
    Z = as_matrix(Z)
    x = _sv(_diamond(Z, op))
    y = eigvalsh(_diamond_diag(matrix_abs(Z), matrix_abs(Z.conj().T), op), tol)
    ok = weak_log_majorization(x, y, tol)
    _, cx, cy, alpha, kk = _kyfan_grid_worst(x, y, (1.0,), tol)
    wlog = CheckReport(
        check_id="zpolar_wlog",
        params={"op": op, "worst_k": kk},
        lhs_value=cx,
        rhs_value=cy,
        passed=ok,
        worst_violation=float(cx - cy),
    )
    _, geo = theorem_witness(polar_block(Z, tol), op, tol)
    return wlog, geo


def _akext_values(sx: Spectrum, sd: Spectrum, j, k, l):
    lhs = sx.lam(j + 1)
    rhs = math.sqrt(max(sd.lam(k + 1), 0.0) * max(sd.lam(l + 1), 0.0))
    return lhs, rhs


def _direct_sum_spectrum(blk: PsdBlock, tol):
    wa = np.linalg.eigvalsh(blk.A)
    wb = np.linalg.eigvalsh(blk.B)
    return Spectrum(np.concatenate([wa, wb]))


def akext_check(blk: PsdBlock, j, k, l, tol: ToleranceCfg = DEFAULT_TOL):
    """Interpolated bound lam_(j+1)(|X|) <= sqrt(lam_(k+1) lam_(l+1)) of A (+) B.

    Requires 2j = k + l; spectra are zero-padded beyond their natural
    dimension, so no extra range assumption is needed.
    """
    if j < 0 or k < 0 or l < 0 or 2 * j != k + l:
        raise IndexConstraint(f"need nonnegative j,k,l with 2j = k + l, got {(j, k, l)}")
    sx = _sv(blk.X)
    sd = _direct_sum_spectrum(blk, tol)
    lhs, rhs = _akext_values(sx, sd, j, k, l)
    return _scalar_report("akext", {"j": j, "k": k, "l": l}, lhs, rhs, tol)


def akext2_check(A, B, j, k, l, tol: ToleranceCfg = DEFAULT_TOL):
    """Two-matrix extension via the sum of the polar blocks of A and B."""
    A = as_matrix(A)
    B = as_matrix(B)
    blk = make_block(
        matrix_abs(A.conj().T) + matrix_abs(B.conj().T),
        A + B,
        matrix_abs(A) + matrix_abs(B),
        tol,
    )
    rep = akext_check(blk, j, k, l, tol)
    return CheckReport("akext2", rep.params, rep.lhs_value, rep.rhs_value, rep.passed, rep.worst_violation)


def _factor_spectra(pairs):
    pairs = [(as_matrix(a), as_matrix(b)) for a, b in pairs]
    if not pairs:
        raise ValueError("factor list must be nonempty")
    M = sum(b.conj().T @ a for a, b in pairs)
    SA = hermitian_part(sum(a.conj().T @ a for a, _ in pairs))
    SB = hermitian_part(sum(b.conj().T @ b for _, b in pairs))
    return _sv(M), Spectrum(np.clip(np.linalg.eigvalsh(SA), 0, None)), Spectrum(
        np.clip(np.linalg.eigvalsh(SB), 0, None)
    )


def bhatia_davis_check(pairs, alpha_grid=ALPHA_GRID, tol: ToleranceCfg = DEFAULT_TOL):
    """Schwarz inequality ||...|^a||^2 <= ||...|^a|| ||...|^a|| over Ky Fan norms."""
    sx, sa, sb = _factor_spectra(pairs)
    n = len(sx.values)
    worst = (-np.inf, 0.0, 0.0, None, 0)
    for alpha in alpha_grid:
        cx = np.cumsum(sx.values**alpha)
        ca = np.cumsum(sa.values**alpha)
        cb = np.cumsum(sb.values**alpha)
        lhs = cx**2
        rhs = ca * cb
        rel = (lhs - rhs) / np.maximum(1.0, rhs)
        i = int(np.argmax(rel))
        if rel[i] > worst[0]:
            worst = (float(rel[i]), float(lhs[i]), float(rhs[i]), alpha, i + 1)
    _, lhs, rhs, alpha, kk = worst
    return CheckReport(
        check_id="bhatia_davis",
        params={"worst_alpha": alpha, "worst_k": kk, "n_pairs": len(pairs), "dim": n},
        lhs_value=lhs,
        rhs_value=rhs,
        passed=lhs <= rhs + tol.rel * max(1.0, abs(rhs)),
        worst_violation=float(lhs - rhs),
    )


def det_schwarz_check(pairs, tol: ToleranceCfg = DEFAULT_TOL):
    """det^2 |sum Bi* Ai| <= det(sum Bi* Bi) det(sum Ai* Ai), via log-spectra."""
    sx, sa, sb = _factor_spectra(pairs)
    n = len(sx.values)

    def logdet(spec):
        v = spec.values
        cut = tol.abs + tol.rel * max(1.0, float(v[0]) if len(v) else 0.0)
        if np.any(v <= cut):
            return -math.inf
        return float(np.sum(np.log(v)))

    lhs = 2 * logdet(sx)
    rhs = logdet(sa) + logdet(sb)
    if lhs == -math.inf:
        passed = True
    elif rhs == -math.inf:
        passed = False
    else:
        passed = lhs <= rhs + max(tol.abs, 100 * n * tol.rel * max(1.0, abs(rhs)))
    return CheckReport(
        check_id="det_schwarz",
        params={"n_pairs": len(pairs), "dim": n},
        lhs_value=lhs,
        rhs_value=rhs,
        passed=passed,
        worst_violation=float(lhs - rhs) if math.isfinite(lhs) and math.isfinite(rhs) else -math.inf,
    )


def projection_ratio(a, tol: ToleranceCfg = DEFAULT_TOL):
    """Second-eigenvalue ratio lam_2(|P - Q|) / lam_2(P + Q) for the angle family.

    Also returns the closed form sin(a)/(1 - cos(a)); the two agree for
    angles in (0, pi/2].  The ratio grows like 2/a near 0, so it can be
    made arbitrarily large.
    """
    P, Q = projection_pair(a)
    s1 = eigvalsh(matrix_abs(P - Q), tol)
    s2 = eigvalsh(P + Q, tol)
    ratio = s1.lam(2) / s2.lam(2)
    closed = math.sin(a) / (1.0 - math.cos(a))
    return float(ratio), float(closed)
