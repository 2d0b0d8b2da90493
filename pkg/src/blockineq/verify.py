"""Seeded randomized verification corpus.

Samples PSD blocks (mixing full-rank and rank-deficient), random
matrices and factor lists, runs the selected checker/witness suite on
each, and collects one row per check with the frozen report columns.
All inequalities exercised here are proved theorems: any failure beyond
tolerance is a library bug, and the offending (seed, n, trial) triple
is surfaced as a reproducer.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import checks as C
from . import witnesses as W
from .blocks import gram_block, gram_pair_block, ginibre, make_block, sample_psd_block
from .checks import _akext_values, _direct_sum_spectrum, _sv
from .linalg import Spectrum, diag_entries_desc, hermitian_part, matrix_abs, schur_product
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = ["SUITES", "VerifyResult", "run_suite"]

SUITES = ("theorem", "corollaries", "norms", "gram")


@dataclass
class VerifyResult:
    rows: list
    summary: dict
    failures: list  # (n, trial, check_id) reproducers


def _lam_max(M):
    return float(np.linalg.eigvalsh(M)[-1])


def _witness_row(rep, n):
    return {
        "check_id": rep.claim_id,
        "n": n,
        "params": dict(rep.aux, witness_class=rep.witness_class)
        if rep.aux
        else {"witness_class": rep.witness_class},
        "lhs": _lam_max(rep.lhs),
        "rhs": _lam_max(rep.rhs),
        "margin": rep.margin,
        "pass": rep.passed,
    }


def _check_row(rep, n):
    return {
        "check_id": rep.check_id,
        "n": n,
        "params": rep.params,
        "lhs": rep.lhs_value,
        "rhs": rep.rhs_value,
        "margin": -rep.worst_violation,
        "pass": rep.passed,
    }


def _clip_contraction(M):
    U, s, Vh = np.linalg.svd(M)
    return (U * np.minimum(s, 1.0)) @ Vh


def _index_sweep_row(check_id, n, items, tol):
    """Aggregate an index sweep into one row carrying the worst sub-case."""
    worst = None
    all_pass = True
    for params, lhs, rhs in items:
        ok = lhs <= rhs + tol.rel * max(1.0, abs(rhs))
        all_pass = all_pass and ok
        if worst is None or lhs - rhs > worst[1] - worst[2]:
            worst = (params, lhs, rhs)
    params, lhs, rhs = worst
    return {
        "check_id": check_id,
        "n": n,
        "params": params,
        "lhs": lhs,
        "rhs": rhs,
        "margin": rhs - lhs,
        "pass": all_pass,
    }


def _theorem_rows(blk, n, tol):
    rows = []
    for op in ("plus", "schur"):
        agm, geo = W.theorem_witness(blk, op, tol)
        rows += [_witness_row(agm, n), _witness_row(geo, n)]
    geo, agm = W.minus_witness(blk, tol)
    rows += [_witness_row(geo, n), _witness_row(agm, n)]
    for op in ("plus", "minus"):
        rows.append(_witness_row(W.mean_witness(blk, op, tol), n))
    return rows


def _corollary_rows(blk, n, rng, tol):
    rows = []
    for op in ("plus", "schur", "minus"):
        for j, k in ((0, 0), (0, 1), (1, 1)):
            rows.append(_check_row(C.weyl_geo_check(blk, op, j, k, tol), n))
    rows.append(_check_row(W.tao_bound(blk, tol), n))
    r1, r2 = W.offdiag_bound(blk, tol)
    rows += [_witness_row(r1, n), _witness_row(r2, n)]
    rows.append(_witness_row(W.prop0_witness(blk, tol), n))

    # akext sweep over all admissible (j, k, l) with j <= 2n.
    sx = _sv(blk.X)
    sd = _direct_sum_spectrum(blk, tol)
    items = []
    for j in range(0, 2 * n + 1):
        for k in range(0, 2 * j + 1):
            l = 2 * j - k
            lhs, rhs = _akext_values(sx, sd, j, k, l)
            items.append(({"j": j, "k": k, "l": l}, lhs, rhs))
    rows.append(_index_sweep_row("akext_sweep", n, items, tol))

    Z = ginibre(n, n, rng)
    sz = _sv(schur_product(Z, Z.conj().T))
    d1 = diag_entries_desc(hermitian_part(Z.conj().T @ Z), tol)
    d2 = diag_entries_desc(hermitian_part(Z @ Z.conj().T), tol)
    items = [
        ({"j": j}, sz.lam(1 + 2 * j), min(d1.lam(1 + j), d2.lam(1 + j))) for j in range(n)
    ]
    rows.append(_index_sweep_row("diag_sweep", n, items, tol))

    for op in ("plus", "schur"):
        wlog, geo = C.zpolar_checks(Z, op, tol)
        rows += [_check_row(wlog, n), _witness_row(geo, n)]

    Za, Zb = ginibre(n, n, rng), ginibre(n, n, rng)
    blk2 = make_block(
        matrix_abs(Za.conj().T) + matrix_abs(Zb.conj().T),
        Za + Zb,
        matrix_abs(Za) + matrix_abs(Zb),
        tol,
    )
    sx2 = _sv(blk2.X)
    sd2 = _direct_sum_spectrum(blk2, tol)
    items = []
    for j in range(0, 2 * n + 1):
        for k in range(0, 2 * j + 1):
            l = 2 * j - k
            lhs, rhs = _akext_values(sx2, sd2, j, k, l)
            items.append(({"j": j, "k": k, "l": l}, lhs, rhs))
    rows.append(_index_sweep_row("akext2_sweep", n, items, tol))

    S = hermitian_part(ginibre(n, n, rng))
    G = ginibre(n, n, rng)
    T = matrix_abs(S) + 0.1 * hermitian_part(G @ G.conj().T)
    rows.append(_witness_row(W.pm_dominance_witness(S, T, tol), n))

    mats = [_clip_contraction(ginibre(n, n, rng)) for _ in range(3)]
    rows.append(_witness_row(W.triangle_bound(mats, tol), n))
    return rows


def _norm_rows(blk, n, rng, pairs, tol):
    rows = []
    for op in ("plus", "schur"):
        rows.append(_check_row(C.norm_check(blk, op, tol), n))
    Za, Zb = ginibre(n, n, rng), ginibre(n, n, rng)
    for op in ("plus", "schur"):
        rows.append(_check_row(C.gram_norm_check(Za, Zb, op, tol), n))
    rows.append(_check_row(C.bhatia_davis_check(pairs, C.ALPHA_GRID, tol), n))
    rows.append(_check_row(C.det_schwarz_check(pairs, tol), n))
    return rows


def _gram_rows(n, rng, pairs, tol):
    rows = []
    total = gram_block(pairs, tol).assembled()
    parts = sum(gram_pair_block(a, b, tol).assembled() for a, b in pairs)
    dev = float(np.max(np.abs(total - parts)))
    scale = max(1.0, float(np.max(np.abs(total))))
    rows.append(
        {
            "check_id": "gram_additivity",
            "n": n,
            "params": {"n_pairs": len(pairs)},
            "lhs": dev,
            "rhs": 1e-12 * scale,
            "margin": 1e-12 * scale - dev,
            "pass": dev <= 1e-12 * scale,
        }
    )
    Za, Zb = ginibre(n, n, rng), ginibre(n, n, rng)
    for op in ("plus", "schur"):
        for j, k in ((0, 0), (1, 1)):
            rows.append(_check_row(C.gram_geo_check(Za, Zb, op, j, k, tol), n))
    rows.append(_witness_row(W.bhatia_kittaneh_witness(Za, Zb, tol), n))
    geo, mean = W.ando_sum_bound(pairs, tol)
    rows += [_witness_row(geo, n), _witness_row(mean, n)]
    return rows


def run_suite(dims, trials, seed, suite="all", tol: ToleranceCfg = DEFAULT_TOL) -> VerifyResult:
    """Run the selected suite on a seeded corpus.

    dims: iterable of block sizes; trials: blocks per size.  Ranks cycle
    through 1..2n so singular blocks are exercised.  Deterministic for a
    fixed seed.
    """
    if suite == "all":
        selected = SUITES
    elif suite in SUITES:
        selected = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}; pick one of {('all',) + SUITES}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rows = []
    failures = []
    for n in dims:
        if not 1 <= n <= 16:
            raise ValueError(f"dims must lie in 1..16, got {n}")
        for trial in range(trials):
            rng = np.random.default_rng(np.random.SeedSequence([seed, n, trial]))
            rank = 1 + (trial % (2 * n))
            blk = sample_psd_block(n, rank, rng, tol)
            pairs = [
                (ginibre(n, n, rng), ginibre(n, n, rng)) for _ in range(1 + trial % 3)
            ]
            trial_rows = []
            if "theorem" in selected:
                trial_rows += _theorem_rows(blk, n, tol)
            if "corollaries" in selected:
                trial_rows += _corollary_rows(blk, n, rng, tol)
            if "norms" in selected:
                trial_rows += _norm_rows(blk, n, rng, pairs, tol)
            if "gram" in selected:
                trial_rows += _gram_rows(n, rng, pairs, tol)
            for row in trial_rows:
                row["trial"] = trial
                if not row["pass"]:
                    failures.append((n, trial, row["check_id"]))
            rows += trial_rows
    worst = min((row["margin"] for row in rows), default=0.0)
    summary = {
        "checks_run": len(rows),
        "failures": len(failures),
        "worst_margin": worst,
    }
    return VerifyResult(rows=rows, summary=summary, failures=failures)
