"""Sharpness probes and the derivative-free extremal search.

The probes evaluate the explicit families attaining the 1/4 and k/4
constants.  The search is a multi-restart (1+1) adaptive random search
over either k contractions (triangle objective) or the Gram factor of a
PSD block (theorem ratio objectives); it is fully deterministic for a
fixed seed and aborts loudly, with a serialized reproducer, if any
visited point exceeds a proved bound.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BoundExceeded, EvenK, NonpositiveParam, NotContraction
from .families import (
    niceex_block,
    normal_schur_pair,
    dominance_pair,
    referee_contractions,
    referee_projections,
    schur_sharp_block,
)
from .linalg import as_matrix, matrix_abs, max_abs, schur_product
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = [
    "ProbeResult",
    "SearchConfig",
    "SearchResult",
    "probe_niceex",
    "probe_referee",
    "probe_dominance_pair",
    "probe_normal_schur_pair",
    "triangle_objective",
    "search",
    "conjecture_report",
]

BOUND_SLACK = 1e-9
FAIL_STREAK = 20
TRAJECTORY_STRIDE = 100


@dataclass(frozen=True)
class ProbeResult:
    family: str
    param: float
    ratio: float
    bound: float

    @property
    def gap(self):
        return self.bound - self.ratio


@dataclass(frozen=True)
class SearchConfig:
    kind: str  # "triangle" | "theorem_plus" | "theorem_schur"
    n: int
    k: int = 2
    budget: int = 10_000
    restarts: int = 1
    seed: int = 0
    step_init: float = 0.5
    step_decay: float = 0.9
    init_point: tuple = None

    def validate(self):
        if self.kind not in ("triangle", "theorem_plus", "theorem_schur"):
            raise ValueError(f"unknown search kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not self.budget >= self.restarts >= 1:
            raise ValueError("need budget >= restarts >= 1")
        if self.kind == "triangle" and self.k < 2:
            raise ValueError("triangle search needs k >= 2")
        if self.step_init <= 0 or not 0 < self.step_decay < 1:
            raise ValueError("need step_init > 0 and 0 < step_decay < 1")

    @property
    def bound(self):
        return self.k / 4 if self.kind == "triangle" else 0.25


@dataclass
class SearchResult:
    best_value: float
    bound: float
    best_point: list
    eval_count: int
    trajectory: list
    restart_seeds: list
    best_restart: int
    config: SearchConfig
    wall_time: float = field(default=0.0)


def _lam1_diff(num_mat, den_mat):
    """lam_1(num_mat) / lam_1(den_mat) with a guard for vanishing denominators."""
    den = float(np.linalg.eigvalsh(den_mat)[-1])
    if den <= 1e-13:
        return 0.0
    num = float(np.linalg.eigvalsh(num_mat)[-1])
    return num / den


def probe_niceex(t, op="plus", tol: ToleranceCfg = DEFAULT_TOL):
    """Ratio lam_1(|X (d) X*| - A(d)B) / lam_1(A(d)B) on the sharp family.

    op "plus" uses the rank-one block family, op "schur" its
    Schur-product analogue; both attain the bound 1/4 at t = 1/2.
    """
    if t <= 0:
        raise NonpositiveParam(f"t must be positive, got {t}")
    if op == "plus":
        blk = niceex_block(t, tol)
        Xd = blk.X + blk.X.conj().T
        D = blk.A + blk.B
    elif op == "schur":
        blk = schur_sharp_block(t, tol)
        Xd = schur_product(blk.X, blk.X.conj().T)
        D = schur_product(blk.A, blk.B)
    else:
        raise ValueError(f"op must be plus or schur, got {op!r}")
    ratio = _lam1_diff(matrix_abs(Xd) - D, D)
    return ProbeResult(family="niceex" if op == "plus" else "schur_niceex", param=float(t), ratio=ratio, bound=0.25)


def probe_referee(tol: ToleranceCfg = DEFAULT_TOL):
    """The referee contraction pair: lam_max(|C1+C2| - |C1| - |C2|) = 1/2 = k/4."""
    P, Q, _ = referee_projections()
    assert max_abs(P @ Q) <= 1e-12 and max_abs(Q @ P) <= 1e-12
    C1, C2 = referee_contractions()
    val = float(np.linalg.eigvalsh(matrix_abs(C1 + C2) - matrix_abs(C1) - matrix_abs(C2))[-1])
    return ProbeResult(family="referee", param=0.0, ratio=val, bound=0.5)


def probe_dominance_pair(tol: ToleranceCfg = DEFAULT_TOL):
    S, T = dominance_pair()
    ratio = _lam1_diff(matrix_abs(S) - T, T)
    return ProbeResult(family="dominance_pair", param=0.0, ratio=ratio, bound=0.25)


def probe_normal_schur_pair(tol: ToleranceCfg = DEFAULT_TOL):
    A, B = normal_schur_pair()
    X = schur_product(A, B)
    D = schur_product(matrix_abs(A), matrix_abs(B))
    lhs = matrix_abs(X + X.conj().T) / 2
    ratio = _lam1_diff(lhs - D, D)
    return ProbeResult(family="normal_schur_pair", param=0.0, ratio=ratio, bound=0.25)


def _fast_abs(M):
    H = M.conj().T @ M
    H = (H + H.conj().T) / 2
    w, v = np.linalg.eigh(H)
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T


def _triangle_objective_raw(mats):
    S = sum(mats)
    T = sum(_fast_abs(M) for M in mats)
    return float(np.linalg.eigvalsh(_fast_abs(S) - T)[-1])


def triangle_objective(contractions, tol: ToleranceCfg = DEFAULT_TOL):
    """lam_max(|sum A_j| - sum |A_j|); capped by k/4 for contractions."""
    mats = [as_matrix(M) for M in contractions]
    for i, M in enumerate(mats):
        smax = float(np.linalg.svd(M, compute_uv=False)[0]) if M.size else 0.0
        if smax > 1.0 + tol.abs + tol.rel:
            raise NotContraction(f"input {i} has sigma_max {smax:.6g} > 1", sigma_max=smax)
    return _triangle_objective_raw(mats)


def _clip_contraction(M):
    """Metric projection (in spectral norm) onto the contraction set."""
    U, s, Vh = np.linalg.svd(M)
    if s[0] <= 1.0:
        return M
    return (U * np.minimum(s, 1.0)) @ Vh


def _hermitian_abs(H):
    w, v = np.linalg.eigh(H)
    return (v * np.abs(w)) @ v.conj().T


def _theorem_objective_raw(G, op, n):
    M = G.conj().T @ G
    A, X, B = M[:n, :n], M[:n, n:], M[n:, n:]
    if op == "plus":
        Xd = X + X.conj().T
        D = A + B
    else:
        Xd = X * X.conj().T
        D = A * B
    D = (D + D.conj().T) / 2
    den = float(np.linalg.eigvalsh(D)[-1])
    if den <= 1e-13 * max(1.0, float(np.trace(M).real)):
        return 0.0
    Xd = (Xd + Xd.conj().T) / 2
    num = float(np.linalg.eigvalsh(_hermitian_abs(Xd) - D)[-1])
    return num / den


def _ginibre(rows, cols, rng):
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


class _TriangleSpace:
    def __init__(self, k, n):
        self.k, self.n = k, n

    def random_point(self, rng):
        return [_clip_contraction(_ginibre(self.n, self.n, rng)) for _ in range(self.k)]

    def from_init(self, mats):
        if len(mats) != self.k:
            raise ValueError(f"initial point must have {self.k} matrices")
        return [_clip_contraction(as_matrix(M)) for M in mats]

    def perturb(self, point, step, rng):
        return [_clip_contraction(M + step * _ginibre(self.n, self.n, rng)) for M in point]

    def value(self, point):
        return _triangle_objective_raw(point)

    def serialize(self, point):
        return list(point)


class _TheoremSpace:
    def __init__(self, op, n):
        self.op, self.n = op, n
        self.norm = np.sqrt(2 * n)

    def _normalize(self, G):
        f = np.linalg.norm(G)
        return G if f == 0 else G * (self.norm / f)

    def random_point(self, rng):
        return self._normalize(_ginibre(2 * self.n, 2 * self.n, rng))

    def from_init(self, mats):
        (G,) = mats
        return self._normalize(as_matrix(G))

    def perturb(self, G, step, rng):
        return self._normalize(G + step * _ginibre(2 * self.n, 2 * self.n, rng))

    def value(self, G):
        return _theorem_objective_raw(G, self.op, self.n)

    def serialize(self, G):
        return [G]


def _space(cfg: SearchConfig):
    if cfg.kind == "triangle":
        return _TriangleSpace(cfg.k, cfg.n)
    return _TheoremSpace("plus" if cfg.kind == "theorem_plus" else "schur", cfg.n)


def _check_bound(value, cfg, restart, point, space):
    if value > cfg.bound + BOUND_SLACK:
        raise BoundExceeded(
            f"objective {value!r} exceeds bound {cfg.bound} in restart {restart}",
            value=value,
            bound=cfg.bound,
            reproducer={
                "config": cfg,
                "restart": restart,
                "point": space.serialize(point),
            },
        )


def _run_restart(cfg, space, restart, budget):
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, restart]))
    if restart == 0 and cfg.init_point is not None:
        point = space.from_init(cfg.init_point)
    else:
        point = space.random_point(rng)
    best = space.value(point)
    _check_bound(best, cfg, restart, point, space)
    evals = 1
    step = cfg.step_init
    streak = 0
    improvements = 0
    traj = [(1, best)]
    while evals < budget:
        prop = space.perturb(point, step, rng)
        value = space.value(prop)
        evals += 1
        _check_bound(value, cfg, restart, prop, space)
        if value > best:
            point, best = prop, value
            improvements += 1
            streak = 0
            if improvements % TRAJECTORY_STRIDE == 1 or TRAJECTORY_STRIDE == 1:
                traj.append((evals, best))
        else:
            streak += 1
            if streak >= FAIL_STREAK:
                step *= cfg.step_decay
                streak = 0
    traj.append((evals, best))
    return best, point, evals, traj


def search(cfg: SearchConfig) -> SearchResult:
    """Multi-restart (1+1) adaptive random search.

    Restart r uses the RNG stream seeded by the splittable scheme
    SeedSequence([seed, r]); identical configs give identical results.
    """
    cfg.validate()
    space = _space(cfg)
    start = time.perf_counter()
    base = cfg.budget // cfg.restarts
    budgets = [base + (1 if r < cfg.budget % cfg.restarts else 0) for r in range(cfg.restarts)]
    best_value = -np.inf
    best_point = None
    best_traj = []
    best_restart = 0
    total_evals = 0
    for r in range(cfg.restarts):
        if budgets[r] == 0:
            continue
        value, point, evals, traj = _run_restart(cfg, space, r, budgets[r])
        total_evals += evals
        if value > best_value:
            best_value, best_point, best_traj, best_restart = value, point, traj, r
    return SearchResult(
        best_value=float(best_value),
        bound=cfg.bound,
        best_point=space.serialize(best_point),
        eval_count=total_evals,
        trajectory=best_traj,
        restart_seeds=[[cfg.seed, r] for r in range(cfg.restarts)],
        best_restart=best_restart,
        config=cfg,
        wall_time=time.perf_counter() - start,
    )


def conjecture_report(k, n, cfg: SearchConfig = None, **overrides):
    """Numerical probe of the conjectured odd-k sharpness of k/4.

    Runs the triangle search and summarizes how much of the gap to the
    conjectured bound the search closed.  The result is evidence only
    and never claims resolution in either direction; a bound breach
    propagates as BoundExceeded with the offending point serialized for
    independent re-verification.
    """
    if k <= 1:
        raise ValueError("conjecture probe needs k > 1")
    if k % 2 == 0:
        raise EvenK(f"k = {k} is even: that case is settled (k/4 is sharp for n >= 3)")
    if cfg is None:
        cfg = SearchConfig(kind="triangle", n=n, k=k, **overrides)
    else:
        cfg = replace(cfg, kind="triangle", n=n, k=k, **overrides)
    result = search(cfg)
    bound = k / 4
    summary = {
        "k": k,
        "n": n,
        "best_value": result.best_value,
        "conjectured_bound": bound,
        "fraction_of_bound": result.best_value / bound,
        "eval_count": result.eval_count,
        "status": "evidence-only: no visited point exceeded the conjectured bound",
    }
    return result, summary
