"""Constructive witnesses for the "there exists a unitary/symmetry V" claims.

Each operation builds the canonical witness (the sign symmetry or polar
unitary its proof singles out), certifies the claimed operator
inequality numerically, and returns a :class:`WitnessReport` carrying
the residual margin.  No witness search is ever performed.
"""
from __future__ import annotations

import numpy as np

from .blocks import PsdBlock, dominance_block, gram_pair_block, make_block
from .errors import DimensionMismatch, NotContraction, NotNormal
from .linalg import (
    as_matrix,
    direct_sum,
    eigh,
    eigvalsh,
    geometric_mean,
    hermitian_part,
    hermitian_sign_symmetry,
    loewner_leq,
    matrix_abs,
    max_abs,
    polar_unitary,
    require_hermitian,
    schur_product,
    svd,
)
from .reports import CheckReport, WitnessReport
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = [
    "theorem_witness",
    "minus_witness",
    "mean_witness",
    "offdiag_bound",
    "tao_bound",
    "bhatia_kittaneh_witness",
    "ando_sum_bound",
    "prop0_witness",
    "normal_schur_witness",
    "pm_dominance_witness",
    "triangle_bound",
]


def _certify(claim_id, V, lhs, rhs, tol, witness_class="symmetry", aux=None):
    # Certification tolerance scales with the operand magnitude: R - L can
    # be tiny even when L and R are large, and the achievable accuracy of
    # the witness construction is relative to the operands.
    scale = max(1.0, max_abs(lhs), max_abs(rhs))
    passed, margin = loewner_leq(lhs, rhs, ToleranceCfg(rel=tol.rel * scale, abs=tol.abs))
    return WitnessReport(
        claim_id=claim_id,
        V=V,
        lhs=hermitian_part(lhs),
        rhs=hermitian_part(rhs),
        margin=margin,
        passed=passed,
        witness_class=witness_class,
        aux=aux or {},
    )


def _diamond(X, op):
    if op == "plus":
        return X + X.conj().T
    if op == "schur":
        return schur_product(X, X.conj().T)
    raise ValueError(f"unknown diamond op {op!r}")


def _diamond_diag(A, B, op):
    if op == "plus":
        return hermitian_part(A + B)
    if op == "schur":
        return hermitian_part(schur_product(A, B))
    raise ValueError(f"unknown diamond op {op!r}")


def theorem_witness(blk: PsdBlock, op, tol: ToleranceCfg = DEFAULT_TOL):
    """Main 1/4-constant witness for the sum or Schur case.

    V is the sign symmetry of the Hermitian matrix X (diamond) X*.  The
    AGM-form report certifies |X (d) X*| <= A(d)B + (1/4) V (A(d)B) V,
    the geometric-mean form |X (d) X*| <= (A(d)B) # V (A(d)B) V.
    """
    Xd = _diamond(blk.X, op)
    D = _diamond_diag(blk.A, blk.B, op)
    V = hermitian_sign_symmetry(Xd, tol)
    lhs = matrix_abs(Xd)
    VDV = hermitian_part(V @ D @ V)
    agm = _certify(
        f"theorem_{op}_agm",
        V,
        lhs,
        D + VDV / 4,
        tol,
        aux={"op": op},
    )
    geo = _certify(
        f"theorem_{op}_geo",
        V,
        lhs,
        geometric_mean(D, VDV, tol),
        tol,
        aux={"op": op},
    )
    return agm, geo


def minus_witness(blk: PsdBlock, tol: ToleranceCfg = DEFAULT_TOL):
    """Witness for the minus variant: V is the sign symmetry of i(X - X*).

    Certifies |X - X*| <= (A+B) # V(A+B)V and the 1/4 AGM form.  Note
    that V itself may carry imaginary entries even for real X; the
    congruated matrix V(A+B)V is real whenever X is real and X - X* is
    nonsingular.
    """
    K = blk.X - blk.X.conj().T
    V = hermitian_sign_symmetry(1j * K, tol)
    lhs = matrix_abs(K)
    D = hermitian_part(blk.A + blk.B)
    VDV = hermitian_part(V @ D @ V)
    geo = _certify("minus_geo", V, lhs, geometric_mean(D, VDV, tol), tol)
    agm = _certify("minus_agm", V, lhs, D + VDV / 4, tol)
    return geo, agm


def mean_witness(blk: PsdBlock, op, tol: ToleranceCfg = DEFAULT_TOL):
    """Arithmetic-mean form |X (+/-) X*| <= ((A+B) + V(A+B)V)/2."""
    if op == "plus":
        H = blk.X + blk.X.conj().T
        V = hermitian_sign_symmetry(H, tol)
        lhs = matrix_abs(H)
    elif op == "minus":
        K = blk.X - blk.X.conj().T
        V = hermitian_sign_symmetry(1j * K, tol)
        lhs = matrix_abs(K)
    else:
        raise ValueError(f"mean_witness op must be plus or minus, got {op!r}")
    D = hermitian_part(blk.A + blk.B)
    VDV = hermitian_part(V @ D @ V)
    return _certify(f"mean_{op}", V, lhs, (D + VDV) / 2, tol)


def offdiag_bound(blk: PsdBlock, tol: ToleranceCfg = DEFAULT_TOL):
    """Off-diagonal trick with the polar unitary U of X.

    Certifies |X*| <= A # (U B U*) and |X| <= B # (U* A U); the
    arithmetic relaxations (A + U B U*)/2 and (B + U* A U)/2 are
    certified as well, with margins recorded in aux.
    """
    U = polar_unitary(blk.X)
    UBU = hermitian_part(U @ blk.B @ U.conj().T)
    UAU = hermitian_part(U.conj().T @ blk.A @ U)
    lhs1 = matrix_abs(blk.X.conj().T)
    lhs2 = matrix_abs(blk.X)
    _, m1 = loewner_leq(lhs1, (blk.A + UBU) / 2, tol)
    _, m2 = loewner_leq(lhs2, (blk.B + UAU) / 2, tol)
    rep1 = _certify(
        "offdiag_xstar",
        U,
        lhs1,
        geometric_mean(blk.A, UBU, tol),
        tol,
        witness_class="unitary",
        aux={"mean_margin": m1},
    )
    rep2 = _certify(
        "offdiag_x",
        U,
        lhs2,
        geometric_mean(blk.B, UAU, tol),
        tol,
        witness_class="unitary",
        aux={"mean_margin": m2},
    )
    return rep1, rep2


def tao_bound(blk: PsdBlock, tol: ToleranceCfg = DEFAULT_TOL):
    """Elementary bound 2 lam_j(|X|) <= lam_j of the assembled block, j <= n."""
    _, sx, _ = svd(blk.X)
    sblk = eigvalsh(blk.assembled(), tol)
    worst = -np.inf
    worst_j = 1
    for j in range(1, blk.n + 1):
        v = 2 * sx.lam(j) - sblk.lam(j)
        if v > worst:
            worst, worst_j = v, j
    lhs = 2 * sx.lam(worst_j)
    rhs = sblk.lam(worst_j)
    return CheckReport(
        check_id="tao",
        params={"j": worst_j},
        lhs_value=lhs,
        rhs_value=rhs,
        passed=lhs <= rhs + tol.rel * max(1.0, abs(rhs)),
        worst_violation=worst,
    )


def bhatia_kittaneh_witness(A, B, tol: ToleranceCfg = DEFAULT_TOL):
    """Unitary U with |AB| <= U (A*A + BB*)/2 U*.

    The eigenvalue domination lam_j(|AB|) <= lam_j((A*A + BB*)/2) comes
    from the elementary block bound applied to the Gram block of the
    factor pair (A*, B); the Loewner witness U is then the eigenbasis
    alignment of the two sides.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch("bhatia_kittaneh_witness needs equal dimensions")
    S = matrix_abs(A @ B)
    T = hermitian_part((A.conj().T @ A + B @ B.conj().T) / 2)
    _, US = eigh(S, tol)
    _, UT = eigh(T, tol)
    U = US @ UT.conj().T
    # Cross-check the route through the Gram block of (A*, B).
    gram = gram_pair_block(A.conj().T, B, tol)
    tao = tao_bound(gram, tol)
    return _certify(
        "bhatia_kittaneh",
        U,
        S,
        U @ T @ U.conj().T,
        tol,
        witness_class="unitary",
        aux={"tao_worst_violation": tao.worst_violation},
    )


def ando_sum_bound(pairs, tol: ToleranceCfg = DEFAULT_TOL):
    """Sum bound |sum Bi* Ai| <= (sum Ai* Ai) # V* (sum Bi* Bi) V.

    V is the polar unitary of sum Bi* Ai; the arithmetic-mean form is
    certified alongside.
    """
    pairs = [(as_matrix(a), as_matrix(b)) for a, b in pairs]
    if not pairs:
        raise DimensionMismatch("ando_sum_bound needs a nonempty factor list")
    M = sum(b.conj().T @ a for a, b in pairs)
    SA = hermitian_part(sum(a.conj().T @ a for a, _ in pairs))
    SB = hermitian_part(sum(b.conj().T @ b for _, b in pairs))
    V = polar_unitary(M)
    VSBV = hermitian_part(V.conj().T @ SB @ V)
    lhs = matrix_abs(M)
    geo = _certify("ando_geo", V, lhs, geometric_mean(SA, VSBV, tol), tol, witness_class="unitary")
    mean = _certify("ando_mean", V, lhs, (SA + VSBV) / 2, tol, witness_class="unitary")
    return geo, mean


def prop0_witness(blk: PsdBlock, tol: ToleranceCfg = DEFAULT_TOL):
    """Two-unitary direct-sum bound |X| (+) |X| <= U1 (A(+)B) U1* # U2 (A(+)B) U2*.

    U1, U2 in M_2n are assembled from the polar unitary U of X; the
    single-unitary statement has the same spectra by unitary covariance
    of the geometric mean.
    """
    n = blk.n
    U = polar_unitary(blk.X)
    I = np.eye(n)
    Z = np.zeros((n, n))
    U1 = np.block([[Z, I], [U.conj().T, Z]])
    U2 = direct_sum(U.conj().T, I)
    AB = direct_sum(blk.A, blk.B)
    R1 = hermitian_part(U1 @ AB @ U1.conj().T)
    R2 = hermitian_part(U2 @ AB @ U2.conj().T)
    absX = matrix_abs(blk.X)
    lhs = direct_sum(absX, absX)
    return _certify(
        "prop0",
        [U1, U2],
        lhs,
        geometric_mean(R1, R2, tol),
        tol,
        witness_class="unitary",
    )


def _require_normal(M, tol):
    M = as_matrix(M)
    comm = max_abs(M @ M.conj().T - M.conj().T @ M)
    if comm > tol.abs + tol.rel * max(1.0, max_abs(M) ** 2):
        raise NotNormal(f"matrix is not normal (commutator norm {comm:.3e})", commutator_norm=comm)
    return M


def normal_schur_witness(A, B, tol: ToleranceCfg = DEFAULT_TOL):
    """For normal A, B: |A o B + A* o B*|/2 <= |A|o|B| + (1/4) V (|A|o|B|) V*.

    Built from the PSD block [[|A|o|B|, A o B], [A* o B*, |A|o|B|]],
    the Schur product of the two polar blocks.
    """
    A = _require_normal(A, tol)
    B = _require_normal(B, tol)
    D = hermitian_part(schur_product(matrix_abs(A), matrix_abs(B)))
    X = schur_product(A, B)
    blk = make_block(D, X, D, tol)  # validates PSD of the Schur-product block
    H = X + X.conj().T
    V = hermitian_sign_symmetry(H, tol)
    VDV = hermitian_part(V @ D @ V)
    return _certify(
        "normal_schur",
        V,
        matrix_abs(H) / 2,
        D + VDV / 4,
        tol,
        aux={"block_psd_margin": blk.psd_margin},
    )


def pm_dominance_witness(S, T, tol: ToleranceCfg = DEFAULT_TOL):
    """For Hermitian S, T with +-S <= T: |S| <= T + (1/4) V T V*.

    Applies the sum-case witness to the block [[T, S], [S, T]]; the
    X + X* = 2S identity is divided through, so the stored lhs/rhs are
    |S| and T + (1/4) V T V.
    """
    blk = dominance_block(S, T, tol)
    V = hermitian_sign_symmetry(blk.X, tol)
    D = hermitian_part(blk.A)
    VDV = hermitian_part(V @ D @ V)
    return _certify(
        "pm_dominance",
        V,
        matrix_abs(blk.X),
        D + VDV / 4,
        tol,
        aux={"block_psd_margin": blk.psd_margin},
    )


def _require_contractions(mats, tol):
    mats = [as_matrix(M) for M in mats]
    for i, M in enumerate(mats):
        smax = float(np.linalg.svd(M, compute_uv=False)[0]) if M.size else 0.0
        if smax > 1.0 + tol.abs + tol.rel:
            raise NotContraction(
                f"input {i} has largest singular value {smax:.6g} > 1", sigma_max=smax
            )
    return mats


def triangle_bound(contractions, tol: ToleranceCfg = DEFAULT_TOL):
    """Triangle bound |sum A_j| <= (k/4) I + sum |A_j| for k > 1 contractions.

    Hermitian inputs go through the dominance witness directly; general
    inputs are routed through the Hermitian dilation.  The intermediate
    sign symmetry V (of the Hermitian sum, dilated if needed) is kept
    in the report.
    """
    mats = _require_contractions(contractions, tol)
    k = len(mats)
    if k < 2:
        raise ValueError("triangle_bound needs at least two contractions")
    n = mats[0].shape[0]
    for M in mats:
        if M.shape != (n, n):
            raise DimensionMismatch("all contractions must share one dimension")
    hermitian = all(max_abs(M - M.conj().T) <= tol.abs + tol.rel * max(1.0, max_abs(M)) for M in mats)
    if hermitian:
        S = hermitian_part(sum(mats))
        V = hermitian_sign_symmetry(S, tol)
        route = "hermitian"
    else:
        Sdil = sum(
            np.block([[np.zeros((n, n)), M], [M.conj().T, np.zeros((n, n))]]) for M in mats
        )
        V = hermitian_sign_symmetry(Sdil, tol)
        route = "dilation"
    lhs = matrix_abs(sum(mats))
    rhs = (k / 4) * np.eye(n) + sum(matrix_abs(M) for M in mats)
    return _certify(
        "triangle",
        V,
        lhs,
        rhs,
        tol,
        aux={"k": k, "route": route},
    )
