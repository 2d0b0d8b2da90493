"""Numerical toolkit for block-matrix operator inequalities.

Builds the witness unitaries/symmetries behind the 1/4- and
k/4-constant inequalities for PSD partitioned matrices, checks their
eigenvalue/norm consequences on exact and randomized inputs, and runs
extremal searches probing sharpness of the constants.
"""

__version__ = "0.1.0"

from .blocks import (
    PsdBlock,
    dominance_block,
    gram_block,
    gram_pair_block,
    hermitian_dilation,
    make_block,
    polar_block,
    sample_psd_block,
)
from .checks import (
    akext2_check,
    akext_check,
    bhatia_davis_check,
    det_schwarz_check,
    diag_check,
    gram_geo_check,
    gram_norm_check,
    norm_check,
    projection_ratio,
    weyl_geo_check,
    zpolar_checks,
)
from .extremal import (
    ProbeResult,
    SearchConfig,
    SearchResult,
    conjecture_report,
    probe_dominance_pair,
    probe_niceex,
    probe_normal_schur_pair,
    probe_referee,
    search,
    triangle_objective,
)
from .linalg import (
    Spectrum,
    diag_entries_desc,
    direct_sum,
    eigh,
    eigvalsh,
    geo_mean_unitary_link,
    geometric_mean,
    hermitian_sign_symmetry,
    kyfan_weak_majorization,
    loewner_leq,
    matrix_abs,
    polar_unitary,
    schur_product,
    sqrt_psd,
    svd,
    weak_log_majorization,
)
from .reports import CheckReport, WitnessReport
from .tolerances import DEFAULT_TOL, ToleranceCfg
from .verify import run_suite
from .witnesses import (
    ando_sum_bound,
    bhatia_kittaneh_witness,
    mean_witness,
    minus_witness,
    normal_schur_witness,
    offdiag_bound,
    pm_dominance_witness,
    prop0_witness,
    tao_bound,
    theorem_witness,
    triangle_bound,
)
