"""Structured pass/fail evidence returned by witnesses and checkers."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _jsonable_matrix(M):
    M = np.asarray(M, dtype=complex)
    out = {"n": int(M.shape[0]), "re": np.real(M).tolist()}
    if np.any(M.imag != 0):
        out["im"] = np.imag(M).tolist()
    return out


@dataclass
class WitnessReport:
    """A constructed unitary/symmetry plus the certified operator inequality.

    margin = lam_min(rhs - lhs); passed iff the Loewner test accepted at
    the configured tolerance.  ``V`` is the witness (or a list of
    witnesses); ``witness_class`` records the declared class.
    """

    claim_id: str
    V: object
    lhs: np.ndarray
    rhs: np.ndarray
    margin: float
    passed: bool
    witness_class: str = "symmetry"
    aux: dict = field(default_factory=dict)

    def to_jsonable(self):
        vs = self.V if isinstance(self.V, (list, tuple)) else [self.V]
        return {
            "claim_id": self.claim_id,
            "witness_class": self.witness_class,
            "V": [_jsonable_matrix(v) for v in vs],
            "margin": self.margin,
            "pass": self.passed,
            "lhs_spectrum": sorted(np.linalg.eigvalsh(self.lhs).tolist(), reverse=True),
            "rhs_spectrum": sorted(np.linalg.eigvalsh(self.rhs).tolist(), reverse=True),
            "aux": {k: v for k, v in self.aux.items() if not isinstance(v, np.ndarray)},
        }


@dataclass
class CheckReport:
    """A scalar inequality check: passed iff lhs <= rhs within tolerance.

    For parameterized families the stored lhs/rhs belong to the worst
    sub-case and ``worst_violation`` is the largest lhs - rhs seen.
    """

    check_id: str
    params: dict
    lhs_value: float
    rhs_value: float
    passed: bool
    worst_violation: float

    def to_jsonable(self):
        def f(x):
            return x if np.isfinite(x) else repr(float(x))

        return {
            "check_id": self.check_id,
            "params": self.params,
            "lhs": f(self.lhs_value),
            "rhs": f(self.rhs_value),
            "pass": self.passed,
            "worst_violation": f(self.worst_violation),
        }
