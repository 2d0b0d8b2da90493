"""Matrix/block/factor-list JSON formats, run manifests, report files.

Matrix JSON: {"n": int, "re": [[...]], "im": [[...]]} row-major; an
omitted "im" means a real matrix.  Block JSON: {"A": matrix, "X":
matrix, "B": matrix}.  Factor lists: {"pairs": [{"A": m, "B": m},
...]}.
"""
from __future__ import annotations

import csv
import hashlib
import json
import math
import os
import time
from dataclasses import asdict, dataclass

import numpy as np

from .blocks import PsdBlock, make_block
from .linalg import as_matrix
from .tolerances import DEFAULT_TOL, ToleranceCfg

__all__ = [
    "matrix_to_json",
    "matrix_from_json",
    "block_to_json",
    "block_from_json",
    "factors_from_json",
    "load_json",
    "dump_json",
    "write_csv",
    "file_digest",
    "RunManifest",
    "make_manifest",
]

CSV_COLUMNS = ["check_id", "n", "params", "lhs", "rhs", "margin", "pass"]


def matrix_to_json(M):
    M = as_matrix(M)
    out = {"n": int(M.shape[0]), "re": np.real(M).tolist()}
    if np.any(M.imag != 0):
        out["im"] = np.imag(M).tolist()
    return out


def matrix_from_json(obj):
    n = int(obj["n"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros((n, n))), dtype=float)
    if re.shape != (n, n) or im.shape != (n, n):
        raise ValueError(f"matrix JSON shape mismatch for n={n}")
    return as_matrix(re + 1j * im)


def block_to_json(blk: PsdBlock):
    return {
        "A": matrix_to_json(blk.A),
        "X": matrix_to_json(blk.X),
        "B": matrix_to_json(blk.B),
        "psd_margin": blk.psd_margin,
    }


def block_from_json(obj, tol: ToleranceCfg = DEFAULT_TOL) -> PsdBlock:
    """Load and re-validate a block; reports the achieved PSD margin."""
    return make_block(
        matrix_from_json(obj["A"]),
        matrix_from_json(obj["X"]),
        matrix_from_json(obj["B"]),
        tol,
    )


def factors_from_json(obj):
    pairs = obj.get("pairs", [])
    if not pairs:
        raise ValueError("factor-list JSON must contain a nonempty 'pairs' array")
    return [(matrix_from_json(p["A"]), matrix_from_json(p["B"])) for p in pairs]


def _sanitize(obj):
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return matrix_to_json(obj)
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return f if math.isfinite(f) else repr(f)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj, path):
    """Canonical JSON dump: sorted keys, fixed layout, trailing newline."""
    text = json.dumps(_sanitize(obj), sort_keys=True, indent=2)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text + "\n")


def write_csv(rows, path):
    """Frozen-column CSV: check_id, n, params, lhs, rhs, margin, pass."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row["check_id"],
                    row["n"],
                    json.dumps(_sanitize(row["params"]), sort_keys=True),
                    row["lhs"],
                    row["rhs"],
                    row["margin"],
                    row["pass"],
                ]
            )


def file_digest(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass(frozen=True)
class RunManifest:
    command: list
    seed: object
    tol_rel: float
    tol_abs: float
    version: str
    input_digests: dict
    timestamp: str

    def to_jsonable(self):
        return asdict(self)


def make_manifest(command, seed, tol: ToleranceCfg, inputs=()):
    """Build the manifest embedded in every report.

    Honors SOURCE_DATE_EPOCH so repeated runs with identical flags can
    produce byte-identical reports.
    """
    from . import __version__

    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    ts = float(epoch) if epoch is not None else time.time()
    return RunManifest(
        command=list(command),
        seed=seed,
        tol_rel=tol.rel,
        tol_abs=tol.abs,
        version=__version__,
        input_digests={str(p): file_digest(p) for p in inputs},
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(ts)),
    )
