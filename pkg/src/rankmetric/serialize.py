"""JSON formats for codes and invariant reports.

Code file::

    {"field": {"p": 2, "e": 1}, "n": 2, "m": 2,
     "basis": [[[1, 0], [0, 0]], ...]}

Written canonically: the basis is the RREF basis of the row-major
vectorizations (rows ordered by pivot), one matrix per line, so writing,
reading and writing again gives identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .codes import RankMetricCode
from .field import field_from_json
from .linalg import Subspace


class CodeFormatError(ValueError):
    pass


def code_to_json(C: RankMetricCode) -> dict:
    return {
        "field": C.field.to_json(),
        "n": C.n,
        "m": C.m,
        "basis": [M.tolist() for M in C.basis_matrices()],
    }


def dumps_code(C: RankMetricCode) -> str:
    obj = code_to_json(C)
    lines = ["{",
             f'  "field": {json.dumps(obj["field"])},',
             f'  "n": {C.n},',
             f'  "m": {C.m},']
    if obj["basis"]:
        lines.append('  "basis": [')
        body = [f"    {json.dumps(M)}" for M in obj["basis"]]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "basis": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def code_from_json(obj) -> RankMetricCode:
    try:
        F = field_from_json(obj["field"])
        n, m = int(obj["n"]), int(obj["m"])
        mats = [np.array(M, dtype=np.int64) for M in obj["basis"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeFormatError(f"malformed code file: {exc}") from exc
    if n < 1 or m < 1:
        raise CodeFormatError("n and m must be positive")
    for M in mats:
        if M.shape != (n, m):
            raise CodeFormatError(f"basis matrix of shape {M.shape}, expected {(n, m)}")
    try:
        return RankMetricCode.from_matrices(F, mats, shape=(n, m))
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from exc


def loads_code(text: str) -> RankMetricCode:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFormatError(f"not valid JSON: {exc}") from exc
    return code_from_json(obj)


def load_code(path) -> RankMetricCode:
    with open(path) as fh:
        return loads_code(fh.read())


def dump_code(C: RankMetricCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_code(C))


def rank_value_to_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def invariants_to_json(weights=None, rank_distribution=None, rho=None) -> dict:
    """Invariant report; big counts become decimal strings."""
    out = {}
    if weights is not None:
        out["weights"] = list(weights)
    if rank_distribution is not None:
        out["rank_distribution"] = [str(int(a)) for a in rank_distribution]
    if rho is not None:
        out["rho"] = rank_value_to_json(rho) if isinstance(rho, Fraction) else rho
    return out


def subspace_from_json(F, ambient: int, rows):
    rows = [list(map(int, r)) for r in rows]
    return Subspace.span(F, ambient, rows)
