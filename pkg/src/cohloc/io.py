"""JSON exchange format for matrices and vectors.

``{"dim": n, "re": [[...], ...], "im": [[...], ...]}`` for matrices and the
same with flat lists for vectors. ``"im"`` may be omitted.
"""

import json

import numpy as np

from .exceptions import CohlocError


class MatrixFormatError(CohlocError):
    pass


def from_json_obj(obj, kind="matrix"):
    if not isinstance(obj, dict) or "re" not in obj:
        raise MatrixFormatError("expected an object with at least a 're' field")
    try:
        re = np.asarray(obj["re"], dtype=np.float64)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=np.float64)
    except (TypeError, ValueError) as err:
        raise MatrixFormatError(f"non-numeric entries: {err}") from None
    if re.shape != im.shape:
        raise MatrixFormatError(f"'re' shape {re.shape} differs from 'im' shape {im.shape}")
    ndim = 2 if kind == "matrix" else 1
    if re.ndim != ndim:
        raise MatrixFormatError(f"expected a {ndim}-d array for a {kind}, got shape {re.shape}")
    dim = obj.get("dim", re.shape[0])
    if dim != re.shape[0]:
        raise MatrixFormatError(f"'dim' is {dim} but the data has {re.shape[0]} rows")
    ret = re + 1j * im
    if not np.all(np.isfinite(ret)):
        raise MatrixFormatError("non-finite entries")
    return ret


def to_json_obj(arr):
    arr = np.asarray(arr, dtype=np.complex128)
    return {"dim": int(arr.shape[0]), "re": arr.real.tolist(), "im": arr.imag.tolist()}


def load_matrix(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as err:
        raise MatrixFormatError(f"{path}: invalid JSON ({err})") from None
    return from_json_obj(obj, "matrix")


def save_matrix(path, arr):
    with open(path, "w") as fh:
        json.dump(to_json_obj(arr), fh)
