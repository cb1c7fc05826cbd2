"""JSON interchange for scalars, algebras, Hopf algebras and subspaces.

Scalars inside algebra documents are strings holding the comma separated
rational coefficients (constant term first) in Q(w_n), where n is the
document's ``conductor``; "1/2" is a rational, "0,1" is w.  Stand-alone
scalars use ``{"conductor": n, "coeffs": ["p/q", ...]}``.

Hopf document::

    {"conductor": n, "dim": d, "labels": [...],
     "mult": [[i, j, k, "s"], ...],      # e_i e_j  contains s e_k
     "unit": ["s", ...],
     "delta": [[i, j, k, "s"], ...],     # Delta(e_i) contains s e_j (x) e_k
     "counit": ["s", ...],
     "antipode": [["s", ...], ...],      # row i = S(e_i)
     "antipode_inv": [...],              # optional, same layout
     "family": "taft", "params": {"n": 3}}   # optional
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import FinDimAlgebra
from .hopf import HopfAlgebra
from .linalg import Matrix, Subspace
from .scalars import CycScalar, CyclotomicField, format_scalar

__all__ = [
    "SchemaError",
    "scalar_str",
    "algebra_to_json",
    "algebra_from_json",
    "hopf_to_json",
    "hopf_from_json",
    "subspace_to_json",
    "subspace_from_json",
    "functional_from_json",
    "dumps",
]


class SchemaError(ValueError):
    pass


def scalar_str(a: CycScalar) -> str:
    return format_scalar(a)


def _parse(K: CyclotomicField, s: Any) -> CycScalar:
    if isinstance(s, dict):
        a = CycScalar.from_json(s)
        return K(a)
    if isinstance(s, (int, str)):
        try:
            return K.parse(str(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad scalar {s!r}") from exc
    raise SchemaError(f"bad scalar {s!r}")


def _require(obj: dict, *keys):
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaError(f"missing keys: {', '.join(missing)}")


def _field(obj: dict) -> CyclotomicField:
    try:
        n = int(obj.get("conductor", 1))
    except (TypeError, ValueError) as exc:
        raise SchemaError("conductor must be an integer") from exc
    if n < 1:
        raise SchemaError("conductor must be positive")
    return CyclotomicField(n)


def _vec(K, values, dim, what):
    if not isinstance(values, list) or len(values) != dim:
        raise SchemaError(f"{what} must be a list of {dim} scalars")
    return tuple(_parse(K, s) for s in values)


def _triples(K, items, dim, what):
    out = []
    if not isinstance(items, list):
        raise SchemaError(f"{what} must be a list")
    for t in items:
        if not isinstance(t, list) or len(t) != 4:
            raise SchemaError(f"{what} entries are [i, j, k, scalar]")
        i, j, k, s = t
        if not all(isinstance(v, int) and 0 <= v < dim for v in (i, j, k)):
            raise SchemaError(f"{what} index out of range: {t}")
        out.append((i, j, k, _parse(K, s)))
    return out


def algebra_to_json(A: FinDimAlgebra) -> dict:
    mult = [[i, j, k, scalar_str(c)]
            for i in range(A.dim) for j in range(A.dim) for k, c in A.table[i][j]]
    doc = {"conductor": A.field.n, "dim": A.dim, "labels": list(A.labels), "mult": mult}
    if A.unit is not None:
        doc["unit"] = [scalar_str(c) for c in A.unit]
    return doc


def algebra_from_json(obj: dict) -> FinDimAlgebra:
    _require(obj, "dim", "mult")
    K = _field(obj)
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim must be a positive integer")
    mult = _triples(K, obj["mult"], dim, "mult")
    unit = _vec(K, obj["unit"], dim, "unit") if obj.get("unit") is not None else None
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != dim):
        raise SchemaError("labels must list one name per basis vector")
    return FinDimAlgebra(K, dim, mult, unit, labels)


def hopf_to_json(H: HopfAlgebra) -> dict:
    doc = algebra_to_json(H.algebra)
    doc["delta"] = [[i, j, k, scalar_str(c)]
                    for i in range(H.dim) for (j, k), c in sorted(H.delta[i].items())]
    doc["counit"] = [scalar_str(c) for c in H.counit]
    doc["antipode"] = [[scalar_str(c) for c in H.antipode.column(i)] for i in range(H.dim)]
    doc["antipode_inv"] = [[scalar_str(c) for c in H.antipode_inv.column(i)]
                           for i in range(H.dim)]
    if H.family:
        doc["family"] = H.family
        doc["params"] = dict(H.params)
    return doc


def _matrix_rows_as_columns(K, rows, dim, what) -> Matrix:
    if not isinstance(rows, list) or len(rows) != dim:
        raise SchemaError(f"{what} must have {dim} rows")
    cols = [_vec(K, r, dim, f"{what} row") for r in rows]
    return Matrix(zip(*cols), dim, K)


def hopf_from_json(obj: dict) -> HopfAlgebra:
    _require(obj, "dim", "mult", "unit", "delta", "counit", "antipode")
    A = algebra_from_json(obj)
    K = A.field
    dim = A.dim
    delta = [dict() for _ in range(dim)]
    for i, j, k, c in _triples(K, obj["delta"], dim, "delta"):
        d = delta[i]
        d[(j, k)] = d[(j, k)] + c if (j, k) in d else c
    counit = _vec(K, obj["counit"], dim, "counit")
    S = _matrix_rows_as_columns(K, obj["antipode"], dim, "antipode")
    S_inv = None
    if obj.get("antipode_inv") is not None:
        S_inv = _matrix_rows_as_columns(K, obj["antipode_inv"], dim, "antipode_inv")
    family = obj.get("family")
    params = obj.get("params") or {}
    generators = {}
    if family in ("taft", "group") and "n" in params:
        n = params["n"]
        g_index = n if family == "taft" else 1 % n
        generators["g"] = A.basis_vector(g_index)
        if family == "taft":
            generators["x"] = A.basis_vector(1)
    try:
        return HopfAlgebra(A, delta, counit, S, S_inv, family, params, generators)
    except ZeroDivisionError as exc:
        raise SchemaError("antipode is not invertible") from exc


def subspace_to_json(V: Subspace) -> dict:
    return {"conductor": V.field.n, "ambient_dim": V.ambient_dim,
            "basis": [[scalar_str(c) for c in b] for b in V.basis]}


def subspace_from_json(obj: dict, K: CyclotomicField | None = None) -> Subspace:
    _require(obj, "ambient_dim", "basis")
    K = K or _field(obj)
    n = obj["ambient_dim"]
    if not isinstance(obj["basis"], list):
        raise SchemaError("basis must be a list of vectors")
    return Subspace(n, (_vec(K, b, n, "basis vector") for b in obj["basis"]), K)


def functional_from_json(obj, K: CyclotomicField, dim: int) -> tuple:
    """Either a list of scalars or {"coeffs": [...]}."""
    if isinstance(obj, dict):
        _require(obj, "coeffs")
        obj = obj["coeffs"]
    return _vec(K, obj, dim, "functional")


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
