"""Flat-file export of R-matrices: a JSON document and a lossy CSV variant.

The JSON writer is a fixed-field-order, fixed-float-format emitter (17
significant digits, enough to round-trip a double exactly), so identical
inputs always produce byte-identical output and write -> read -> write is
the identity on bytes.  CSV drops all metadata by design and keeps only the
nonzero entries under a fixed ``row,col,re,im`` header.
"""

import json

import numpy as np

from .errors import QAlgebraError
from .rmatrix import RMatrix

SCHEMA_VERSION = "1"
ENTRY_EPS = 1e-14


def fmt_float(x: float) -> str:
    """Fixed decimal rendering: 17 significant digits, round-trip exact."""
    return format(float(x), ".17g")


def matrix_document(rmat: RMatrix) -> dict:
    """The export dict for an R-matrix; entries below ENTRY_EPS are dropped."""
    spec1, spec2 = rmat.mod1, rmat.mod2
    root = spec1.root
    entries = []
    M = rmat.matrix
    for row in range(M.shape[0]):
        for col in range(M.shape[1]):
            v = M[row, col]
            if abs(v) > ENTRY_EPS:
                entries.append({"row": row, "col": col, "re": float(v.real), "im": float(v.imag)})
    return {
        "schema_version": SCHEMA_VERSION,
        "k": root.k,
        "m": root.m,
        "groups": [spec1.group.value, spec2.group.value],
        "p_values": [[spec1.p.real, spec1.p.imag], [spec2.p.real, spec2.p.imag]],
        "dims": [spec1.dim, spec2.dim],
        "ordering": "lexicographic",
        "construction": rmat.construction.value,
        "entries": entries,
    }


_FIELD_ORDER = ("schema_version", "k", "m", "groups", "p_values", "dims", "ordering", "construction", "entries")


def dumps_document(doc: dict) -> str:
    """Serialize a matrix document deterministically (fixed order/format)."""
    parts = []
    parts.append(f'"schema_version":{json.dumps(doc["schema_version"])}')
    parts.append(f'"k":{doc["k"]}')
    parts.append(f'"m":{doc["m"]}')
    parts.append('"groups":[' + ",".join(json.dumps(g) for g in doc["groups"]) + "]")
    pv = ",".join("[" + fmt_float(re) + "," + fmt_float(im) + "]" for re, im in doc["p_values"])
    parts.append(f'"p_values":[{pv}]')
    parts.append('"dims":[' + ",".join(str(int(d)) for d in doc["dims"]) + "]")
    parts.append(f'"ordering":{json.dumps(doc["ordering"])}')
    parts.append(f'"construction":{json.dumps(doc["construction"])}')
    ents = ",".join(
        '{"row":%d,"col":%d,"re":%s,"im":%s}' % (e["row"], e["col"], fmt_float(e["re"]), fmt_float(e["im"]))
        for e in doc["entries"]
    )
    parts.append(f'"entries":[{ents}]')
    return "{" + ",".join(parts) + "}\n"


def loads_document(text: str) -> dict:
    """Parse a matrix document and validate its shape."""
    doc = json.loads(text)
    missing = [f for f in _FIELD_ORDER if f not in doc]
    if missing:
        raise QAlgebraError("bad-document", f"matrix document is missing fields: {missing}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise QAlgebraError("bad-schema-version", f"unsupported schema_version {doc['schema_version']!r}")
    if doc["ordering"] != "lexicographic":
        raise QAlgebraError("bad-document", f"unsupported basis ordering {doc['ordering']!r}")
    return doc


def document_matrix(doc: dict) -> np.ndarray:
    """Reconstruct the dense matrix from a parsed document."""
    dim = 1
    for d in doc["dims"]:
        dim *= int(d)
    M = np.zeros((dim, dim), dtype=complex)
    for e in doc["entries"]:
        M[int(e["row"]), int(e["col"])] = complex(float(e["re"]), float(e["im"]))
    return M


def dumps_entries_csv(matrix: np.ndarray) -> str:
    """CSV of the nonzero entries: header ``row,col,re,im``, one line each."""
    M = np.asarray(matrix)
    lines = ["row,col,re,im"]
    for row in range(M.shape[0]):
        for col in range(M.shape[1]):
            v = M[row, col]
            if abs(v) > ENTRY_EPS:
                lines.append(f"{row},{col},{fmt_float(v.real)},{fmt_float(v.imag)}")
    return "\n".join(lines) + "\n"
