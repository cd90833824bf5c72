"""JSON file formats for every domain object, plus canonical dumping.

Complex numbers are [re, im] pairs; signals are arrays of pairs in element
index order; groups are arrays of factor sizes like [4, 2]. Every document
carries a top-level "schema": 1. Doubles go through Python's shortest
round-trip repr, so serialize -> parse -> serialize is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .convop import FilterMatrix, TranslationVarianceReport, VectorSignal
from .errors import SchemaError
from .fourier import Signal
from .group import GroupSpec
from .riesz import GeneratorSystem, RieszReport
from .spectral import SpectralReport

SCHEMA_VERSION = 1


def _pairs(values: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in values]


def _values_from_pairs(obj, expected: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != expected:
        raise SchemaError(f"{where}: expected a list of {expected} [re, im] pairs")
    out = np.empty(expected, dtype=np.complex128)
    for i, pair in enumerate(obj):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)):
            raise SchemaError(f"{where}[{i}]: expected an [re, im] number pair")
        out[i] = complex(pair[0], pair[1])
    return out


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _group_from_json(obj, where: str) -> GroupSpec:
    if not isinstance(obj, list) or not all(_is_int(s) for s in obj):
        raise SchemaError(f"{where}: expected a list of integer factor sizes")
    return GroupSpec(tuple(obj))


def _require_schema(doc, where: str) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: expected a JSON object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"{where}: missing or unsupported 'schema' (expected {SCHEMA_VERSION})")
    return doc


def _field(doc: dict, name: str, where: str):
    if name not in doc:
        raise SchemaError(f"{where}: missing field '{name}'")
    return doc[name]


def _positive_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise SchemaError(f"{where}: expected a positive integer")
    return value


# ---------------------------------------------------------------------------
# filters

def filter_to_jsonable(filt: FilterMatrix) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "group": list(filt.spec.orders),
        "rows": filt.rows,
        "cols": filt.cols,
        "entries": [[_pairs(filt.taps[m, n]) for n in range(filt.cols)]
                    for m in range(filt.rows)],
    }


def filter_from_jsonable(doc) -> FilterMatrix:
    doc = _require_schema(doc, "filter")
    spec = _group_from_json(_field(doc, "group", "filter"), "filter.group")
    rows = _positive_int(_field(doc, "rows", "filter"), "filter.rows")
    cols = _positive_int(_field(doc, "cols", "filter"), "filter.cols")
    entries = _field(doc, "entries", "filter")
    if not isinstance(entries, list) or len(entries) != rows:
        raise SchemaError(f"filter.entries: expected {rows} rows")
    taps = np.empty((rows, cols, spec.cardinality), dtype=np.complex128)
    for m, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"filter.entries[{m}]: expected {cols} entries")
        for n, sig in enumerate(row):
            taps[m, n] = _values_from_pairs(sig, spec.cardinality, f"filter.entries[{m}][{n}]")
    return FilterMatrix(spec, taps)


# ---------------------------------------------------------------------------
# vector signals

def vector_to_jsonable(vec: VectorSignal) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "group": list(vec.spec.orders),
        "components": [_pairs(vec.stacked[n]) for n in range(vec.n_components)],
    }


def vector_from_jsonable(doc) -> VectorSignal:
    doc = _require_schema(doc, "vector")
    spec = _group_from_json(_field(doc, "group", "vector"), "vector.group")
    comps = _field(doc, "components", "vector")
    if not isinstance(comps, list) or not comps:
        raise SchemaError("vector.components: expected a non-empty list of signals")
    stacked = np.stack([
        _values_from_pairs(c, spec.cardinality, f"vector.components[{n}]")
        for n, c in enumerate(comps)
    ])
    return VectorSignal(spec, stacked)


# ---------------------------------------------------------------------------
# generator systems

def system_to_jsonable(system: GeneratorSystem) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "ambient": list(system.ambient.orders),
        "acting": list(system.acting.orders),
        "embedding": [list(img) for img in system.embedding],
        "generators": [_pairs(phi.values) for phi in system.generators],
    }


def system_from_jsonable(doc) -> GeneratorSystem:
    doc = _require_schema(doc, "system")
    ambient = _group_from_json(_field(doc, "ambient", "system"), "system.ambient")
    acting = _group_from_json(_field(doc, "acting", "system"), "system.acting")
    embedding = _field(doc, "embedding", "system")
    if not isinstance(embedding, list):
        raise SchemaError("system.embedding: expected a list of ambient elements")
    images = []
    for j, img in enumerate(embedding):
        if not isinstance(img, list) or not all(_is_int(v) for v in img):
            raise SchemaError(f"system.embedding[{j}]: expected a residue tuple")
        images.append(tuple(img))
    gens_doc = _field(doc, "generators", "system")
    if not isinstance(gens_doc, list) or not gens_doc:
        raise SchemaError("system.generators: expected a non-empty list of signals")
    generators = tuple(
        Signal(ambient, _values_from_pairs(g, ambient.cardinality, f"system.generators[{n}]"))
        for n, g in enumerate(gens_doc)
    )
    return GeneratorSystem(ambient, acting, tuple(images), generators)


# ---------------------------------------------------------------------------
# dense operators (extract input)

def dense_to_jsonable(matrix: np.ndarray, spec: GroupSpec, rows: int, cols: int) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "group": list(spec.orders),
        "rows": rows,
        "cols": cols,
        "matrix": [_pairs(np.asarray(matrix)[i]) for i in range(np.asarray(matrix).shape[0])],
    }


def dense_from_jsonable(doc) -> tuple[np.ndarray, GroupSpec, int, int]:
    doc = _require_schema(doc, "dense")
    spec = _group_from_json(_field(doc, "group", "dense"), "dense.group")
    rows = _positive_int(_field(doc, "rows", "dense"), "dense.rows")
    cols = _positive_int(_field(doc, "cols", "dense"), "dense.cols")
    body = _field(doc, "matrix", "dense")
    P = spec.cardinality
    if not isinstance(body, list) or len(body) != rows * P:
        raise SchemaError(f"dense.matrix: expected {rows * P} rows")
    mat = np.stack([
        _values_from_pairs(r, cols * P, f"dense.matrix[{i}]") for i, r in enumerate(body)
    ])
    return mat, spec, rows, cols


# ---------------------------------------------------------------------------
# integer-lattice taps (grid-mode input)

def taps_to_jsonable(entries, dim: int, rows: int, cols: int) -> dict:
    body = []
    for m in range(rows):
        row = []
        for n in range(cols):
            row.append([
                {"n": list(offs), "c": [float(c.real), float(c.imag)]}
                for offs, c in sorted(entries[m][n].items())
            ])
        body.append(row)
    return {"schema": SCHEMA_VERSION, "dim": dim, "rows": rows, "cols": cols,
            "entries": body}


def taps_from_jsonable(doc) -> tuple[list, int]:
    """Returns (MxN nest of offset->coefficient dicts, lattice dimension)."""
    doc = _require_schema(doc, "taps")
    dim = _positive_int(_field(doc, "dim", "taps"), "taps.dim")
    rows = _positive_int(_field(doc, "rows", "taps"), "taps.rows")
    cols = _positive_int(_field(doc, "cols", "taps"), "taps.cols")
    body = _field(doc, "entries", "taps")
    if not isinstance(body, list) or len(body) != rows:
        raise SchemaError(f"taps.entries: expected {rows} rows")
    out = []
    for m, row in enumerate(body):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"taps.entries[{m}]: expected {cols} entries")
        out_row = []
        for n, entry in enumerate(row):
            where = f"taps.entries[{m}][{n}]"
            if not isinstance(entry, list):
                raise SchemaError(f"{where}: expected a list of taps")
            taps = {}
            for i, tap in enumerate(entry):
                if not isinstance(tap, dict) or "n" not in tap or "c" not in tap:
                    raise SchemaError(f"{where}[{i}]: expected an object with 'n' and 'c'")
                offs = tap["n"]
                if (not isinstance(offs, list) or len(offs) != dim
                        or not all(_is_int(v) for v in offs)):
                    raise SchemaError(f"{where}[{i}].n: expected {dim} integer offsets")
                coeff = tap["c"]
                if (not isinstance(coeff, list) or len(coeff) != 2
                        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in coeff)):
                    raise SchemaError(f"{where}[{i}].c: expected an [re, im] pair")
                taps[tuple(offs)] = taps.get(tuple(offs), 0j) + complex(coeff[0], coeff[1])
            out_row.append(taps)
        out.append(out_row)
    return out, dim


# ---------------------------------------------------------------------------
# reports

def spectral_report_to_jsonable(report: SpectralReport) -> dict:
    out = {k: v for k, v in asdict(report).items() if v is not None}
    out["schema"] = SCHEMA_VERSION
    if report.invertible is None and report.min_det_abs is not None:
        # grid mode: the determinant minimum is reported but uncertified
        out["invertible"] = None
    return out


def riesz_report_to_jsonable(report: RieszReport) -> dict:
    out = {k: v for k, v in asdict(report).items() if v is not None}
    out["schema"] = SCHEMA_VERSION
    return out


def variance_report_to_jsonable(report: TranslationVarianceReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "exact": True,
        "translation_invariant": False,
        "max_deviation": report.max_deviation,
        "tolerance": report.tolerance,
        "witness_translation": list(report.witness_translation),
        "witness_component": report.witness_component,
    }


# ---------------------------------------------------------------------------
# documents

def dumps(doc: dict) -> str:
    """Canonical, deterministic rendering: sorted keys, two-space indent."""
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"


def load_path(path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc


def sniff_kind(doc) -> str:
    """Classify a parsed document by its fields."""
    if not isinstance(doc, dict):
        raise SchemaError("expected a JSON object")
    if "entries" in doc and "group" in doc:
        return "filter"
    if "entries" in doc and "dim" in doc:
        return "taps"
    if "components" in doc:
        return "vector"
    if "generators" in doc:
        return "system"
    if "matrix" in doc:
        return "dense"
    raise SchemaError("cannot classify document: unrecognized field set")
