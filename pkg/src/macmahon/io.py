"""JSON encodings of plane partitions, tableaux, marked matrices and reports."""

from __future__ import annotations

import json
from importlib import resources

from .bijections.knuth import MarkedMatrix
from .bijections.tableaux import MarkedShiftedTableau, MarkedValue, ShiftedTableau
from .partitions import Partition, PlanePartition


class InvalidInput(ValueError):
    pass


def load_schema(name: str) -> dict:
    text = resources.files("macmahon.schemas").joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _field(obj, key: str, kind: type):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"expected an object with a {key!r} field")
    value = obj[key]
    if not isinstance(value, kind):
        raise InvalidInput(f"field {key!r} must be a {kind.__name__}")
    return value


def _int(v) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidInput(f"expected an integer, got {v!r}")
    return v


def pp_to_json(pp: PlanePartition) -> dict:
    return {"rows": [list(row) for row in pp.rows]}


def pp_from_json(obj) -> PlanePartition:
    rows = _field(obj, "rows", list)
    if not all(isinstance(row, list) for row in rows):
        raise InvalidInput("every row must be a list")
    return PlanePartition.from_rows([[_int(v) for v in row] for row in rows])


def partition_to_json(lam: Partition) -> dict:
    return {"parts": list(lam.parts)}


def partition_from_json(obj) -> Partition:
    return Partition.from_list([_int(v) for v in _field(obj, "parts", list)])


def marked_to_json(v: MarkedValue) -> dict:
    return {"v": v.magnitude, "m": v.marked}


def marked_from_json(obj) -> MarkedValue:
    magnitude = _int(_field(obj, "v", int))
    marked = _field(obj, "m", bool)
    try:
        return MarkedValue(magnitude, marked)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def tableau_to_json(tab: ShiftedTableau | MarkedShiftedTableau) -> dict:
    if isinstance(tab, ShiftedTableau):
        rows = [[{"v": v, "m": False} for v in row] for row in tab.rows]
    else:
        rows = [[marked_to_json(v) for v in row] for row in tab.rows]
    return {"shape": list(tab.shape.parts), "rows": rows}


def _tableau_rows(obj) -> list[list[MarkedValue]]:
    shape = _field(obj, "shape", list)
    rows = [[marked_from_json(v) for v in row] for row in _field(obj, "rows", list)]
    if [len(row) for row in rows] != shape:
        raise InvalidInput(f"row lengths {[len(row) for row in rows]} disagree with shape {shape}")
    return rows


def marked_tableau_from_json(obj) -> MarkedShiftedTableau:
    return MarkedShiftedTableau(tuple(map(tuple, _tableau_rows(obj))))


def shifted_tableau_from_json(obj) -> ShiftedTableau:
    rows = _tableau_rows(obj)
    if any(v.marked for row in rows for v in row):
        raise InvalidInput("an unmarked tableau cannot carry marks")
    return ShiftedTableau(tuple(tuple(v.magnitude for v in row) for row in rows))


def pair_to_json(S, T) -> dict:
    return {"S": tableau_to_json(S), "T": tableau_to_json(T)}


def pair_from_json(obj, marked: bool) -> tuple:
    reader = marked_tableau_from_json if marked else shifted_tableau_from_json
    return reader(_field(obj, "S", dict)), reader(_field(obj, "T", dict))


def matrix_to_json(A: MarkedMatrix) -> dict:
    return {"rows": [[marked_to_json(a) if a else 0 for a in row] for row in A.rows]}


def matrix_from_json(obj) -> MarkedMatrix:
    rows = _field(obj, "rows", list)
    if not all(isinstance(row, list) for row in rows):
        raise InvalidInput("every row must be a list")
    grid = [[0 if (a == 0 and not isinstance(a, bool)) else marked_from_json(a) for a in row] for row in rows]
    return MarkedMatrix(tuple(map(tuple, grid)))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
