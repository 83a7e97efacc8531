"""JSON file format for skew systems.

    {"field": {"type": "fp", "p": 32003} | {"type": "q"},
     "matrices": [five 6x6 integer arrays]}

Integers are read in the declared field. Skew-symmetry is validated, never
repaired.
"""
from __future__ import annotations

import json
from typing import Union

from .field import field_from_descriptor
from .quartic import K, N, SkewSystem, SkewSystemError


class SystemFormatError(ValueError):
    pass


def system_from_json(doc) -> SkewSystem:
    if not isinstance(doc, dict):
        raise SystemFormatError("top level: expected a JSON object")
    if "field" not in doc:
        raise SystemFormatError("field: missing")
    if not isinstance(doc["field"], dict):
        raise SystemFormatError("field: expected an object like {\"type\": \"fp\", \"p\": 32003}")
    try:
        field = field_from_descriptor(doc["field"])
    except (ValueError, TypeError) as exc:
        raise SystemFormatError(f"field: {exc}") from None
    mats = doc.get("matrices")
    if not isinstance(mats, list):
        raise SystemFormatError("matrices: missing or not a list")
    if len(mats) != K:
        raise SystemFormatError(f"matrices: expected {K} matrices, got {len(mats)}")
    for k, m in enumerate(mats):
        if not isinstance(m, list) or len(m) != N:
            raise SystemFormatError(f"matrices[{k}]: expected {N} rows")
        for i, row in enumerate(m):
            if not isinstance(row, list) or len(row) != N:
                raise SystemFormatError(f"matrices[{k}][{i}]: expected {N} entries")
            for j, x in enumerate(row):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise SystemFormatError(f"matrices[{k}][{i}][{j}]: expected an integer, got {x!r}")
    return SkewSystem(tuple(tuple(tuple(r) for r in m) for m in mats), field)


def loads_system(text: str, source: str = "<string>") -> SkewSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return system_from_json(doc)


def load_system(path: str) -> SkewSystem:
    with open(path) as fh:
        return loads_system(fh.read(), path)


def dump_system(system: SkewSystem, path: Union[str, None] = None) -> str:
    text = json.dumps(system.to_json(), indent=1)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


__all__ = ["SystemFormatError", "SkewSystemError", "load_system", "loads_system", "dump_system", "system_from_json"]
