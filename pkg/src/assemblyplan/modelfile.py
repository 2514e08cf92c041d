"""JSON model files.

::

    {
      "schema_version": 1,
      "directions": [[1, 0, 0], [0, 1, 0]],
      "blocks": [{"id": 1, "label": "beam", "meta": {...}}, ...],
      "connections": [{"from": 2, "to": 3, "direction": 0, "meta": {...}}, ...]
    }

``meta`` objects are opaque and carried through to the instructions.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .model import ModelGraph, to_raw, validate_model

SCHEMA_VERSION = 1


class ParseError(ValueError):
    pass


def parse_model_text(text: str) -> dict[str, Any]:
    """Parse and structurally check a model document; no domain validation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if "schema_version" not in doc:
        raise ParseError("missing 'schema_version'")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {doc['schema_version']!r}")
    for key in ("directions", "blocks", "connections"):
        if not isinstance(doc.get(key), list):
            raise ParseError(f"'{key}' must be a list")
    for i, vec in enumerate(doc["directions"]):
        if not (isinstance(vec, list) and len(vec) == 3 and all(_is_int(c) for c in vec)):
            raise ParseError(f"directions[{i}] must be a list of 3 integers")
    for i, b in enumerate(doc["blocks"]):
        if not (isinstance(b, dict) and _is_int(b.get("id"))):
            raise ParseError(f"blocks[{i}] must be an object with an integer 'id'")
        if "label" in b and not isinstance(b["label"], str):
            raise ParseError(f"blocks[{i}].label must be a string")
        if "meta" in b and not isinstance(b["meta"], dict):
            raise ParseError(f"blocks[{i}].meta must be an object")
    for i, c in enumerate(doc["connections"]):
        if not (isinstance(c, dict) and all(_is_int(c.get(k)) for k in ("from", "to", "direction"))):
            raise ParseError(f"connections[{i}] needs integer 'from', 'to' and 'direction'")
        if "meta" in c and not isinstance(c["meta"], dict):
            raise ParseError(f"connections[{i}].meta must be an object")
    return doc


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def load_model(path: str | Path) -> ModelGraph:
    """Read, parse and validate a model file.

    Raises ParseError (or OSError) for unreadable or malformed documents and
    :class:`~assemblyplan.model.ModelError` for invalid models.
    """
    return validate_model(parse_model_text(Path(path).read_text()))


def dump_model(g: ModelGraph) -> str:
    doc = {"schema_version": SCHEMA_VERSION, **to_raw(g)}
    return json.dumps(doc, indent=2) + "\n"
