"""JSON input parsing and canonical report emission.

Numbers travel as exact strings ("5", "-3/2", "0.25") or integers, with
"inf" for the min-plus sentinel.  Reports are emitted with sorted keys
and fixed indentation, so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Optional

import jsonschema

from .core import TropMatrix, TropNum, tropical
from .errors import SchemaError, TropcayError
from .polyhedral import PointConfiguration
from .ricardo import Economy

_INPUT_SCHEMA = None


def input_schema() -> dict:
    global _INPUT_SCHEMA
    if _INPUT_SCHEMA is None:
        text = (
            resources.files("tropcay") / "schemas" / "input.schema.json"
        ).read_text()
        _INPUT_SCHEMA = json.loads(text)
    return _INPUT_SCHEMA


def parse_entry(x) -> TropNum:
    if isinstance(x, bool) or isinstance(x, float):
        raise SchemaError(f"inexact entry {x!r}: use strings for non-integers")
    try:
        return tropical(x)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"unparseable entry {x!r}: {exc}") from exc


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def entry_str(x: TropNum) -> str:
    if isinstance(x, TropNum):
        if not x.is_finite:
            return "inf" if x.inf > 0 else "-inf"
        return rational_str(x.value)
    return rational_str(x)


@dataclass
class InputDocument:
    kind: str
    matrix: Optional[TropMatrix] = None
    config: Optional[PointConfiguration] = None
    lifting: Optional[dict] = None
    side: str = "below"
    economy: Optional[Economy] = None
    wages: Optional[tuple[Fraction, ...]] = None
    prices: Optional[tuple[Fraction, ...]] = None

    def canonical(self) -> dict:
        """The document as it will be embedded in every report."""
        if self.kind == "matrix":
            return {
                "kind": "matrix",
                "rows": [[entry_str(e) for e in row] for row in self.matrix.entries],
            }
        if self.kind == "configuration":
            return {
                "kind": "configuration",
                "points": [
                    {"label": lab, "coords": [rational_str(c) for c in coords]}
                    for lab, coords in self.config.points
                ],
                "lifting": {
                    lab: rational_str(self.lifting[lab]) for lab in self.config.labels
                },
                "side": self.side,
            }
        doc: dict[str, Any] = {
            "kind": "economy",
            "logR": [[entry_str(e) for e in row] for row in self.economy.logR.entries],
        }
        if self.wages is not None:
            doc["wages"] = [rational_str(x) for x in self.wages]
        if self.prices is not None:
            doc["prices"] = [rational_str(x) for x in self.prices]
        return doc


def parse_input(doc) -> InputDocument:
    """Validate against the shipped schema, then build exact objects."""
    try:
        jsonschema.validate(doc, input_schema())
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"at {path}: {exc.message}") from exc
    kind = doc["kind"]
    try:
        if kind == "matrix":
            return InputDocument(
                kind, matrix=TropMatrix([[parse_entry(e) for e in row] for row in doc["rows"]])
            )
        if kind == "configuration":
            pairs = []
            for p in doc["points"]:
                coords = []
                for c in p["coords"]:
                    e = parse_entry(c)
                    if not e.is_finite:
                        raise SchemaError("configuration coordinates must be finite")
                    coords.append(e.value)
                pairs.append((p["label"], tuple(coords)))
            config = PointConfiguration.of(pairs)
            lifting = {}
            for lab in config.labels:
                if lab not in doc["lifting"]:
                    raise SchemaError(f"lifting misses label {lab!r}")
                e = parse_entry(doc["lifting"][lab])
                if not e.is_finite:
                    raise SchemaError("liftings must be finite")
                lifting[lab] = e.value
            return InputDocument(
                kind,
                config=config,
                lifting=lifting,
                side=doc.get("side", "below"),
            )
        economy = Economy(
            TropMatrix([[parse_entry(e) for e in row] for row in doc["logR"]])
        )

        def vec(key):
            if key not in doc:
                return None
            out = []
            for x in doc[key]:
                e = parse_entry(x)
                if not e.is_finite:
                    raise SchemaError(f"{key} must be finite")
                out.append(e.value)
            return tuple(out)

        return InputDocument(
            kind, economy=economy, wages=vec("wages"), prices=vec("prices")
        )
    except TropcayError:
        raise
    except Exception as exc:
        raise SchemaError(str(exc)) from exc


def load_input(path: str) -> InputDocument:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not JSON: line {exc.lineno}: {exc.msg}") from exc
    return parse_input(doc)


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
