"""JSON configuration documents: parsing, validation of shape, serialization.

A document either describes a triangle-plus-pencils configuration (keys
"vertices", "extra_points", "pencils", optional "extended") or a standalone
seven-line cover ("campedelli") or invariant-quintic input ("godeaux").
Rational entries are accepted as "p/q" strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from pg0geo.burniat import BurniatConfig
from pg0geo.plane_geom import ProjLine, ProjPoint

SCHEMA = "pg0-geography/1"


class ConfigParseError(ValueError):
    """Parse failure; `errors` lists positioned messages."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class ConfigDocument:
    schema: str = SCHEMA
    name: str | None = None
    config: BurniatConfig | None = None
    extended: dict[int, tuple[Fraction, Fraction]] = field(default_factory=dict)
    campedelli: tuple[ProjLine, ...] | None = None
    godeaux: dict[tuple[int, int, int, int], Fraction] | None = None


def _parse_fraction(text, where: str, errors: list[str]) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        errors.append(f"{where}: cannot parse rational number {text!r}")
        return Fraction(0)


def _parse_tuple(value, size: int, where: str, errors: list[str], sep: str = ":"):
    if isinstance(value, str):
        parts = value.split(sep)
    elif isinstance(value, list):
        parts = value
    else:
        errors.append(f"{where}: expected a separated string or a list of {size} entries")
        return None
    if len(parts) != size:
        errors.append(f"{where}: expected {size} entries, got {len(parts)}")
        return None
    return tuple(_parse_fraction(p, where, errors) for p in parts)


def _parse_point(value, where: str, errors: list[str]) -> ProjPoint | None:
    parts = _parse_tuple(value, 3, where, errors)
    if parts is None:
        return None
    try:
        return ProjPoint(*parts)
    except ValueError as exc:
        errors.append(f"{where}: {exc}")
        return None


def _parse_line(value, where: str, errors: list[str]) -> ProjLine | None:
    parts = _parse_tuple(value, 3, where, errors)
    if parts is None:
        return None
    try:
        return ProjLine(*parts)
    except ValueError as exc:
        errors.append(f"{where}: {exc}")
        return None


def parse_config(text: str) -> ConfigDocument:
    """Parse a document; raises ConfigParseError with positioned messages."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(
            [f"line {exc.lineno}, column {exc.colno}: {exc.msg}"]
        ) from exc
    if not isinstance(raw, dict):
        raise ConfigParseError(["top level: expected a JSON object"])

    errors: list[str] = []
    schema = raw.get("schema", SCHEMA)
    if schema != SCHEMA:
        errors.append(f"schema: expected {SCHEMA!r}, got {schema!r}")

    doc = ConfigDocument(schema=SCHEMA, name=raw.get("name"))

    has_config = "vertices" in raw or "pencils" in raw
    if has_config:
        vertices = raw.get("vertices")
        pencils = raw.get("pencils")
        extras = raw.get("extra_points", [])
        if not isinstance(vertices, list) or len(vertices) != 3:
            errors.append("vertices: expected a list of 3 point triples")
            vertices = []
        if not isinstance(pencils, list) or len(pencils) != 3:
            errors.append("pencils: expected a list of 3 pencils")
            pencils = []
        if not isinstance(extras, list) or len(extras) > 4:
            errors.append("extra_points: expected a list of at most 4 point triples")
            extras = []
        vs = [_parse_point(v, f"vertices[{i}]", errors) for i, v in enumerate(vertices)]
        qs = [_parse_point(q, f"extra_points[{i}]", errors) for i, q in enumerate(extras)]
        ps = []
        for i, pencil in enumerate(pencils):
            if not isinstance(pencil, list) or len(pencil) != 3:
                errors.append(f"pencils[{i}]: expected 3 line triples")
                continue
            ps.append(
                [
                    _parse_line(line, f"pencils[{i}][{j}]", errors)
                    for j, line in enumerate(pencil)
                ]
            )
        if not errors:
            doc.config = BurniatConfig(
                tuple(vs), tuple(qs), tuple(tuple(p) for p in ps)
            )

    if "extended" in raw:
        ext = raw["extended"]
        if not isinstance(ext, dict):
            errors.append("extended: expected an object mapping index to parameter")
        else:
            for key, value in sorted(ext.items()):
                if key not in ("1", "2", "3"):
                    errors.append(f"extended[{key!r}]: index must be '1', '2' or '3'")
                    continue
                pair = _parse_tuple(value, 2, f"extended[{key!r}]", errors)
                if pair is not None:
                    doc.extended[int(key)] = pair

    if "campedelli" in raw:
        lines = raw["campedelli"]
        if not isinstance(lines, list) or len(lines) != 7:
            errors.append("campedelli: expected a list of 7 line triples")
        else:
            parsed = [
                _parse_line(line, f"campedelli[{i}]", errors)
                for i, line in enumerate(lines)
            ]
            if not errors:
                doc.campedelli = tuple(parsed)

    if "godeaux" in raw:
        coeffs = raw["godeaux"]
        if not isinstance(coeffs, dict):
            errors.append("godeaux: expected an object mapping exponents to coefficients")
        else:
            parsed_coeffs = {}
            for key, value in sorted(coeffs.items()):
                exps = _parse_tuple(key, 4, f"godeaux[{key!r}]", errors, sep=",")
                if exps is None:
                    continue
                if any(e.denominator != 1 or e < 0 for e in exps):
                    errors.append(f"godeaux[{key!r}]: exponents must be non-negative integers")
                    continue
                parsed_coeffs[tuple(int(e) for e in exps)] = _parse_fraction(
                    value, f"godeaux[{key!r}]", errors
                )
            if not errors:
                doc.godeaux = parsed_coeffs

    if errors:
        raise ConfigParseError(errors)
    if doc.config is None and doc.campedelli is None and doc.godeaux is None:
        raise ConfigParseError(
            ["document carries neither a line configuration nor a standalone input"]
        )
    return doc


def _fmt_frac(f: Fraction) -> str:
    return str(f)


def _fmt_triple(coords) -> str:
    return ":".join(str(c) for c in coords)


def serialize(doc: ConfigDocument) -> str:
    """Canonical JSON text; parse(serialize(doc)) round-trips."""
    out: dict = {"schema": doc.schema}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.config is not None:
        out["vertices"] = [_fmt_triple(v.coords) for v in doc.config.vertices]
        out["extra_points"] = [_fmt_triple(q.coords) for q in doc.config.extra_points]
        out["pencils"] = [
            [_fmt_triple(line.coeffs) for line in pencil]
            for pencil in doc.config.pencils
        ]
    if doc.extended:
        out["extended"] = {
            str(i): f"{_fmt_frac(a)}:{_fmt_frac(b)}"
            for i, (a, b) in sorted(doc.extended.items())
        }
    if doc.campedelli is not None:
        out["campedelli"] = [_fmt_triple(line.coeffs) for line in doc.campedelli]
    if doc.godeaux is not None:
        out["godeaux"] = {
            ",".join(str(e) for e in exps): _fmt_frac(coeff)
            for exps, coeff in sorted(doc.godeaux.items())
        }
    return json.dumps(out, indent=2, ensure_ascii=False) + "\n"
