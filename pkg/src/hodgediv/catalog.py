"""Human-readable catalog of divisor classes and test curves.

The catalog is a JSON file with one record per class or curve: space kind,
genus, and a symbol -> coefficient map with every rational rendered as
``p/q``.  The file location defaults to ``hodgediv_catalog.json`` in the
working directory and can be overridden with the ``HODGEDIV_CATALOG``
environment variable.  The CLI regenerates the file deterministically, so
it can be kept under version control and diffed.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction as Q
from pathlib import Path

from . import picard, testcurves
from .exactq import format_rational, parse_rational
from .picard import CurveRecord, DivisorClass, basis

ENV_VAR = "HODGEDIV_CATALOG"
DEFAULT_FILENAME = "hodgediv_catalog.json"


def catalog_path() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_FILENAME))


def _class_record(name: str, c: DivisorClass, note: str) -> dict:
    return {
        "record": "class",
        "name": name,
        "space": c.basis.space_kind,
        "genus": c.basis.genus,
        "coefficients": {s: format_rational(v) for s, v in zip(c.basis.symbols, c.coeffs)},
        "note": note,
    }


def _curve_record(c: CurveRecord, note: str) -> dict:
    rec = {
        "record": "curve",
        "name": c.name,
        "space": c.basis.space_kind,
        "genus": c.basis.genus,
        "vector": ({s: format_rational(v) for s, v in zip(c.basis.symbols, c.vector)}
                   if c.vector is not None else None),
        "known_pairings": {k: format_rational(v) for k, v in sorted(c.known_pairings.items())},
        "note": note,
    }
    if c.total_delta is not None:
        rec["total_delta"] = format_rational(c.total_delta)
    return rec


def build_catalog(g: int) -> list[dict]:
    """All cataloged classes and curves for one genus, in a fixed order."""
    records = [
        _class_record("D", picard.class_D(g),
                      "locus of differentials with a zero at a Weierstrass point"),
        _class_record("stratum_abelian_double_zero", picard.class_stratum_abelian(g),
                      "closure of the abelian double-zero stratum"),
        _class_record("stratum_quadratic_double_zero", picard.class_stratum_quadratic(g),
                      "closure of the quadratic double-zero stratum"),
        _class_record("W", picard.class_W(g),
                      "marked-Weierstrass-point divisor on 1-pointed curves"),
        _curve_record(testcurves.curve_A(g), "line in a fiber over a fixed smooth curve"),
        _curve_record(testcurves.curve_B(g),
                      "pencil of plane cubics glued to a fixed genus g-1 curve"),
    ]
    if g >= 3:
        for i in range(1, g // 2 + 1):
            records.append(_curve_record(
                testcurves.curve_C(g, i),
                f"attachment point of a genus-{i} tail varying on the genus-{g - i} side"))
            b1, b2, b3 = testcurves.curves_B1_B2_B3(g, i)
            for rec, note in ((b1, "node varying, genus-i side marked"),
                              (b2, "marked point colliding with the node"),
                              (b3, "mirror of B1; only the W-pairing is committed")):
                r = _curve_record(rec, note)
                r["name"] = f"{rec.name}(i={i})"
                records.append(r)
    for rec in testcurves.moving_curve_catalog(g):
        records.append(_curve_record(rec, "moving curve in a boundary divisor"))
    return records


def write_catalog(genera: list[int], path: Path | None = None) -> Path:
    path = path or catalog_path()
    records = [rec for g in genera for rec in build_catalog(g)]
    path.write_text(json.dumps(records, indent=2, sort_keys=True) + "\n")
    return path


def read_catalog(path: Path | None = None) -> list[dict]:
    path = path or catalog_path()
    return json.loads(path.read_text())


def record_to_class(rec: dict) -> DivisorClass:
    b = basis(rec["space"], rec["genus"])
    return DivisorClass(b, tuple(parse_rational(rec["coefficients"][s]) for s in b.symbols))


def record_to_curve(rec: dict) -> CurveRecord:
    b = basis(rec["space"], rec["genus"])
    vec = (tuple(parse_rational(rec["vector"][s]) for s in b.symbols)
           if rec["vector"] is not None else None)
    total = parse_rational(rec["total_delta"]) if "total_delta" in rec else None
    return CurveRecord(rec["name"], b, vec,
                       {k: parse_rational(v) for k, v in rec["known_pairings"].items()},
                       total)
