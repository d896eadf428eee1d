"""JSON documents for ladders, ideals, minors, heights, certificates and reports.

Everything is emitted with sorted cell lists so the output is
byte-for-byte reproducible.
"""

import json

from .errors import MalformedDocument
from .ideal import Minor, mk_ideal
from .ladder import from_corners, validate_ladder


def _pairs(seq, what):
    try:
        out = [tuple(int(x) for x in p) for p in seq]
    except (TypeError, ValueError) as exc:
        raise MalformedDocument(f"{what} must be a list of [i, j] pairs") from exc
    if any(len(p) != 2 for p in out):
        raise MalformedDocument(f"{what} must be a list of [i, j] pairs")
    return out


def _require(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedDocument(f"missing key {key!r}")
    return doc[key]


# ladders

def ladder_to_doc(ladder):
    return {"n": ladder.n, "cells": [list(c) for c in ladder.cells]}


def ladder_from_doc(doc):
    """Parse either the cell form or the corner form (exactly one of them)."""
    n = _require(doc, "n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise MalformedDocument("n must be an integer")
    has_cells = "cells" in doc
    has_corners = "lower_inside" in doc or "upper_inside" in doc
    if has_cells == has_corners:
        raise MalformedDocument("give either 'cells' or 'lower_inside'/'upper_inside'")
    if has_cells:
        return validate_ladder(n, _pairs(doc["cells"], "cells"))
    lower = _pairs(_require(doc, "lower_inside"), "lower_inside")
    upper = _pairs(_require(doc, "upper_inside"), "upper_inside")
    return from_corners(n, lower, upper)


# ideals and minors

def ideal_to_doc(ideal):
    return {
        "ladder": ladder_to_doc(ideal.ladder),
        "points": [list(p) for p in ideal.points],
        "t": list(ideal.sizes),
    }


def ideal_from_doc(doc):
    ladder = ladder_from_doc(_require(doc, "ladder"))
    points = _pairs(_require(doc, "points"), "points")
    sizes = _require(doc, "t")
    if not isinstance(sizes, list) or not all(isinstance(t, int) for t in sizes):
        raise MalformedDocument("t must be a list of integers")
    return mk_ideal(ladder, points, sizes)


def minor_to_doc(minor):
    if minor is None:
        return None
    return {"rows": list(minor.rows), "cols": list(minor.cols)}


def minor_from_doc(doc):
    if doc is None:
        return None
    try:
        return Minor.of(_require(doc, "rows"), _require(doc, "cols"))
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from exc


def minors_to_doc(minors):
    return {"minors": [minor_to_doc(m) for m in minors]}


# heights, certificates, reports

def height_to_doc(profile):
    return {"h_plus": [list(c) for c in profile.cells], "height": profile.height}


def step_to_doc(step):
    return {
        "pivot_k": step.pivot_k,
        "source": ideal_to_doc(step.source),
        "target": ideal_to_doc(step.target),
        "link": ideal_to_doc(step.link),
        "f_num": minor_to_doc(step.f_numerator),
        "f_den": minor_to_doc(step.f_denominator),
        "heights": list(step.heights),
    }


def certificate_to_doc(cert):
    return {
        "steps": [step_to_doc(s) for s in cert.steps],
        "terminal": ideal_to_doc(cert.terminal),
        "biliaisons": cert.biliaison_count,
        "g_links": cert.g_link_count,
    }


def report_to_doc(report):
    return {
        "step": report.step,
        "field": report.field,
        "checks": [{"name": c.name, "status": c.status, "witness": c.witness}
                   for c in report.checks],
    }


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True)


def load(path):
    """Read a JSON file; malformed JSON becomes :class:`MalformedDocument`."""
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedDocument(f"cannot read {path}: {exc}") from exc
