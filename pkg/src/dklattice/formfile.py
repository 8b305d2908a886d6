"""Deterministic JSON serialization of form fields.

Layout is fixed for golden-file testing: sites in lexicographic order
(k0 outermost, k3 innermost), 16 [re, im] pairs per site ordered by
blade mask 0..15.  Floats are written at full round-trip precision, so
a read-back is bit-exact.
"""

from __future__ import annotations

import json
import math

from .clifford import NBLADES
from .forms import FormField
from .lattice import LatticeShape

FORMAT_VERSION = 1


class FormFileError(ValueError):
    """Malformed form file; the message points at the first violation."""


def write_form(path, field: FormField):
    flat = field.data.reshape(-1, NBLADES)
    doc = {
        "format_version": FORMAT_VERSION,
        "shape": list(field.shape.extents),
        "coeffs": [[[c.real, c.imag] for c in site] for site in flat],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def read_form(path) -> FormField:
    import numpy as np

    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormFileError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise FormFileError(f"{path}: top level must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise FormFileError(
            f"{path}: format_version must be {FORMAT_VERSION}, "
            f"got {doc.get('format_version')!r}")
    extents = doc.get("shape")
    if (not isinstance(extents, list) or len(extents) != 4
            or not all(isinstance(n, int) for n in extents)):
        raise FormFileError(f"{path}: shape must be an array of 4 integers")
    try:
        shape = LatticeShape(tuple(extents))
    except ValueError as exc:
        raise FormFileError(f"{path}: {exc}") from exc
    coeffs = doc.get("coeffs")
    if not isinstance(coeffs, list) or len(coeffs) != shape.site_count:
        raise FormFileError(
            f"{path}: coeffs must be an array of {shape.site_count} sites, "
            f"got {len(coeffs) if isinstance(coeffs, list) else type(coeffs).__name__}")
    data = np.empty((shape.site_count, NBLADES), dtype=complex)
    for s, site in enumerate(coeffs):
        if not isinstance(site, list) or len(site) != NBLADES:
            raise FormFileError(
                f"{path}: coeffs[{s}] must be an array of {NBLADES} pairs")
        for b, pair in enumerate(site):
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(v, (int, float)) for v in pair)):
                raise FormFileError(
                    f"{path}: coeffs[{s}][{b}] must be a [re, im] number pair")
            re, im = float(pair[0]), float(pair[1])
            if not (math.isfinite(re) and math.isfinite(im)):
                raise FormFileError(
                    f"{path}: coeffs[{s}][{b}] is not finite")
            data[s, b] = complex(re, im)
    return FormField(shape, data.reshape(shape.extents + (NBLADES,)))
