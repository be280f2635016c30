"""Canonical JSON serialization for rings, groups, gradings, matched
pairs, and category data.

Conventions: complex scalars are [re, im] pairs, floats are rounded to 12
significant digits, keys are sorted, N entries are sorted
lexicographically.  Serialization is a fixed point: dump(load(s)) == s.
"""
from __future__ import annotations

import json

import numpy as np

from .category import Block, FusionCategoryData
from .errors import InputError
from .grading import Grading
from .groups import FiniteGroup
from .matched_pair import GroupMatchedPair, RingMatchedPair
from .rings import FusionRing

SIG_DIGITS = 12


def _round(x: float) -> float:
    return float(f"{float(x):.{SIG_DIGITS}g}")


def _cpx(z: complex) -> list:
    z = complex(z)
    return [_round(z.real), _round(z.imag)]


def _as_cpx(pair) -> complex:
    try:
        re, im = pair
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise InputError(f"expected [re, im] pair, got {pair!r}") from None


def ring_to_dict(R: FusionRing) -> dict:
    entries = sorted([i, j, k, v] for (i, j, k), v in R.N.items())
    return {"basis": list(R.basis_labels), "unit": R.unit_index,
            "dual": list(R.dual), "N": entries}


def ring_from_dict(d: dict) -> FusionRing:
    try:
        N = {(int(i), int(j), int(k)): int(v) for i, j, k, v in d["N"]}
        return FusionRing(tuple(d["basis"]), int(d["unit"]),
                          tuple(int(x) for x in d["dual"]), N)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed ring JSON: {exc}") from None


def group_to_dict(G: FiniteGroup) -> dict:
    return {"elements": list(G.element_labels), "identity": G.identity,
            "table": [list(row) for row in G.table]}


def group_from_dict(d: dict) -> FiniteGroup:
    try:
        return FiniteGroup(tuple(d["elements"]),
                           tuple(tuple(int(x) for x in row) for row in d["table"]),
                           int(d["identity"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed group JSON: {exc}") from None


def grading_to_dict(g: Grading) -> dict:
    return {"group": group_to_dict(g.group), "degree": list(g.degree)}


def grading_from_dict(d: dict) -> Grading:
    try:
        return Grading(group_from_dict(d["group"]),
                       tuple(int(x) for x in d["degree"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed grading JSON: {exc}") from None


def matched_pair_to_dict(m: RingMatchedPair) -> dict:
    return {
        "A": ring_to_dict(m.A),
        "C": ring_to_dict(m.C),
        "H": grading_to_dict(m.grading_A),
        "K": grading_to_dict(m.grading_C),
        "gmp": {"act_l": [list(row) for row in m.gmp.act_l],
                "act_r": [list(row) for row in m.gmp.act_r]},
        "act_l": [list(row) for row in m.act_l],
        "act_r": [list(row) for row in m.act_r],
    }


def matched_pair_from_dict(d: dict) -> RingMatchedPair:
    try:
        H = grading_from_dict(d["H"])
        K = grading_from_dict(d["K"])
        gmp = GroupMatchedPair(
            H.group, K.group,
            tuple(tuple(int(x) for x in row) for row in d["gmp"]["act_l"]),
            tuple(tuple(int(x) for x in row) for row in d["gmp"]["act_r"]))
        return RingMatchedPair(
            ring_from_dict(d["A"]), ring_from_dict(d["C"]), H, K, gmp,
            tuple(tuple(int(x) for x in row) for row in d["act_l"]),
            tuple(tuple(int(x) for x in row) for row in d["act_r"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matched-pair JSON: {exc}") from None


def category_to_dict(cat: FusionCategoryData) -> dict:
    blocks = []
    for (a, b, c, d) in sorted(cat.assoc):
        block = cat.assoc[(a, b, c, d)]
        blocks.append({
            "a": a, "b": b, "c": c, "d": d,
            "rows": list(block.rows), "cols": list(block.cols),
            "m": [[_cpx(z) for z in row] for row in block.mat],
        })
    return {"ring": ring_to_dict(cat.ring), "assoc": blocks,
            "unit_l": [_cpx(z) for z in cat.unit_l],
            "unit_r": [_cpx(z) for z in cat.unit_r]}


def category_from_dict(d: dict) -> FusionCategoryData:
    try:
        ring = ring_from_dict(d["ring"])
        assoc = {}
        for b in d["assoc"]:
            key = (int(b["a"]), int(b["b"]), int(b["c"]), int(b["d"]))
            rows = tuple(int(x) for x in b["rows"])
            cols = tuple(int(x) for x in b["cols"])
            mat = np.array([[_as_cpx(z) for z in row] for row in b["m"]],
                           dtype=complex).reshape(len(rows), len(cols))
            assoc[key] = Block(rows, cols, mat)
        return FusionCategoryData(
            ring, assoc,
            tuple(_as_cpx(z) for z in d["unit_l"]),
            tuple(_as_cpx(z) for z in d["unit_r"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed category JSON: {exc}") from None


KIND_SERIALIZERS = {
    "ring": (ring_to_dict, ring_from_dict),
    "group": (group_to_dict, group_from_dict),
    "grading": (grading_to_dict, grading_from_dict),
    "matched_pair": (matched_pair_to_dict, matched_pair_from_dict),
    "category": (category_to_dict, category_from_dict),
}


def detect_kind(d: dict) -> str:
    if "assoc" in d:
        return "category"
    if "gmp" in d:
        return "matched_pair"
    if "basis" in d and "N" in d:
        return "ring"
    if "table" in d and "elements" in d:
        return "group"
    if "group" in d and "degree" in d:
        return "grading"
    raise InputError("cannot determine the kind of this JSON document")


def dumps_canonical(d: dict) -> str:
    return json.dumps(d, sort_keys=True, indent=1) + "\n"


def save(path, d: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(d))


def load(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
