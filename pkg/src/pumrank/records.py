"""Structured text records: stable JSON formats for codes, block
sequences, distance profiles, and verification reports.

Every record is a JSON object with a "format" tag of the form
"pumrank.<kind>/<version>".  Serialization is canonical (sorted keys,
two-space indent, trailing newline) so identical inputs always produce
identical bytes.  Loading checks only the format tag and structural shape;
mathematical invariants are deliberately *not* re-verified on load, so that
a corrupted record can still be loaded and then flagged by the verifier.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Optional

from .distances import DistanceProfile
from .errors import RecordError
from .field import ExtField, make_field
from .pum import ChainReport, MinimalBasicReport, PumCode, PumParams, RateCheck

CODE_FORMAT = "pumrank.code/1"
BLOCKSEQ_FORMAT = "pumrank.blockseq/1"
PROFILE_FORMAT = "pumrank.profile/1"
VERIFY_FORMAT = "pumrank.verify/1"


def dumps_record(record: dict) -> str:
    """Canonical JSON text for a record: deterministic bytes."""
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def save_record(path, record: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_record(record))


def load_record(path, expected_format: Optional[str] = None) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise RecordError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise RecordError(f"{path}: record must be a JSON object")
    fmt = data.get("format")
    if not isinstance(fmt, str):
        raise RecordError(f"{path}: missing format tag")
    if expected_format is not None and fmt != expected_format:
        raise RecordError(
            f"{path}: format tag {fmt!r} does not match expected "
            f"{expected_format!r}")
    return data


def _field_dict(f: ExtField) -> dict:
    return {"q": f.q, "s": f.s, "modulus": list(f.modulus)}


def _field_from(d: dict, where: str) -> ExtField:
    try:
        q = int(d["q"])
        s = int(d["s"])
        modulus = tuple(int(c) for c in d["modulus"])
    except (KeyError, TypeError, ValueError) as exc:
        raise RecordError(f"{where}: bad field description: {exc}") from exc
    return make_field(q, s, modulus)


def _int_matrix(rows, where: str) -> tuple:
    try:
        return tuple(tuple(int(x) for x in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise RecordError(f"{where}: expected nested integer arrays") from exc


def code_to_record(code: PumCode) -> dict:
    p = code.params
    return {
        "format": CODE_FORMAT,
        "params": {
            "q": p.field.q,
            "s": p.field.s,
            "modulus": list(p.field.modulus),
            "n": p.n,
            "k": p.k,
            "k1": p.k1,
            "mH": p.mh,
        },
        "normal_element": code.normal_element,
        "h0": list(code.h0),
        "H_blocks": [[list(row) for row in block] for block in code.H_blocks],
        "G0": [list(row) for row in code.G0],
        "G1": [list(row) for row in code.G1],
    }


def code_from_record(data: dict) -> PumCode:
    """Rebuild a code object from its record.

    Only structure is checked here (the field rebuilds, entries are
    integers, top-level keys exist); chain and generator properties are
    left to the verifier so that corrupted records remain loadable.
    """
    if data.get("format") != CODE_FORMAT:
        raise RecordError(
            f"format tag {data.get('format')!r} is not {CODE_FORMAT!r}")
    try:
        pd = data["params"]
        field = _field_from(pd, "params")
        params = PumParams(field=field, n=int(pd["n"]), k=int(pd["k"]),
                           k1=int(pd["k1"]), mh=int(pd["mH"]))
        normal_element = int(data["normal_element"])
        h0 = tuple(int(x) for x in data["h0"])
        H_blocks = tuple(_int_matrix(b, "H_blocks") for b in data["H_blocks"])
        G0 = _int_matrix(data["G0"], "G0")
        G1 = _int_matrix(data["G1"], "G1")
    except (KeyError, TypeError, ValueError) as exc:
        raise RecordError(f"malformed code record: {exc}") from exc
    return PumCode(params=params, normal_element=normal_element, h0=h0,
                   H_blocks=H_blocks, G0=G0, G1=G1)


def blockseq_to_record(field: ExtField, blocks) -> dict:
    blocks = tuple(tuple(int(x) for x in b) for b in blocks)
    if not blocks:
        raise ValueError("block sequence must contain at least one block")
    block_len = len(blocks[0])
    if any(len(b) != block_len for b in blocks):
        raise ValueError("all blocks must have the same length")
    return {
        "format": BLOCKSEQ_FORMAT,
        "field": _field_dict(field),
        "block_len": block_len,
        "blocks": [list(b) for b in blocks],
    }


def blockseq_from_record(data: dict) -> tuple[ExtField, tuple]:
    if data.get("format") != BLOCKSEQ_FORMAT:
        raise RecordError(
            f"format tag {data.get('format')!r} is not {BLOCKSEQ_FORMAT!r}")
    try:
        field = _field_from(data["field"], "field")
        block_len = int(data["block_len"])
        blocks = _int_matrix(data["blocks"], "blocks")
    except (KeyError, TypeError, ValueError) as exc:
        raise RecordError(f"malformed block sequence record: {exc}") from exc
    if any(len(b) != block_len for b in blocks):
        raise RecordError("blocks do not all match the declared block_len")
    for b in blocks:
        for x in b:
            if not 0 <= x < field.order:
                raise RecordError(
                    f"element {x} outside field of order {field.order}")
    return field, blocks


def _fraction_dict(x: Optional[Fraction]) -> Optional[dict]:
    if x is None:
        return None
    return {"numerator": x.numerator, "denominator": x.denominator}


def fraction_from_dict(d: Optional[dict]) -> Optional[Fraction]:
    if d is None:
        return None
    try:
        return Fraction(int(d["numerator"]), int(d["denominator"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise RecordError(f"malformed fraction: {exc}") from exc


def profile_to_record(profile: DistanceProfile, field: ExtField) -> dict:
    bounds = None
    if profile.bounds is not None:
        b = profile.bounds
        bounds = {
            "kind": b.kind,
            "free_distance_bound": b.d_free_bound,
            "slope_bound": b.slope_bound,
            "free_distance_ok": b.d_free_ok,
            "slope_ok": b.slope_ok,
        }
    construction = None
    if profile.construction_bound is not None:
        c = profile.construction_bound
        construction = {
            "applies": c.applies,
            "values": None if c.values is None else list(c.values),
            "satisfied": None if c.satisfied is None else list(c.satisfied),
            "equality_at_one": c.equality_at_one,
        }
    return {
        "format": PROFILE_FORMAT,
        "params": {
            "q": field.q,
            "s": field.s,
            "modulus": list(field.modulus),
            "n": profile.n,
            "k": profile.k,
            "k1": profile.k1,
            "mH": profile.mh,
            "kind": profile.kind,
        },
        "metric": profile.metric,
        "L": profile.L,
        "d_row": list(profile.d_row),
        "zero_block_on_min_path": list(profile.zero_block_on_min_path),
        "d_free": profile.d_free,
        "status": profile.status,
        "certified_at": profile.certified_at,
        "final_layer_min": profile.final_layer_min,
        "zero_weight_cycle": profile.zero_weight_cycle,
        "state_count": profile.state_count,
        "slope_estimate": _fraction_dict(profile.slope_estimate),
        "window": None if profile.window is None else list(profile.window),
        "intercept_estimate": _fraction_dict(profile.intercept_estimate),
        "bounds": bounds,
        "construction_bound": construction,
    }


def profile_to_csv(profile: DistanceProfile) -> str:
    """One delimited row per order; empty cells where a value is absent."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    has_bound = (profile.construction_bound is not None
                 and profile.construction_bound.applies)
    header = ["order", "d_row", "zero_block_on_min_path"]
    if has_bound:
        header += ["construction_bound", "bound_satisfied"]
    writer.writerow(header)
    for i in range(profile.L):
        def cell(x):
            return "" if x is None else x
        row = [i + 1, cell(profile.d_row[i]),
               cell(profile.zero_block_on_min_path[i])]
        if has_bound:
            row += [profile.construction_bound.values[i],
                    cell(profile.construction_bound.satisfied[i])]
        writer.writerow(row)
    return out.getvalue()


def verify_report_to_record(rate: RateCheck,
                            chain: ChainReport,
                            generator: list,
                            minimal: Optional[MinimalBasicReport],
                            ok: bool,
                            minimal_error: Optional[str] = None) -> dict:
    if minimal is None:
        minimal_dict = {"ok": False,
                        "error": minimal_error or "not computable"}
    else:
        minimal_dict = {
            "ok": minimal.ok,
            "window_degrees": list(minimal.window_degrees),
            "mu": minimal.mu,
            "expected": minimal.expected,
        }
    return {
        "format": VERIFY_FORMAT,
        "rate_check": {"kind": rate.kind, "detail": rate.detail,
                       "nu": rate.nu},
        "chain": {
            "ok": chain.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in chain.checks],
            "derived": chain.derived,
        },
        "generator": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                      for c in generator],
        "minimal_basic": minimal_dict,
        "ok": ok,
    }
