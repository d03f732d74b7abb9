"""Canonical JSON documents for weightings, lists, labelings, and reports.

Rationals travel as ``"p/q"`` strings (plain ``"p"`` when integral) so that
write-then-read is the identity and output bytes are reproducible. Keys are
emitted sorted; edge keys are ``"u-v"`` with u < v.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import SchemaError, ValidationError
from .graph import edge_between
from .labeling import Labeling, ListAssignment, Orientation, Weighting
from .rational import format_rational, parse_rational

_EDGE_KEY_RE = re.compile(r"^(-?\d+)-(-?\d+)$")
_INT_RE = re.compile(r"^-?\d+$")


def edge_key(edge):
    u, v = edge_between(*edge)
    return f"{u}-{v}"


def parse_edge_key(key, path="$"):
    m = _EDGE_KEY_RE.match(key)
    if m is None:
        raise SchemaError(f"bad edge key {key!r}, expected 'u-v'", path=path)
    u, v = int(m.group(1)), int(m.group(2))
    if u == v:
        raise SchemaError(f"edge key {key!r} is a loop", path=path)
    return edge_between(u, v)


def _parse_value(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"expected a rational string, got {value!r}", path=path)
    try:
        return parse_rational(str(value))
    except ValidationError as exc:
        raise SchemaError(str(exc), path=path) from None


def dumps_canonical(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _loads(text, root):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", path=root) from None
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object", path=root)
    return obj


# ---------------------------------------------------------------- weighting

def read_weighting(text):
    obj = _loads(text, "$")
    weights = obj.get("weights")
    if not isinstance(weights, dict):
        raise SchemaError("missing 'weights' object", path="$.weights")
    values = {}
    for key, raw in weights.items():
        path = f"$.weights.{key}"
        if not _INT_RE.match(key):
            raise SchemaError(f"bad vertex id {key!r}", path=path)
        values[int(key)] = _parse_value(raw, path)
    return Weighting(values)


def write_weighting(weighting):
    obj = {"weights": {str(v): format_rational(w) for v, w in weighting.items()}}
    return dumps_canonical(obj)


# ------------------------------------------------------------------- lists

def read_lists(text):
    obj = _loads(text, "$")
    lists = obj.get("lists")
    if not isinstance(lists, dict):
        raise SchemaError("missing 'lists' object", path="$.lists")
    out = {}
    for key, raw in lists.items():
        path = f"$.lists.{key}"
        edge = parse_edge_key(key, path=path)
        if not isinstance(raw, list):
            raise SchemaError("expected an array of rationals", path=path)
        values = [_parse_value(x, f"{path}[{i}]") for i, x in enumerate(raw)]
        if len(set(values)) != len(values):
            raise SchemaError("duplicate value in list", path=path)
        out[edge] = values
    return ListAssignment(out)


def write_lists(lists):
    obj = {
        "lists": {
            edge_key(e): [format_rational(x) for x in values]
            for e, values in lists.items()
        }
    }
    return dumps_canonical(obj)


# ---------------------------------------------------------------- labeling

@dataclass(frozen=True)
class LabelingDocument:
    """A labeling plus the metadata its file carried."""

    labeling: Labeling
    k: int = None
    variant: str = None


def read_labeling(text):
    obj = _loads(text, "$")
    labels_obj = obj.get("labels")
    if not isinstance(labels_obj, dict):
        raise SchemaError("missing 'labels' object", path="$.labels")
    labels = {}
    for key, raw in labels_obj.items():
        path = f"$.labels.{key}"
        labels[parse_edge_key(key, path=path)] = _parse_value(raw, path)

    orientation = None
    if "orientation" in obj:
        orient_obj = obj["orientation"]
        if not isinstance(orient_obj, dict):
            raise SchemaError("expected an object", path="$.orientation")
        heads = {}
        for key, raw in orient_obj.items():
            path = f"$.orientation.{key}"
            edge = parse_edge_key(key, path=path)
            if not isinstance(raw, str) or ">" not in raw:
                raise SchemaError(f"expected 'tail>head', got {raw!r}", path=path)
            tail_s, head_s = raw.split(">", 1)
            if not (_INT_RE.match(tail_s) and _INT_RE.match(head_s)):
                raise SchemaError(f"bad direction {raw!r}", path=path)
            tail, head = int(tail_s), int(head_s)
            if {tail, head} != set(edge):
                raise SchemaError(f"direction {raw!r} does not match edge {key!r}", path=path)
            heads[edge] = head
        orientation = Orientation(heads)

    k = obj.get("k")
    if k is not None and (isinstance(k, bool) or not isinstance(k, int)):
        raise SchemaError("expected an integer", path="$.k")
    variant = obj.get("variant")
    if variant is not None and not isinstance(variant, str):
        raise SchemaError("expected a string", path="$.variant")
    return LabelingDocument(Labeling(labels, orientation), k, variant)


def labeling_to_obj(labeling, *, k=None, variant=None):
    obj = {"labels": {edge_key(e): format_rational(x) for e, x in labeling.items()}}
    if labeling.orientation is not None:
        obj["orientation"] = {
            edge_key(e): f"{t}>{h}" for e, (t, h) in labeling.orientation.items()
        }
    if k is not None:
        obj["k"] = k
    if variant is not None:
        obj["variant"] = variant
    return obj


def write_labeling(labeling, *, k=None, variant=None):
    return dumps_canonical(labeling_to_obj(labeling, k=k, variant=variant))
