"""JSON documents for hypergraphs: ``{"n": .., "hyperedges": [{"in": [..], "out": [..]}], "name": ..}``."""

from __future__ import annotations

import json

from .core import Hyperedge, HypergraphError, OrientedHypergraph, Violation, validate


class DocumentError(HypergraphError):
    """Malformed JSON, a schema violation, or an invalid hypergraph."""

    def __init__(self, message: str, violations: list[Violation] | None = None):
        super().__init__(message)
        self.violations = violations or []


def _index_list(value, where: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise DocumentError(f"{where} must be an array of integers")
    return value


def from_document(doc, allow_invalid: bool = False) -> OrientedHypergraph:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(doc) - {"n", "hyperedges", "name"}
    if unknown:
        raise DocumentError(f"unknown fields {sorted(unknown)}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError("'n' must be a non-negative integer")
    raw = doc.get("hyperedges")
    if not isinstance(raw, list):
        raise DocumentError("'hyperedges' must be an array")
    edges = []
    for k, item in enumerate(raw):
        if not isinstance(item, dict) or set(item) - {"in", "out"}:
            raise DocumentError(f"hyperedge {k} must be an object with 'in' and 'out'")
        ins = _index_list(item.get("in", []), f"hyperedge {k} 'in'")
        outs = _index_list(item.get("out", []), f"hyperedge {k} 'out'")
        if len(set(ins)) != len(ins) or len(set(outs)) != len(outs):
            raise DocumentError(f"hyperedge {k} repeats a vertex")
        edges.append(Hyperedge(frozenset(ins), frozenset(outs)))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    g = OrientedHypergraph(n, tuple(edges), allow_isolated=allow_invalid, name=name)
    problems = validate(g)
    if problems and not allow_invalid:
        raise DocumentError("invalid hypergraph: " + "; ".join(map(str, problems)), problems)
    return g


def to_document(g: OrientedHypergraph) -> dict:
    doc: dict = {
        "n": g.n,
        "hyperedges": [{"in": sorted(h.inputs), "out": sorted(h.outputs)} for h in g.hyperedges],
    }
    if g.name is not None:
        doc["name"] = g.name
    return doc


def parse(data: bytes | str, allow_invalid: bool = False) -> OrientedHypergraph:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from None
    return from_document(doc, allow_invalid)


def serialize(g: OrientedHypergraph) -> bytes:
    return (json.dumps(to_document(g)) + "\n").encode("utf-8")
