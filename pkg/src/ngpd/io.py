"""JSON documents for every in-memory type.

Identifiers are strings on disk.  A plain string that does not start with
``#`` is written as itself; anything else (ints, tuples, strings starting
with ``#``) is written as ``#`` followed by its compact JSON form with tuples
as arrays.  Decoding inverts this exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .groupoid import FinGroupoid, GroupoidFunctor
from .multisimplicial import MultiSSet, MultiSSetMap
from .ngroupoid import NFunctor, NGroupoid
from .simplicial import SimplicialSet

FORMAT = "ngpd/1"
KINDS = ("sset", "multisset", "groupoid", "functor", "ngroupoid", "nfunctor")


class ParseError(ValueError):
    pass


def _plain(v: Any):
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise TypeError(f"cannot encode identifier {v!r}")
    return v


def _unplain(v: Any):
    if isinstance(v, list):
        return tuple(_unplain(x) for x in v)
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"bad identifier component {v!r}")
    return v


def encode_id(v) -> str:
    if isinstance(v, str) and not v.startswith("#"):
        return v
    return "#" + json.dumps(_plain(v), separators=(",", ":"))


def decode_id(s: str):
    if not isinstance(s, str):
        raise ParseError(f"identifier must be a string, got {s!r}")
    if not s.startswith("#"):
        return s
    try:
        return _unplain(json.loads(s[1:]))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad encoded identifier {s!r}: {exc.msg}") from None


def idx_key(idx: tuple) -> str:
    return ",".join(str(m) for m in idx)


def parse_idx(s: str) -> tuple:
    try:
        return tuple(int(x) for x in s.split(",")) if s else ()
    except ValueError:
        raise ParseError(f"bad multi-index {s!r}") from None


@dataclass(eq=True)
class Document:
    kind: str
    payload: Any
    metadata: dict = field(default_factory=dict)


# ------------------------------------------------------------------ encoding

def _enc_sset(X: SimplicialSet) -> dict:
    maps = {}
    for k in range(1, X.dim_bound + 1):
        for i in range(k + 1):
            maps.setdefault(f"d:0:{i}", {})[str(k)] = {encode_id(c): encode_id(X.d(k, i, c)) for c in X.cells[k]}
    for k in range(X.dim_bound):
        for i in range(k + 1):
            maps.setdefault(f"s:0:{i}", {})[str(k)] = {encode_id(c): encode_id(X.s(k, i, c)) for c in X.cells[k]}
    return {"dim_bound": X.dim_bound,
            "cells": {str(k): [encode_id(c) for c in X.cells[k]] for k in range(X.dim_bound + 1)},
            "maps": maps}


def _enc_multi(P: MultiSSet) -> dict:
    maps = {}
    for (a, idx), tab in P.faces.items():
        for i in range(idx[a] + 1):
            maps.setdefault(f"d:{a}:{i}", {})[idx_key(idx)] = {encode_id(c): encode_id(r[i]) for c, r in tab.items()}
    for (a, idx), tab in P.degens.items():
        for i in range(idx[a] + 1):
            maps.setdefault(f"s:{a}:{i}", {})[idx_key(idx)] = {encode_id(c): encode_id(r[i]) for c, r in tab.items()}
    return {"dim_bounds": list(P.dim_bounds),
            "cells": {idx_key(idx): [encode_id(c) for c in cs] for idx, cs in P.cells.items()},
            "maps": maps}


def _enc_groupoid(G: FinGroupoid) -> dict:
    return {"objects": [encode_id(x) for x in G.objects],
            "morphisms": {encode_id(f): [encode_id(a), encode_id(b)] for f, (a, b) in G.morphisms.items()},
            "composition": sorted([encode_id(f), encode_id(g), encode_id(h)]
                                  for (f, g), h in G.composition.items()),
            "identities": {encode_id(x): encode_id(e) for x, e in G.identities.items()},
            "inverse": {encode_id(f): encode_id(g) for f, g in G.inverse.items()}}


def _enc_table(t: dict) -> dict:
    return {encode_id(a): encode_id(b) for a, b in t.items()}


def _enc_payload(kind: str, v) -> Any:
    if kind == "sset":
        return _enc_sset(v)
    if kind == "multisset":
        return _enc_multi(v)
    if kind == "groupoid":
        return _enc_groupoid(v)
    if kind == "functor":
        return {"source": _enc_groupoid(v.source), "target": _enc_groupoid(v.target),
                "object_map": _enc_table(v.object_map), "morphism_map": _enc_table(v.morphism_map)}
    if kind == "ngroupoid":
        return {"n": v.n, "carrier": _enc_multi(v.carrier)}
    if kind == "nfunctor":
        return {"source": {"n": v.source.n, "carrier": _enc_multi(v.source.carrier)},
                "target": {"n": v.target.n, "carrier": _enc_multi(v.target.carrier)},
                "map": {idx_key(idx): _enc_table(t) for idx, t in v.carrier_map.levels.items()}}
    raise ValueError(f"unknown kind {kind!r}")


def serialize_document(doc: Document) -> str:
    if doc.kind not in KINDS:
        raise ValueError(f"unknown kind {doc.kind!r}")
    body = {"format": FORMAT, "kind": doc.kind,
            "metadata": {str(k): str(v) for k, v in doc.metadata.items()},
            "payload": _enc_payload(doc.kind, doc.payload)}
    return json.dumps(body, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


# ------------------------------------------------------------------ decoding

def _get(obj, key, typ, path):
    if not isinstance(obj, dict):
        raise ParseError(f"at {path}: expected an object")
    if key not in obj:
        raise ParseError(f"at {path}: missing key {key!r}")
    v = obj[key]
    if not isinstance(v, typ) or isinstance(v, bool):
        raise ParseError(f"at {path}.{key}: expected {getattr(typ, '__name__', typ)}")
    return v


def _lookup(table: dict, key, path):
    try:
        return table[key]
    except (KeyError, TypeError):
        raise ParseError(f"at {path}: missing entry {key!r}") from None


def _dec_sset(p, path) -> SimplicialSet:
    D = _get(p, "dim_bound", int, path)
    cells_raw = _get(p, "cells", dict, path)
    maps = _get(p, "maps", dict, path)
    cells = tuple(tuple(decode_id(c) for c in _get(cells_raw, str(k), list, f"{path}.cells"))
                  for k in range(D + 1))
    faces = [{}]
    for k in range(1, D + 1):
        rows = {}
        for c in cells[k]:
            rows[c] = tuple(decode_id(_lookup(_lookup(_lookup(maps, f"d:0:{i}", f"{path}.maps"), str(k),
                                                      f"{path}.maps.d:0:{i}"), encode_id(c),
                                              f"{path}.maps.d:0:{i}.{k}"))
                            for i in range(k + 1))
        faces.append(rows)
    degens = []
    for k in range(D):
        rows = {}
        for c in cells[k]:
            rows[c] = tuple(decode_id(_lookup(_lookup(_lookup(maps, f"s:0:{i}", f"{path}.maps"), str(k),
                                                      f"{path}.maps.s:0:{i}"), encode_id(c),
                                              f"{path}.maps.s:0:{i}.{k}"))
                            for i in range(k + 1))
        degens.append(rows)
    return SimplicialSet(D, cells, tuple(faces), tuple(degens))


def _dec_multi(p, path) -> MultiSSet:
    bounds = tuple(_get(p, "dim_bounds", list, path))
    if any(not isinstance(b, int) or isinstance(b, bool) or b < 0 for b in bounds):
        raise ParseError(f"at {path}.dim_bounds: expected non-negative integers")
    cells_raw = _get(p, "cells", dict, path)
    maps = _get(p, "maps", dict, path)
    cells = {}
    for key, lst in cells_raw.items():
        if not isinstance(lst, list):
            raise ParseError(f"at {path}.cells.{key}: expected list")
        idx = parse_idx(key)
        if len(idx) != len(bounds):
            raise ParseError(f"at {path}.cells.{key}: index arity {len(idx)} != {len(bounds)}")
        cells[idx] = tuple(decode_id(c) for c in lst)
    faces, degens = {}, {}
    for idx, cs in cells.items():
        for a, m in enumerate(idx):
            for kind, table, cond in (("d", faces, m >= 1), ("s", degens, m < bounds[a])):
                if not cond:
                    continue
                rows = {}
                for c in cs:
                    rows[c] = tuple(
                        decode_id(_lookup(_lookup(_lookup(maps, f"{kind}:{a}:{i}", f"{path}.maps"),
                                                  idx_key(idx), f"{path}.maps.{kind}:{a}:{i}"),
                                          encode_id(c), f"{path}.maps.{kind}:{a}:{i}.{idx_key(idx)}"))
                        for i in range(m + 1))
                table[(a, idx)] = rows
    return MultiSSet(bounds, cells, faces, degens)


def _dec_groupoid(p, path) -> FinGroupoid:
    objs = [decode_id(x) for x in _get(p, "objects", list, path)]
    mors = {}
    for f, ends in _get(p, "morphisms", dict, path).items():
        if not isinstance(ends, list) or len(ends) != 2:
            raise ParseError(f"at {path}.morphisms.{f}: expected [source, target]")
        mors[decode_id(f)] = (decode_id(ends[0]), decode_id(ends[1]))
    comp = {}
    for row in _get(p, "composition", list, path):
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError(f"at {path}.composition: expected [f, g, f;g] triples")
        comp[(decode_id(row[0]), decode_id(row[1]))] = decode_id(row[2])
    ident = {decode_id(x): decode_id(e) for x, e in _get(p, "identities", dict, path).items()}
    inv = {decode_id(f): decode_id(g) for f, g in _get(p, "inverse", dict, path).items()}
    return FinGroupoid(tuple(objs), mors, comp, ident, inv)


def _dec_table(t, path) -> dict:
    if not isinstance(t, dict):
        raise ParseError(f"at {path}: expected an object")
    return {decode_id(a): decode_id(b) for a, b in t.items()}


def _dec_ngpd(p, path) -> NGroupoid:
    return NGroupoid(_get(p, "n", int, path), _dec_multi(_get(p, "carrier", dict, path), f"{path}.carrier"))


def _dec_payload(kind: str, p, path="payload"):
    if kind == "sset":
        return _dec_sset(p, path)
    if kind == "multisset":
        return _dec_multi(p, path)
    if kind == "groupoid":
        return _dec_groupoid(p, path)
    if kind == "functor":
        return GroupoidFunctor(_dec_groupoid(_get(p, "source", dict, path), f"{path}.source"),
                               _dec_groupoid(_get(p, "target", dict, path), f"{path}.target"),
                               _dec_table(_get(p, "object_map", dict, path), f"{path}.object_map"),
                               _dec_table(_get(p, "morphism_map", dict, path), f"{path}.morphism_map"))
    if kind == "ngroupoid":
        return _dec_ngpd(p, path)
    if kind == "nfunctor":
        src = _dec_ngpd(_get(p, "source", dict, path), f"{path}.source")
        tgt = _dec_ngpd(_get(p, "target", dict, path), f"{path}.target")
        levels = {parse_idx(k): _dec_table(t, f"{path}.map.{k}")
                  for k, t in _get(p, "map", dict, path).items()}
        return NFunctor(src, tgt, MultiSSetMap(src.carrier, tgt.carrier, levels))
    raise ParseError(f"unknown kind {kind!r}")


def parse_document(text: str) -> Document:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(body, dict):
        raise ParseError("line 1 column 1: top level must be an object")
    fmt_ = body.get("format")
    if fmt_ != FORMAT:
        raise ParseError(f"at format: expected {FORMAT!r}, got {fmt_!r}")
    kind = _get(body, "kind", str, "document")
    if kind not in KINDS:
        raise ParseError(f"at kind: unknown kind {kind!r}")
    meta = body.get("metadata", {})
    if not isinstance(meta, dict):
        raise ParseError("at metadata: expected an object")
    return Document(kind, _dec_payload(kind, body.get("payload")), dict(meta))


def kind_of(v) -> str:
    for kind, typ in (("sset", SimplicialSet), ("multisset", MultiSSet), ("groupoid", FinGroupoid),
                      ("functor", GroupoidFunctor), ("ngroupoid", NGroupoid), ("nfunctor", NFunctor)):
        if isinstance(v, typ):
            return kind
    raise TypeError(f"no document kind for {type(v).__name__}")


def to_document(v, **metadata) -> Document:
    return Document(kind_of(v), v, metadata)
