"""JSON documents for objects, morphisms, structures and pair bundles.

Every document carries ``"format": 1`` and a working ``conductor``; scalars
are ``[[power, "num/den"], ...]`` in powers of zeta_conductor.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cyclotomic import decode_scalar, encode_scalar, lcm
from .graded import BasisVector, GradedObject, GroupData, Morphism
from .structures import MAP_NAMES, ActionData, BraidedLieBialgebra, PairBundle, map_signature

FORMAT = 1


class MalformedInput(ValueError):
    pass


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def load(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError as e:
        raise MalformedInput(f"no such file: {path}") from e
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: invalid JSON ({e})") from e
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path}: top level must be an object")
    if doc.get("format") != FORMAT:
        raise MalformedInput(f"{path}: expected \"format\": {FORMAT}")
    return doc


def _need(doc: dict, key: str, kind=None):
    if key not in doc:
        raise MalformedInput(f"missing key {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise MalformedInput(f"key {key!r} has the wrong type")
    return v


# groups and objects


def group_to_json(g: GroupData) -> dict:
    return {"cyclic_orders": list(g.cyclic_orders)}


def group_from_json(d) -> GroupData:
    if not isinstance(d, dict):
        raise MalformedInput("group must be an object")
    orders = _need(d, "cyclic_orders", list)
    if not all(isinstance(n, int) and not isinstance(n, bool) and n >= 1 for n in orders):
        raise MalformedInput("cyclic_orders must be positive integers")
    return GroupData(tuple(orders))


def object_to_json(o: GradedObject) -> dict:
    return {
        "name": o.name,
        "basis": [
            {"label": b.label, "degree": list(b.degree), "character": list(b.character)}
            for b in o.basis
        ],
    }


def object_from_json(d, group: GroupData) -> GradedObject:
    if not isinstance(d, dict):
        raise MalformedInput("object must be a JSON object")
    name = _need(d, "name", str)
    basis = []
    for b in _need(d, "basis", list):
        if not isinstance(b, dict):
            raise MalformedInput("basis entries must be objects")
        label = _need(b, "label", str)
        deg = _need(b, "degree", list)
        ch = _need(b, "character", list)
        if len(deg) != group.rank or len(ch) != group.rank:
            raise MalformedInput(f"basis vector {label}: residues do not match the group rank")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in deg + ch):
            raise MalformedInput(f"basis vector {label}: residues must be integers")
        basis.append(BasisVector(label, tuple(deg), tuple(ch)))
    try:
        return GradedObject(name, basis, group)
    except ValueError as e:
        raise MalformedInput(str(e)) from e


# morphisms


def morphism_conductor(*ms: Morphism) -> int:
    n = 1
    for m in ms:
        if m is None:
            continue
        for _, _, s in m.triples():
            n = lcm(n, s.conductor)
    return n


def entries_to_json(m: Morphism, conductor: int) -> list:
    return [
        {"in": list(i), "out": list(j), "coeff": encode_scalar(s, conductor)}
        for i, j, s in m.triples()
    ]


def entries_from_json(entries, domain, codomain, conductor: int) -> Morphism:
    if not isinstance(entries, list):
        raise MalformedInput("morphism entries must be a list")
    triples = []
    for e in entries:
        if not isinstance(e, dict):
            raise MalformedInput("morphism entry must be an object")
        i = _need(e, "in", list)
        j = _need(e, "out", list)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in i + j):
            raise MalformedInput("indices must be integers")
        try:
            s = decode_scalar(_need(e, "coeff", list), conductor)
        except (ValueError, ZeroDivisionError) as err:
            raise MalformedInput(f"bad coefficient: {err}") from err
        triples.append((tuple(i), tuple(j), s))
    try:
        return Morphism.from_triples(domain, codomain, triples)
    except (ValueError, IndexError) as err:
        raise MalformedInput(str(err)) from err


def _conductor(doc: dict, group: GroupData) -> int:
    n = doc.get("conductor", group.exponent)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedInput("conductor must be a positive integer")
    if n % group.exponent:
        raise MalformedInput("conductor must be a multiple of the group exponent")
    return n


# structures


def _structure_body(S: BraidedLieBialgebra, conductor: int) -> dict:
    d = {
        "object": object_to_json(S.obj),
        "bracket": entries_to_json(S.bracket, conductor),
        "cobracket": entries_to_json(S.cobracket, conductor),
    }
    if S.R is not None:
        d["R"] = entries_to_json(S.R, conductor)
    if S.r is not None:
        d["r"] = entries_to_json(S.r, conductor)
    return d


def _structure_parts(S: BraidedLieBialgebra):
    return (S.bracket, S.cobracket, S.R, S.r)


def _working(need: int, override: int | None) -> int:
    if override is None:
        return need
    if override < 1 or override % need:
        raise MalformedInput(f"conductor {override} is not a multiple of the required {need}")
    return override


def structure_to_json(S: BraidedLieBialgebra, conductor: int | None = None) -> dict:
    n = _working(lcm(S.obj.group.exponent, morphism_conductor(*_structure_parts(S))), conductor)
    doc = {"format": FORMAT, "kind": "structure", "conductor": n,
           "group": group_to_json(S.obj.group)}
    doc.update(_structure_body(S, n))
    return doc


def _structure_from_body(d: dict, group: GroupData, n: int) -> BraidedLieBialgebra:
    o = object_from_json(_need(d, "object"), group)
    bracket = entries_from_json(d.get("bracket", []), (o, o), (o,), n)
    cobracket = entries_from_json(d.get("cobracket", []), (o,), (o, o), n)
    R = entries_from_json(d["R"], (), (o, o), n) if "R" in d else None
    r = entries_from_json(d["r"], (o, o), (), n) if "r" in d else None
    try:
        return BraidedLieBialgebra(o, bracket, cobracket, R, r)
    except ValueError as e:
        raise MalformedInput(str(e)) from e


def structure_from_json(doc: dict) -> BraidedLieBialgebra:
    if doc.get("kind", "structure") != "structure":
        raise MalformedInput(f"expected a structure document, got kind {doc.get('kind')!r}")
    group = group_from_json(_need(doc, "group"))
    return _structure_from_body(doc, group, _conductor(doc, group))


def maps_to_json(maps: ActionData, conductor: int) -> dict:
    return {n: entries_to_json(maps.get(n), conductor) for n in MAP_NAMES if maps.get(n) is not None}


def maps_from_json(d: dict, A: GradedObject, H: GradedObject, conductor: int) -> ActionData:
    out = {}
    for n in MAP_NAMES:
        if n in d:
            dom, cod = map_signature(n, A, H)
            out[n] = entries_from_json(d[n], dom, cod, conductor)
    return ActionData(**out)


def maps_document(maps: ActionData, group: GroupData, conductor: int | None = None) -> dict:
    n = _working(lcm(group.exponent, morphism_conductor(*(maps.get(k) for k in MAP_NAMES))), conductor)
    doc = {"format": FORMAT, "kind": "maps", "conductor": n, "group": group_to_json(group)}
    doc.update(maps_to_json(maps, n))
    return doc


def pair_to_json(b: PairBundle, conductor: int | None = None) -> dict:
    parts = _structure_parts(b.A) + _structure_parts(b.H) + tuple(b.maps.get(k) for k in MAP_NAMES)
    n = _working(lcm(b.A.obj.group.exponent, morphism_conductor(*parts)), conductor)
    return {
        "format": FORMAT, "kind": "pair", "conductor": n,
        "group": group_to_json(b.A.obj.group),
        "A": _structure_body(b.A, n), "H": _structure_body(b.H, n),
        "maps": maps_to_json(b.maps, n),
    }


def pair_from_json(doc: dict) -> PairBundle:
    group = group_from_json(_need(doc, "group"))
    n = _conductor(doc, group)
    A = _structure_from_body(_need(doc, "A", dict), group, n)
    H = _structure_from_body(_need(doc, "H", dict), group, n)
    maps = maps_from_json(doc.get("maps", {}), A.obj, H.obj, n)
    try:
        return PairBundle(A, H, maps)
    except ValueError as e:
        raise MalformedInput(str(e)) from e


def load_maps(doc: dict, A: BraidedLieBialgebra, H: BraidedLieBialgebra) -> ActionData:
    group = A.obj.group
    if "group" in doc and group_from_json(doc["group"]) != group:
        raise MalformedInput("maps document uses a different group")
    return maps_from_json(doc, A.obj, H.obj, _conductor(doc, group))


def tensor_document(m: Morphism, group: GroupData, key: str = "R", conductor: int | None = None) -> dict:
    n = _working(lcm(group.exponent, morphism_conductor(m)), conductor)
    return {"format": FORMAT, "kind": key, "conductor": n, "group": group_to_json(group),
            key: entries_to_json(m, n)}


def load_tensor(doc: dict, H: BraidedLieBialgebra, key: str = "R") -> Morphism:
    """R: I -> H (x) H (or r: H (x) H -> I) from ``{key: entries}`` or ``{"entries": ...}``."""
    group = H.obj.group
    entries = doc.get(key, doc.get("entries"))
    if entries is None:
        raise MalformedInput(f"missing key {key!r}")
    o = H.obj
    if key == "R":
        return entries_from_json(entries, (), (o, o), _conductor(doc, group))
    return entries_from_json(entries, (o, o), (), _conductor(doc, group))
