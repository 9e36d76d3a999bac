"""The checked-in table of axioms, derived operators and constructions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Expr, generators, infer_signature, parse


@dataclass(frozen=True)
class AxiomEntry:
    id: str
    objects: tuple[str, ...]
    lhs: Expr
    rhs: Expr
    lhs_text: str
    rhs_text: str
    citation: str
    note: str = ""

    @property
    def generators(self) -> frozenset[str]:
        defs = definitions()
        names: set = set()
        todo = list(generators(self.lhs) | generators(self.rhs))
        while todo:
            g = todo.pop()
            if g in defs:
                todo.extend(generators(defs[g]) - names)
            else:
                names.add(g)
        return frozenset(names)

    @property
    def signature(self):
        return infer_signature(self.lhs, definitions=definitions())


@dataclass(frozen=True)
class CorollaryEntry:
    id: str
    variant: str
    axioms: tuple[str, ...]
    conditions: tuple[Expr, ...]
    condition_texts: tuple[str, ...]
    slb: tuple[str, ...]
    citation: str


@lru_cache(maxsize=None)
def _raw() -> dict:
    text = resources.files("braidlie").joinpath("data/registry.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def definitions() -> dict[str, Expr]:
    return {k: parse(v) for k, v in _raw()["definitions"].items()}


@lru_cache(maxsize=None)
def constructions() -> dict[str, Expr]:
    return {k: parse(v) for k, v in _raw()["constructions"].items()}


@lru_cache(maxsize=None)
def axiom_registry() -> tuple[AxiomEntry, ...]:
    out = []
    defs = definitions()
    for a in _raw()["axioms"]:
        e = AxiomEntry(
            a["id"], tuple(a["objects"]), parse(a["lhs"]), parse(a["rhs"]),
            a["lhs"], a["rhs"], a["citation"], a.get("note", ""),
        )
        ls = infer_signature(e.lhs, definitions=defs)
        rs = infer_signature(e.rhs, definitions=defs)
        if ls is None or (rs is not None and rs != ls):
            raise ValueError(f"registry entry {e.id} is ill-typed: {ls} vs {rs}")
        out.append(e)
    return tuple(out)


@lru_cache(maxsize=None)
def axiom(axiom_id: str) -> AxiomEntry:
    for e in axiom_registry():
        if e.id == axiom_id:
            return e
    raise KeyError(f"unknown axiom id {axiom_id!r}")


def axiom_ids() -> list[str]:
    return [e.id for e in axiom_registry()]


@lru_cache(maxsize=None)
def corollaries() -> tuple[CorollaryEntry, ...]:
    out = []
    for c in _raw()["corollaries"]:
        out.append(CorollaryEntry(
            c["id"], c["variant"], tuple(c["axioms"]),
            tuple(parse(x) for x in c["conditions"]), tuple(c["conditions"]),
            tuple(c.get("slb", ())), c["citation"],
        ))
    return tuple(out)


def corollary(cid: str) -> CorollaryEntry:
    for c in corollaries():
        if c.id == cid:
            return c
    raise KeyError(f"unknown corollary id {cid!r}")
