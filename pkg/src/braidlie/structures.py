"""Braided Lie (co/bi)algebras, their actions, and axiom checking."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import graded
from .cyclotomic import Scalar, encode_scalar
from .diagram import Env, evaluate, signature_in_env
from .graded import GradedObject, Morphism, Witness
from .registry import axiom, axiom_registry, corollary, definitions


class MissingGenerator(KeyError):
    pass


@dataclass(frozen=True, eq=False)
class BraidedLieAlgebra:
    obj: GradedObject
    bracket: Morphism

    def __post_init__(self):
        _expect(self.bracket, (self.obj, self.obj), (self.obj,), "bracket")
        graded.require_symmetric([self.obj])


@dataclass(frozen=True, eq=False)
class BraidedLieCoalgebra:
    obj: GradedObject
    cobracket: Morphism

    def __post_init__(self):
        _expect(self.cobracket, (self.obj,), (self.obj, self.obj), "cobracket")
        graded.require_symmetric([self.obj])


@dataclass(frozen=True, eq=False)
class BraidedLieBialgebra:
    """Bracket and cobracket on one object; R or r are optional extras."""

    obj: GradedObject
    bracket: Morphism
    cobracket: Morphism
    R: Morphism | None = None
    r: Morphism | None = None

    def __post_init__(self):
        o = self.obj
        _expect(self.bracket, (o, o), (o,), "bracket")
        _expect(self.cobracket, (o,), (o, o), "cobracket")
        if self.R is not None:
            _expect(self.R, (), (o, o), "R")
        if self.r is not None:
            _expect(self.r, (o, o), (), "r")
        graded.require_symmetric([o])

    @classmethod
    def from_parts(cls, obj, bracket=None, cobracket=None, R=None, r=None):
        """Missing bracket or cobracket means zero."""
        if bracket is None:
            bracket = graded.zero((obj, obj), (obj,))
        if cobracket is None:
            cobracket = graded.zero((obj,), (obj, obj))
        return cls(obj, bracket, cobracket, R, r)

    @property
    def dim(self) -> int:
        return self.obj.dim

    def with_(self, **kw) -> "BraidedLieBialgebra":
        d = dict(obj=self.obj, bracket=self.bracket, cobracket=self.cobracket, R=self.R, r=self.r)
        d.update(kw)
        return BraidedLieBialgebra(**d)

    def env(self, role: str = "L") -> Env:
        m = {f"bracket_{role}": self.bracket, f"cobracket_{role}": self.cobracket}
        if self.R is not None:
            m["R"] = self.R
        if self.r is not None:
            m["r"] = self.r
        return Env({role: self.obj}, m, definitions())


@dataclass(frozen=True, eq=False)
class RMatrix:
    H: BraidedLieBialgebra
    R: Morphism

    def __post_init__(self):
        _expect(self.R, (), (self.H.obj, self.H.obj), "R")


@dataclass(frozen=True, eq=False)
class CoRMatrix:
    H: BraidedLieBialgebra
    r: Morphism

    def __post_init__(self):
        _expect(self.r, (self.H.obj, self.H.obj), (), "r")


MAP_NAMES = ("alpha", "beta", "phi", "psi")


@dataclass(frozen=True, eq=False)
class ActionData:
    """alpha: H(x)A->A, beta: H(x)A->H, phi: A->H(x)A, psi: H->H(x)A; None is zero."""

    alpha: Morphism | None = None
    beta: Morphism | None = None
    phi: Morphism | None = None
    psi: Morphism | None = None

    def get(self, name: str):
        return getattr(self, name)

    def only(self, names) -> "ActionData":
        return ActionData(**{n: (self.get(n) if n in names else None) for n in MAP_NAMES})

    def scaled(self, name: str, factor) -> "ActionData":
        d = {n: self.get(n) for n in MAP_NAMES}
        if d[name] is not None:
            d[name] = d[name].scale(factor)
        return ActionData(**d)


def map_signature(name: str, A: GradedObject, H: GradedObject):
    return {
        "alpha": ((H, A), (A,)),
        "beta": ((H, A), (H,)),
        "phi": ((A,), (H, A)),
        "psi": ((H,), (H, A)),
    }[name]


@dataclass(frozen=True, eq=False)
class PairBundle:
    """Two braided Lie bialgebras A, H with the four connecting maps."""

    A: BraidedLieBialgebra
    H: BraidedLieBialgebra
    maps: ActionData = field(default_factory=ActionData)

    def __post_init__(self):
        if self.A.obj.name == self.H.obj.name and self.A.obj != self.H.obj:
            raise ValueError("A and H need distinct object names")
        graded.require_symmetric([self.A.obj, self.H.obj])
        for n in MAP_NAMES:
            m = self.maps.get(n)
            if m is not None:
                d, c = map_signature(n, self.A.obj, self.H.obj)
                _expect(m, d, c, n)

    def map(self, name: str) -> Morphism:
        m = self.maps.get(name)
        if m is None:
            d, c = map_signature(name, self.A.obj, self.H.obj)
            return graded.zero(d, c)
        return m

    def with_maps(self, maps: ActionData) -> "PairBundle":
        return PairBundle(self.A, self.H, maps)

    def env(self) -> Env:
        m = {
            "bracket_A": self.A.bracket, "cobracket_A": self.A.cobracket,
            "bracket_H": self.H.bracket, "cobracket_H": self.H.cobracket,
        }
        for n in MAP_NAMES:
            m[n] = self.map(n)
        return Env({"A": self.A.obj, "H": self.H.obj}, m, definitions())


def _expect(m: Morphism, dom, cod, what: str):
    if not isinstance(m, Morphism):
        raise TypeError(f"{what} must be a Morphism")
    if m.domain != tuple(dom) or m.codomain != tuple(cod):
        raise graded.SignatureMismatch(
            f"{what}: expected {graded.word_name(tuple(dom))} -> {graded.word_name(tuple(cod))}, "
            f"got {graded.word_name(m.domain)} -> {graded.word_name(m.codomain)}"
        )


# reports


@dataclass(eq=False)
class CheckReport:
    axiom: str
    target: str
    passed: bool
    witness: Witness | None
    citation: str
    residual: Morphism | None = None

    def to_json(self) -> dict:
        d = {"axiom": self.axiom, "target": self.target, "passed": self.passed,
             "citation": self.citation}
        if self.witness is not None:
            w = self.witness
            d["witness"] = {
                "in": list(w.domain_index), "out": list(w.codomain_index),
                "in_label": w.domain_label, "out_label": w.codomain_label,
                "value": scalar_json(w.value),
            }
        return d

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f" on {self.target}" if self.target else ""
        extra = ""
        if self.witness is not None:
            w = self.witness
            extra = f"  witness {w.domain_label} -> ({w.value}) {w.codomain_label}"
        return f"{status} {self.axiom}{where}{extra}"


def scalar_json(s: Scalar) -> dict:
    return {"conductor": s.conductor, "value": encode_scalar(s)}


# checking


def residual(env: Env, lhs, rhs) -> Morphism:
    left = evaluate(lhs, env)
    right = evaluate(rhs, env, want=signature_in_env(lhs, env))
    return left - right


def _subject_env(subject, entry, target: str | None) -> tuple[Env, str]:
    objects = entry.objects
    if isinstance(subject, Env):
        return subject, target or ""
    if isinstance(subject, PairBundle):
        if objects == ("L",):
            target = target or "A"
            s = {"A": subject.A, "H": subject.H}[target]
            return s.env("L"), target
        if objects == ("H",):
            target = target or "H"
            s = {"A": subject.A, "H": subject.H}[target]
            return s.env("H"), target
        return subject.env(), target or "A,H"
    if isinstance(subject, (BraidedLieBialgebra, BraidedLieAlgebra, BraidedLieCoalgebra)):
        if objects not in (("L",), ("H",)):
            raise MissingGenerator(f"{entry.id} needs a pair of objects with connecting maps")
        role = objects[0]
        m = {}
        if getattr(subject, "bracket", None) is not None:
            m[f"bracket_{role}"] = subject.bracket
        if getattr(subject, "cobracket", None) is not None:
            m[f"cobracket_{role}"] = subject.cobracket
        for extra in ("R", "r"):
            if getattr(subject, extra, None) is not None:
                m[extra] = getattr(subject, extra)
        return Env({role: subject.obj}, m, definitions()), target or subject.obj.name
    raise TypeError(f"cannot check axioms on {type(subject).__name__}")


def check_axiom(subject, axiom_id: str, target: str | None = None) -> CheckReport:
    """Evaluate one registry axiom; ``target`` picks A or H for single-object axioms."""
    entry = axiom(axiom_id)
    env, where = _subject_env(subject, entry, target)
    missing = sorted(g for g in entry.generators if g not in env.morphisms)
    if missing:
        raise MissingGenerator(f"{axiom_id} needs {', '.join(missing)}")
    res = residual(env, entry.lhs, entry.rhs)
    return CheckReport(axiom_id, where, res.is_zero(), res.first_nonzero(), entry.citation, res)


def applicable_axioms(subject) -> list[tuple[str, str | None]]:
    out = []
    single = [e.id for e in axiom_registry() if e.objects == ("L",)]
    if isinstance(subject, PairBundle):
        for t in ("A", "H"):
            out += [(a, t) for a in single]
        out += [(e.id, None) for e in axiom_registry() if e.objects == ("H", "A")]
        return out
    has = {
        "bracket": getattr(subject, "bracket", None) is not None,
        "cobracket": getattr(subject, "cobracket", None) is not None,
        "R": getattr(subject, "R", None) is not None,
        "r": getattr(subject, "r", None) is not None,
    }
    for e in axiom_registry():
        if e.objects not in (("L",), ("H",)):
            continue
        need = {g.split("_")[0] if "_" in g else g for g in e.generators}
        if all(has.get(n, False) for n in need):
            out.append((e.id, None))
    return out


def _jobs() -> int:
    try:
        return max(1, int(os.environ.get("BRAIDLIE_JOBS", "1")))
    except ValueError:
        return 1


def _check_star(args):
    subject, aid, target = args
    rep = check_axiom(subject, aid, target)
    rep.residual = None
    return rep


def check_all(subject, axiom_ids=None) -> list[CheckReport]:
    """Check every applicable (or every listed) axiom, in registry order."""
    todo = applicable_axioms(subject)
    if axiom_ids is not None:
        wanted = list(axiom_ids)
        for a in wanted:
            axiom(a)
        todo = [(a, t) for a, t in todo if a in wanted]
        missing = [a for a in wanted if a not in {x for x, _ in todo}]
        for a in missing:
            todo.append((a, None))
    jobs = _jobs()
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_check_star, [(subject, a, t) for a, t in todo]))
    return [check_axiom(subject, a, t) for a, t in todo]


def compute_infinitesimal_braiding(bundle: PairBundle, side: str = "left") -> Morphism:
    """The correction term on A(x)A (left) or H(x)H (right)."""
    name = {"left": "infbraid_left", "right": "infbraid_right"}[side]
    return evaluate(definitions()[name], bundle.env())


# corollaries

ACTIVE_MAPS = {
    "double_bicrosssum": ("alpha", "beta", "phi", "psi"),
    "bicrosssum": ("alpha", "beta"),
    "bicrosscosum": ("phi", "psi"),
    "bisum_left": ("alpha", "phi"),
    "bisum_right": ("beta", "psi"),
    "bicross_sum_left": ("phi", "beta"),
    "bicross_sum_right": ("alpha", "psi"),
    "semidirect_sum_left": ("alpha",),
    "semidirect_sum_right": ("beta",),
    "semidirect_cosum_left": ("phi",),
    "semidirect_cosum_right": ("psi",),
    "direct_sum": (),
}


@dataclass(eq=False)
class CorollaryReport:
    corollary: str
    passed: bool
    reports: list[CheckReport]
    citation: str

    def to_json(self) -> dict:
        return {"corollary": self.corollary, "passed": self.passed, "citation": self.citation,
                "checks": [r.to_json() for r in self.reports]}


def check_corollary_hypotheses(bundle: PairBundle, corollary_id: str, require_slb: bool = True) -> CorollaryReport:
    """Hypotheses of a named special case, with inactive maps set to zero."""
    c = corollary(corollary_id)
    b = bundle.with_maps(bundle.maps.only(ACTIVE_MAPS[c.variant]))
    reports = []
    for item in c.axioms:
        aid, _, target = item.partition("@")
        if aid in c.slb and not require_slb:
            continue
        reports.append(check_axiom(b, aid, target or None))
    env = b.env()
    for k, (cond, text) in enumerate(zip(c.conditions, c.condition_texts)):
        res = evaluate(cond, env)
        reports.append(CheckReport(
            f"{c.id}:condition{k + 1}", "A,H", res.is_zero(), res.first_nonzero(),
            c.citation + ": vanishing condition", res,
        ))
    return CorollaryReport(c.id, all(r.passed for r in reports), reports, c.citation)
