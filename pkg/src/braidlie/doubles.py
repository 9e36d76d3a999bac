"""Duals, quantum doubles, R-matrices and bosonisation."""

from __future__ import annotations

from dataclasses import dataclass

from . import graded
from .constructions import DoubleBicrosssumSpec, DoubleResult, build_double_bicrosssum
from .diagram import Env, evaluate
from .graded import Morphism, tensor
from .registry import constructions, definitions
from .structures import (
    ActionData,
    BraidedLieBialgebra,
    CheckReport,
    PairBundle,
    check_axiom,
)

TWISTS = ("plain", "op", "cop")
DOUBLE_VARIANTS = ("op", "cop")
R_AXIOMS = ("COB", "CYBE", "CYBE-I", "CYBE-II")
CO_R_AXIOMS = ("Bo", "CCYBE", "CCYBE-I", "CCYBE-II")


def _env(H: BraidedLieBialgebra, **extra) -> Env:
    m = {"bracket_H": H.bracket, "cobracket_H": H.cobracket}
    m.update(extra)
    return Env({"H": H.obj}, m, definitions())


def dual_bialgebra(H: BraidedLieBialgebra, twist: str = "plain") -> BraidedLieBialgebra:
    """H* with bracket dual to the cobracket of H and vice versa.

    ``op`` negates the bracket, ``cop`` negates the cobracket.
    """
    if twist not in TWISTS:
        raise ValueError(f"twist must be one of {TWISTS}")
    env = _env(H)
    c = constructions()
    bracket = evaluate(c["dual_bracket"], env)
    cobracket = evaluate(c["dual_cobracket"], env)
    if twist == "op":
        bracket = -bracket
    elif twist == "cop":
        cobracket = -cobracket
    return BraidedLieBialgebra(graded.left_dual(H.obj).dual, bracket, cobracket)


def double_dual_iso(H: BraidedLieBialgebra) -> Morphism:
    """The identification H -> H** sending e_i to e_i^^."""
    hh = graded.left_dual(graded.left_dual(H.obj).dual).dual
    return Morphism((H.obj,), (hh,), {(i,): {(i,): 1} for i in range(H.dim)})


@dataclass(frozen=True, eq=False)
class QuantumDouble:
    variant: str
    H: BraidedLieBialgebra
    dual: BraidedLieBialgebra
    spec: DoubleBicrosssumSpec
    result: DoubleResult
    R: Morphism  # I -> D (x) D

    @property
    def D(self) -> BraidedLieBialgebra:
        return self.result.D.with_(R=self.R)

    @property
    def bundle(self) -> PairBundle:
        return self.spec.bundle


def quantum_double(H: BraidedLieBialgebra, variant: str = "cop") -> QuantumDouble:
    """The bicrosssum H*op/cop with H and its canonical R-matrix.

    ``op`` pairs H with H*op and places R in A (x) H; ``cop`` pairs H with
    H*cop and places R in H (x) A.
    """
    if variant not in DOUBLE_VARIANTS:
        raise ValueError(f"variant must be one of {DOUBLE_VARIANTS}")
    A = dual_bialgebra(H, variant)
    env = _env(H, dualcobracket=A.cobracket)
    c = constructions()
    alpha = evaluate(c[f"double_{variant}_alpha"], env)
    beta = evaluate(c[f"double_{variant}_beta"], env)
    R0 = evaluate(c[f"double_{variant}_R"], env)
    spec = DoubleBicrosssumSpec(A, H, ActionData(alpha=alpha, beta=beta), "bicrosssum")
    res = build_double_bicrosssum(spec)
    iA, iH = res.embed_A(), res.embed_H()
    if variant == "op":
        R = graded.compose(tensor(iA, iH), R0)
    else:
        R = graded.compose(tensor(iH, iA), R0)
    return QuantumDouble(variant, H, A, spec, res, R)


def check_rmatrix(H: BraidedLieBialgebra, R: Morphism | None = None, which=R_AXIOMS) -> list[CheckReport]:
    if R is not None:
        H = H.with_(R=R)
    return [check_axiom(H, a) for a in which]


def check_cormatrix(H: BraidedLieBialgebra, r: Morphism | None = None, which=CO_R_AXIOMS) -> list[CheckReport]:
    if r is not None:
        H = H.with_(r=r)
    return [check_axiom(H, a) for a in which]


def transport_R_to_r(H: BraidedLieBialgebra, R: Morphism) -> Morphism:
    """r: H* (x) H* -> I paired against R."""
    return evaluate(constructions()["r_from_R"], _env(H, R=R))


def transport_r_to_R(H: BraidedLieBialgebra, r: Morphism) -> Morphism:
    """Inverse of :func:`transport_R_to_r`; r lives on H* (x) H*."""
    return evaluate(constructions()["R_from_r"], _env(H, rdual=r))


def bosonise_from_R(H: BraidedLieBialgebra, R: Morphism, bundle: PairBundle) -> Morphism:
    """The coaction phi: A -> H (x) A induced by R and the action alpha."""
    env = bundle.env().with_(R=R, bracket_H=H.bracket)
    return evaluate(constructions()["phi_from_R"], env)


def bosonise_from_r(H: BraidedLieBialgebra, r: Morphism, bundle: PairBundle) -> Morphism:
    """The action alpha: H (x) A -> A induced by r and the coaction phi."""
    env = bundle.env().with_(r=r)
    return evaluate(constructions()["alpha_from_r"], env)
