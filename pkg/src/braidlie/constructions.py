"""The double bicrosssum A (+) H and its special cases."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graded
from .graded import DirectSum, Morphism, compose_all, tensor
from .structures import (
    ACTIVE_MAPS,
    MAP_NAMES,
    ActionData,
    BraidedLieBialgebra,
    CheckReport,
    PairBundle,
    check_axiom,
)

VARIANTS = tuple(ACTIVE_MAPS)


class VariantError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class DoubleBicrosssumSpec:
    A: BraidedLieBialgebra
    H: BraidedLieBialgebra
    maps: ActionData = field(default_factory=ActionData)
    variant: str = "double_bicrosssum"

    def __post_init__(self):
        if self.variant not in ACTIVE_MAPS:
            raise VariantError(f"unknown variant {self.variant!r}; known: {', '.join(VARIANTS)}")
        active = ACTIVE_MAPS[self.variant]
        for n in MAP_NAMES:
            m = self.maps.get(n)
            if n not in active and m is not None and not m.is_zero():
                raise VariantError(f"variant {self.variant} needs {n} = 0")

    @property
    def bundle(self) -> PairBundle:
        return PairBundle(self.A, self.H, self.maps.only(ACTIVE_MAPS[self.variant]))


@dataclass(frozen=True, eq=False)
class DoubleResult:
    D: BraidedLieBialgebra
    summands: DirectSum
    spec: DoubleBicrosssumSpec

    def embed_A(self) -> Morphism:
        return self.summands.inj(0)

    def embed_H(self) -> Morphism:
        return self.summands.inj(1)


def build_double_bicrosssum(spec: DoubleBicrosssumSpec, name: str = "D") -> DoubleResult:
    """Bracket and cobracket on A (+) H; basis order is A then H."""
    b = spec.bundle
    A, H = b.A.obj, b.H.obj
    ds = graded.direct_sum(A, H, name=name)
    iA, iH = ds.inj(0), ds.inj(1)
    pA, pH = ds.proj(0), ds.proj(1)
    alpha, beta, phi, psi = (b.map(n) for n in MAP_NAMES)
    C_AH = graded.braiding(A, H)
    C_HA = graded.braiding(H, A)

    to_A = (
        compose_all(b.A.bracket, tensor(pA, pA))
        + compose_all(alpha, tensor(pH, pA))
        - compose_all(alpha, C_AH, tensor(pA, pH))
    )
    to_H = (
        compose_all(b.H.bracket, tensor(pH, pH))
        + compose_all(beta, tensor(pH, pA))
        - compose_all(beta, C_AH, tensor(pA, pH))
    )
    bracket = compose_all(iA, to_A) + compose_all(iH, to_H)

    from_A = (
        compose_all(tensor(iA, iA), b.A.cobracket, pA)
        + compose_all(tensor(iH, iA), phi, pA)
        - compose_all(tensor(iA, iH), C_HA, phi, pA)
    )
    from_H = (
        compose_all(tensor(iH, iH), b.H.cobracket, pH)
        + compose_all(tensor(iH, iA), psi, pH)
        - compose_all(tensor(iA, iH), C_HA, psi, pH)
    )
    cobracket = from_A + from_H
    return DoubleResult(BraidedLieBialgebra(ds.obj, bracket, cobracket), ds, spec)


MAIN_HYPOTHESES = (
    [(a, "A") for a in ("L1", "L2", "CL1", "CL2")]
    + [(a, "H") for a in ("L1", "L2", "CL1", "CL2")]
    + [(a, None) for a in ("MOD", "MOD-R", "COMOD", "COMOD-R", "M1", "M2", "CM1", "CM2",
                           "B1", "B2", "B3", "B4", "B5")]
)
SLB_HYPOTHESES = (("SLB", None), ("SLB-R", None))
CONCLUSIONS = ("L1", "L2", "CL1", "CL2", "LB")


@dataclass(eq=False)
class TheoremReport:
    variant: str
    hypotheses: list[CheckReport]
    conclusions: list[CheckReport]
    require_slb: bool = True

    @property
    def hypotheses_hold(self) -> bool:
        return all(r.passed for r in self.hypotheses)

    @property
    def conclusions_hold(self) -> bool:
        return all(r.passed for r in self.conclusions)

    @property
    def verdict(self) -> str:
        if not self.hypotheses_hold:
            return "hypotheses-fail"
        return "verified" if self.conclusions_hold else "counterexample"

    def failed(self) -> list[str]:
        return [f"{r.axiom}@{r.target}" for r in self.hypotheses + self.conclusions if not r.passed]

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "require_slb": self.require_slb,
            "verdict": self.verdict,
            "hypotheses": [r.to_json() for r in self.hypotheses],
            "conclusions": [r.to_json() for r in self.conclusions],
        }


def verify_main_theorem(spec: DoubleBicrosssumSpec, require_slb: bool = True) -> TheoremReport:
    """Check the hypotheses on (A, H, maps) and the bialgebra axioms on A (+) H."""
    b = spec.bundle
    hyps = list(MAIN_HYPOTHESES) + (list(SLB_HYPOTHESES) if require_slb else [])
    hypotheses = [check_axiom(b, a, t) for a, t in hyps]
    D = build_double_bicrosssum(spec).D
    conclusions = [check_axiom(D, a) for a in CONCLUSIONS]
    for r in conclusions:
        r.target = "D"
    return TheoremReport(spec.variant, hypotheses, conclusions, require_slb)
