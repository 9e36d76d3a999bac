"""Worked examples: sl2, the 2-dim Borel, the superline, quantum linear spaces,
the matrix example and abelian zero algebras."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import graded
from .constructions import DoubleBicrosssumSpec, build_double_bicrosssum
from .cyclotomic import Scalar, lcm
from .diagram import Env, evaluate
from .graded import BasisVector, GradedObject, GroupData, Morphism, compose_all, tensor
from .registry import axiom, definitions
from .structures import BraidedLieBialgebra, PairBundle


def bracket_from_table(obj: GradedObject, table: dict) -> Morphism:
    """``{(x, y): {z: c}}`` on labels; antisymmetry is not implied."""
    ix = obj.index
    entries = {(ix(a), ix(b)): {(ix(z),): c for z, c in out.items()} for (a, b), out in table.items()}
    return Morphism((obj, obj), (obj,), entries)


def cobracket_from_table(obj: GradedObject, table: dict) -> Morphism:
    ix = obj.index
    entries = {(ix(x),): {(ix(a), ix(b)): c for (a, b), c in out.items()} for x, out in table.items()}
    return Morphism((obj,), (obj, obj), entries)


def element(word, terms: dict) -> Morphism:
    """A vector I -> word from ``{(label, ...): coefficient}``."""
    word = graded.as_word(word)
    row = {tuple(o.index(l) for o, l in zip(word, labels)): c for labels, c in terms.items()}
    return Morphism((), word, {(): row})


def antisymmetric(table: dict) -> dict:
    out = {}
    for (a, b), img in table.items():
        out[(a, b)] = dict(img)
        out[(b, a)] = {z: -Fraction(c) for z, c in img.items()}
    return out


def coboundary(H: BraidedLieBialgebra, R: Morphism) -> Morphism:
    """The cobracket making R a coboundary."""
    env = Env({"H": H.obj}, {"bracket_H": H.bracket, "R": R}, definitions())
    return evaluate(axiom("COB").rhs, env)


# the standard examples


def sl2_qt() -> BraidedLieBialgebra:
    """sl2 (basis h, e, f) with R = e(x)f + 1/4 h(x)h and cobracket its coboundary."""
    obj = GradedObject.trivial("sl2", ["h", "e", "f"])
    bracket = bracket_from_table(
        obj, antisymmetric({("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})
    )
    R = element((obj, obj), {("e", "f"): 1, ("h", "h"): Fraction(1, 4)})
    H = BraidedLieBialgebra.from_parts(obj, bracket, R=R)
    return H.with_(cobracket=coboundary(H, R))


def borel2() -> BraidedLieBialgebra:
    """[x, y] = y, delta(y) = x(x)y - y(x)x."""
    obj = GradedObject.trivial("b2", ["x", "y"])
    bracket = bracket_from_table(obj, antisymmetric({("x", "y"): {"y": 1}}))
    cobracket = cobracket_from_table(obj, {"y": {("x", "y"): 1, ("y", "x"): -1}})
    return BraidedLieBialgebra(obj, bracket, cobracket)


def superline() -> BraidedLieBialgebra:
    """Z/2-graded: x odd, y even, [x, x] = y, zero cobracket."""
    group = GroupData((2,))
    obj = GradedObject("super", [BasisVector("x", (1,), (1,)), BasisVector("y", (0,), (0,))], group)
    bracket = bracket_from_table(obj, {("x", "x"): {"y": 1}})
    return BraidedLieBialgebra.from_parts(obj, bracket)


def zero_algebra(n: int, name: str | None = None) -> BraidedLieBialgebra:
    obj = GradedObject.trivial(name or f"ab{n}", [f"e{i + 1}" for i in range(n)])
    return BraidedLieBialgebra.from_parts(obj)


# quantum linear spaces


class QLSError(ValueError):
    pass


@dataclass(frozen=True)
class QLSSpec:
    """Generators x_i of degree g_i with characters chi_i.

    ``literal`` mode asks chi_i(g_j) chi_j(g_i) = 1 for all i, j (so every
    chi_i(g_i) = -1); ``strict`` mode only for i != j.
    """

    group: GroupData
    degrees: tuple
    characters: tuple
    mode: str = "literal"

    def __post_init__(self):
        if len(self.degrees) != len(self.characters) or not self.degrees:
            raise QLSError("need matching nonempty degrees and characters")
        if self.mode not in ("literal", "strict"):
            raise QLSError("mode is literal or strict")
        object.__setattr__(self, "degrees", tuple(self.group.reduce(g) for g in self.degrees))
        object.__setattr__(self, "characters", tuple(self.group.reduce(c) for c in self.characters))

    @property
    def theta(self) -> int:
        return len(self.degrees)

    def q(self, i: int, j: int) -> Scalar:
        """chi_j(g_i), the factor in x_i x_j = chi_j(g_i) x_j x_i."""
        return self.group.pairing(self.characters[j], self.degrees[i])

    def nilpotency(self, i: int) -> int:
        orders = self.group.cyclic_orders
        m = lcm(*orders)
        k = sum(c * g * (m // n) for c, g, n in zip(self.characters[i], self.degrees[i], orders)) % m
        return m // gcd(k, m)


@dataclass(frozen=True, eq=False)
class QLSResult:
    spec: QLSSpec
    U: GradedObject
    product: Morphism
    unit: Morphism
    coproduct: Morphism
    counit: Morphism
    nilpotency: tuple
    A: BraidedLieBialgebra | None = None
    H: BraidedLieBialgebra | None = None

    def generator(self, i: int) -> int:
        e = [0] * self.spec.theta
        e[i] = 1
        return self.U.index(_mono_label(e))


def _mono_label(a) -> str:
    parts = [f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(a) if k]
    return "".join(parts) or "1"


def build_quantum_linear_space(spec: QLSSpec) -> QLSResult:
    th = spec.theta
    for i in range(th):
        if spec.q(i, i) == 1:
            raise QLSError(f"chi_{i + 1}(g_{i + 1}) = 1 gives no finite truncation")
        for j in range(th):
            if (i != j or spec.mode == "literal") and spec.q(i, j) * spec.q(j, i) != 1:
                raise QLSError(
                    f"chi_{j + 1}(g_{i + 1}) chi_{i + 1}(g_{j + 1}) != 1 "
                    f"({'literal' if i == j else 'strict'} condition)"
                )
    N = tuple(spec.nilpotency(i) for i in range(th))
    g = spec.group
    monos = list(itertools.product(*(range(n) for n in N)))
    basis = []
    for a in monos:
        deg, ch = g.identity, g.identity
        for i, k in enumerate(a):
            for _ in range(k):
                deg = g.mul(deg, spec.degrees[i])
                ch = g.mul(ch, spec.characters[i])
        basis.append(BasisVector(_mono_label(a), deg, ch))
    U = GradedObject("U", basis, g)
    pos = {a: k for k, a in enumerate(monos)}

    entries = {}
    for a in monos:
        for b in monos:
            c = tuple(x + y for x, y in zip(a, b))
            if any(x >= n for x, n in zip(c, N)):
                continue
            s = Scalar.one()
            for i in range(th):
                for j in range(i):
                    if a[i] and b[j]:
                        s = s * spec.q(i, j) ** (a[i] * b[j])
            entries[(pos[a], pos[b])] = {(pos[c],): s}
    product = Morphism((U, U), (U,), entries)
    one = pos[(0,) * th]
    unit = Morphism((), (U,), {(): {(one,): 1}})
    counit = Morphism((U,), (), {(one,): {(): 1}})

    # coproduct by braided multiplication of primitives in U (x) U
    mult2 = compose_all(
        tensor(product, product),
        tensor(graded.identity(U), graded.braiding(U, U), graded.identity(U)),
    )

    def mul2(u: Morphism, v: Morphism) -> Morphism:
        return graded.compose(mult2, tensor(u, v))

    unit2 = tensor(unit, unit)
    prims = []
    for i in range(th):
        e = [0] * th
        e[i] = 1
        # a vector of nonzero degree, so not a morphism of the category
        x = Morphism((), (U,), {(): {(pos[tuple(e)],): 1}}, check=False)
        prims.append(tensor(x, unit) + tensor(unit, x))
    rows = {}
    for a in monos:
        v = unit2
        for i, k in enumerate(a):
            for _ in range(k):
                v = mul2(v, prims[i])
        if v.entries:
            rows[(pos[a],)] = v.entries[()]
    coproduct = Morphism((U,), (U, U), rows)

    res = QLSResult(spec, U, product, unit, coproduct, counit, N)
    if graded.is_symmetric_on([U]):
        A_obj, H_obj = U.renamed("A"), U.renamed("H")
        m_A = product.retype((A_obj, A_obj), (A_obj,))
        bracket_A = m_A - graded.compose(m_A, graded.braiding(A_obj, A_obj))
        d_H = coproduct.retype((H_obj,), (H_obj, H_obj))
        cobracket_H = d_H - graded.compose(graded.braiding(H_obj, H_obj), d_H)
        res = QLSResult(
            spec, U, product, unit, coproduct, counit, N,
            BraidedLieBialgebra.from_parts(A_obj, bracket=bracket_A),
            BraidedLieBialgebra.from_parts(H_obj, cobracket=cobracket_H),
        )
    return res


def qls_default() -> QLSSpec:
    """theta = 1 over Z/2 with chi(g) = -1."""
    return QLSSpec(GroupData((2,)), ((1,),), ((1,),))


def qls_pair() -> QLSSpec:
    """theta = 2 over Z/4 x Z/4 with x1 x2 = i x2 x1."""
    return QLSSpec(GroupData((4, 4)), ((1, 0), (0, 1)), ((2, 3), (1, 2)))


def qls_sum(spec: QLSSpec | None = None) -> BraidedLieBialgebra:
    """A (+) H for the quantum linear space."""
    res = build_quantum_linear_space(spec or qls_default())
    if res.A is None:
        raise QLSError("braiding on U is not symmetric")
    return build_double_bicrosssum(DoubleBicrosssumSpec(res.A, res.H, variant="direct_sum"), name="QLS").D


# matrix example


@dataclass(frozen=True, eq=False)
class MatrixExample:
    U: GradedObject
    X: GradedObject
    Y: GradedObject
    product: Morphism
    unit: Morphism
    coproduct: Morphism
    counit: Morphism
    Xlie: BraidedLieBialgebra
    Ylie: BraidedLieBialgebra
    D: BraidedLieBialgebra


def build_matrix_example(U: GradedObject | None = None) -> MatrixExample:
    """X = U(x)U* with m = id(x)ev(x)id, Y = U*(x)U with Delta = id(x)coev(x)id."""
    if U is None:
        U = GradedObject.trivial("U", ["u1", "u2"])
    graded.require_symmetric([U])
    d = graded.left_dual(U)
    Us = d.dual
    X = graded.tensor_object((U, Us), "X")
    Y = graded.tensor_object((Us, U), "Y")
    iU, iUs = graded.identity(U), graded.identity(Us)
    product = tensor(iU, d.ev, iUs).retype((X, X), (X,))
    unit = d.coev.retype((), (X,))
    coproduct = tensor(iUs, d.coev, iU).retype((Y,), (Y, Y))
    counit = d.ev.retype((Y,), ())
    bracket = product - graded.compose(product, graded.braiding(X, X))
    cobracket = coproduct - graded.compose(graded.braiding(Y, Y), coproduct)
    Xlie = BraidedLieBialgebra.from_parts(X, bracket=bracket)
    Ylie = BraidedLieBialgebra.from_parts(Y, cobracket=cobracket)
    D = build_double_bicrosssum(DoubleBicrosssumSpec(Xlie, Ylie, variant="direct_sum"), name="XY").D
    return MatrixExample(U, X, Y, product, unit, coproduct, counit, Xlie, Ylie, D)


# registry of named examples


@dataclass(frozen=True, eq=False)
class LibraryExample:
    name: str
    structure: BraidedLieBialgebra
    description: str
    extras: dict = field(default_factory=dict)


_DESCRIPTIONS = {
    "sl2_qt": "sl2 with R = e(x)f + 1/4 h(x)h, quasitriangular",
    "borel2": "two-dimensional Borel Lie bialgebra",
    "superline": "Z/2-graded superline, [x, x] = y",
    "qls": "quantum linear space, theta = 1 over Z/2, as A (+) H",
    "qls2": "quantum linear space, theta = 2 over Z/4 x Z/4, as A (+) H",
    "matrix": "matrix example X (+) Y over a 2-dim U",
    "zero(n)": "n-dimensional zero bialgebra",
}


def library_names() -> list[str]:
    return list(_DESCRIPTIONS)


def example_library(name: str) -> LibraryExample:
    m = re.fullmatch(r"zero\(?(\d+)\)?", name)
    if m:
        n = int(m.group(1))
        return LibraryExample(f"zero{n}", zero_algebra(n), f"{n}-dimensional zero bialgebra")
    builders = {
        "sl2_qt": sl2_qt,
        "borel2": borel2,
        "superline": superline,
        "qls": lambda: qls_sum(qls_default()),
        "qls2": lambda: qls_sum(qls_pair()),
        "matrix": lambda: build_matrix_example().D,
    }
    if name not in builders:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(library_names())}")
    return LibraryExample(name, builders[name](), _DESCRIPTIONS[name])
