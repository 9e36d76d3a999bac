"""Truncated universal enveloping algebras and double cross products of them.

Only the trivially graded (ordinary Lie algebra) case is supported.  Elements
are dicts from PBW monomials (nondecreasing index tuples) to Fractions, kept
up to a total degree bound D.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from . import graded
from .constructions import DoubleBicrosssumSpec, build_double_bicrosssum
from .graded import GradedObject, Morphism
from .structures import ActionData, BraidedLieBialgebra, CheckReport, PairBundle, check_axiom

DEFAULT_DEGREE = 3


class EnvelopingError(ValueError):
    pass


class DegreeOutOfRange(EnvelopingError):
    pass


class UnsupportedCategory(EnvelopingError):
    pass


class PreconditionViolation(EnvelopingError):
    def __init__(self, message: str, reports: list[CheckReport]):
        super().__init__(message)
        self.reports = reports


Mono = tuple
Elem = dict


def _require_trivial(obj: GradedObject):
    g = obj.group
    for b in obj.basis:
        if b.degree != g.identity or b.character != g.identity:
            raise UnsupportedCategory(
                f"{obj.name} carries a nontrivial grading; enveloping algebras are "
                "only built for ordinary Lie algebras"
            )


def _rational_table(m: Morphism) -> dict:
    out = {}
    for i, row in m.entries.items():
        out[i] = {j: s.to_fraction() for j, s in row.items()}
    return out


def _add_into(acc: dict, elem: dict, c=1):
    for k, v in elem.items():
        w = acc.get(k, 0) + c * v
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)


def pbw_dimension(n: int, D: int) -> int:
    """sum_{d <= D} C(n + d - 1, d)."""
    return sum(comb(n + d - 1, d) for d in range(D + 1))


class TruncatedEnveloping:
    """U(L) in PBW basis, filtered by degree <= D."""

    def __init__(self, obj: GradedObject, bracket: Morphism, D: int = DEFAULT_DEGREE):
        _require_trivial(obj)
        if D < 0:
            raise ValueError("degree bound must be nonnegative")
        self.obj = obj
        self.n = obj.dim
        self.D = D
        self._br = {}
        for (a, b), row in _rational_table(bracket).items():
            self._br[(a, b)] = {j[0]: c for j, c in row.items()}

    @classmethod
    def of(cls, L, D: int = DEFAULT_DEGREE) -> "TruncatedEnveloping":
        return cls(L.obj, L.bracket, D)

    def bracket(self, a: int, b: int) -> dict:
        return self._br.get((a, b), {})

    def basis(self) -> list[Mono]:
        out = []
        for d in range(self.D + 1):
            out.extend(_monomials(self.n, d))
        return out

    def dim(self) -> int:
        return len(self.basis())

    def generator(self, i: int) -> Elem:
        return {(i,): Fraction(1)}

    def one(self) -> Elem:
        return {(): Fraction(1)}

    def normal_form(self, word, strategy: str = "leftmost", rng: random.Random | None = None) -> Elem:
        """Straighten a word in the generators by x_b x_a -> x_a x_b + [x_b, x_a]."""
        word = tuple(word)
        if len(word) > self.D:
            raise DegreeOutOfRange(f"word of degree {len(word)} exceeds the bound {self.D}")
        out: dict = {}
        todo = [(word, Fraction(1))]
        while todo:
            w, c = todo.pop()
            inv = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
            if not inv:
                _add_into(out, {w: c})
                continue
            if strategy == "leftmost":
                k = inv[0]
            elif strategy == "rightmost":
                k = inv[-1]
            elif strategy == "random":
                k = (rng or random).choice(inv)
            else:
                raise ValueError(f"unknown strategy {strategy}")
            b, a = w[k], w[k + 1]
            todo.append((w[:k] + (a, b) + w[k + 2:], c))
            for z, s in self.bracket(b, a).items():
                todo.append((w[:k] + (z,) + w[k + 2:], c * s))
        return out

    def mul(self, u: Elem, v: Elem) -> Elem:
        out: dict = {}
        for m1, c1 in u.items():
            for m2, c2 in v.items():
                if len(m1) + len(m2) > self.D:
                    raise DegreeOutOfRange(
                        f"product of degrees {len(m1)} and {len(m2)} exceeds the bound {self.D}"
                    )
                _add_into(out, self._mono_mul(m1, m2), c1 * c2)
        return out

    @lru_cache(maxsize=None)
    def _mono_mul(self, m1: Mono, m2: Mono) -> dict:
        return self.normal_form(m1 + m2)

    def coproduct(self, m: Mono) -> dict:
        """Delta of a PBW monomial; generators are primitive."""
        return mono_coproduct(m)

    def counit(self, u: Elem) -> Fraction:
        return u.get((), Fraction(0))


def _monomials(n: int, d: int) -> list[Mono]:
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, n):
            acc.append(i)
            rec(i, left - 1, acc)
            acc.pop()

    rec(0, d, [])
    return out


@lru_cache(maxsize=None)
def mono_coproduct(m: Mono) -> dict:
    out: dict = {}
    k = len(m)
    for r in range(k + 1):
        for pick in combinations(range(k), r):
            left = tuple(m[i] for i in pick)
            right = tuple(m[i] for i in range(k) if i not in pick)
            key = (left, right)
            out[key] = out.get(key, 0) + 1
    return out


class TruncatedDoubleCrossProduct:
    """U(A) (x) U(H) with (a.x)(b.y) = a (x1 |> b1) . (x2 <| b2) y."""

    def __init__(self, A, H, alpha: Morphism, beta: Morphism, D: int = DEFAULT_DEGREE):
        self.UA = TruncatedEnveloping.of(A, D)
        self.UH = TruncatedEnveloping.of(H, D)
        self.D = D
        self.A, self.H = A, H
        self.alpha, self.beta = alpha, beta
        self._alpha = {}
        for (x, a), row in _rational_table(alpha).items():
            self._alpha[(x, a)] = {j[0]: c for j, c in row.items()}
        self._beta = {}
        for (x, a), row in _rational_table(beta).items():
            self._beta[(x, a)] = {j[0]: c for j, c in row.items()}

    def basis(self) -> list[tuple[Mono, Mono]]:
        out = []
        for d in range(self.D + 1):
            for da in range(d, -1, -1):
                for a in _monomials(self.UA.n, da):
                    for x in _monomials(self.UH.n, d - da):
                        out.append((a, x))
        return out

    def dim(self) -> int:
        return len(self.basis())

    # extended actions on PBW monomials

    @lru_cache(maxsize=None)
    def left(self, x: Mono, a: Mono) -> dict:
        """x |> a in U(A)."""
        if not x:
            return {a: Fraction(1)}
        if not a:
            return {}
        if len(x) > 1:
            out: dict = {}
            for m, c in self.left(x[1:], a).items():
                _add_into(out, self.left(x[:1], m), c)
            return out
        g = x[0]
        a1, rest = a[0], a[1:]
        out = {}
        ga = {(k,): c for k, c in self._alpha.get((g, a1), {}).items()}
        _add_into(out, self.UA.mul(ga, {rest: Fraction(1)}))
        _add_into(out, self.UA.mul({(a1,): Fraction(1)}, self.left(x, rest)))
        for h, c in self._beta.get((g, a1), {}).items():
            _add_into(out, self.left((h,), rest), c)
        return out

    @lru_cache(maxsize=None)
    def right(self, x: Mono, a: Mono) -> dict:
        """x <| a in U(H)."""
        if not a:
            return {x: Fraction(1)}
        if not x:
            return {}
        if len(a) > 1:
            out: dict = {}
            for m, c in self.right(x, a[:1]).items():
                _add_into(out, self.right(m, a[1:]), c)
            return out
        a1 = a[0]
        y, xk = x[:-1], x[-1]
        out = {}
        for k, c in self._alpha.get((xk, a1), {}).items():
            _add_into(out, self.right(y, (k,)), c)
        _add_into(out, self.UH.mul(self.right(y, a), {(xk,): Fraction(1)}))
        yb = {(h,): c for h, c in self._beta.get((xk, a1), {}).items()}
        _add_into(out, self.UH.mul({y: Fraction(1)}, yb))
        return out

    # algebra structure

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for (a, x), c1 in u.items():
            for (b, y), c2 in v.items():
                if len(a) + len(x) + len(b) + len(y) > self.D:
                    raise DegreeOutOfRange(
                        f"product of degrees {len(a) + len(x)} and {len(b) + len(y)} "
                        f"exceeds the bound {self.D}"
                    )
                _add_into(out, self._basis_mul(a, x, b, y), c1 * c2)
        return out

    @lru_cache(maxsize=None)
    def _basis_mul(self, a, x, b, y) -> dict:
        out: dict = {}
        for (x1, x2), cx in mono_coproduct(x).items():
            for (b1, b2), cb in mono_coproduct(b).items():
                left = self.UA.mul({a: Fraction(1)}, self.left(x1, b1))
                if not left:
                    continue
                right = self.UH.mul(self.right(x2, b2), {y: Fraction(1)})
                for m, c in left.items():
                    for n, d in right.items():
                        _add_into(out, {(m, n): c * d * cx * cb})
        return out

    def coproduct(self, u: dict) -> dict:
        """Tensor product coalgebra: keys ((a1, x1), (a2, x2))."""
        out: dict = {}
        for (a, x), c in u.items():
            for (a1, a2), ca in mono_coproduct(a).items():
                for (x1, x2), cx in mono_coproduct(x).items():
                    _add_into(out, {((a1, x1), (a2, x2)): c * ca * cx})
        return out

    def from_A(self, u: Elem) -> dict:
        return {(m, ()): c for m, c in u.items()}

    def from_H(self, u: Elem) -> dict:
        return {((), m): c for m, c in u.items()}

    def one(self) -> dict:
        return {((), ()): Fraction(1)}

    def associativity_failures(self, limit: int | None = None) -> list:
        """Basis triples (u, v, w) with total degree <= D where (uv)w != u(vw)."""
        basis = self.basis()
        bad = []
        for u in basis:
            du = len(u[0]) + len(u[1])
            for v in basis:
                dv = len(v[0]) + len(v[1])
                if du + dv > self.D:
                    continue
                uv = self.mul({u: 1}, {v: 1})
                for w in basis:
                    if du + dv + len(w[0]) + len(w[1]) > self.D:
                        continue
                    if self.mul(uv, {w: 1}) != self.mul({u: 1}, self.mul({v: 1}, {w: 1})):
                        bad.append((u, v, w))
                        if limit and len(bad) >= limit:
                            return bad
        return bad


def _as_lie(L) -> BraidedLieBialgebra:
    if isinstance(L, BraidedLieBialgebra):
        return L
    return BraidedLieBialgebra.from_parts(L.obj, L.bracket)


def matched_pair_reports(A, H, alpha: Morphism, beta: Morphism) -> list[CheckReport]:
    b = PairBundle(_as_lie(A), _as_lie(H), ActionData(alpha=alpha, beta=beta))
    out = [check_axiom(b, a, t) for a, t in (("L1", "A"), ("L2", "A"), ("L1", "H"), ("L2", "H"))]
    out += [check_axiom(b, a) for a in ("MOD", "MOD-R", "M1", "M2")]
    return out


def extend_matched_pair(A, H, alpha: Morphism, beta: Morphism, D: int = DEFAULT_DEGREE) -> TruncatedDoubleCrossProduct:
    """Lift a matched pair of Lie algebras to U(A) and U(H), truncated at degree D."""
    _require_trivial(A.obj)
    _require_trivial(H.obj)
    reports = matched_pair_reports(A, H, alpha, beta)
    bad = [r for r in reports if not r.passed]
    if bad:
        raise PreconditionViolation(
            "not a matched pair of Lie algebras: " + ", ".join(r.axiom for r in bad), reports
        )
    return TruncatedDoubleCrossProduct(A, H, alpha, beta, D)


@dataclass(eq=False)
class RestrictedPair:
    alpha: Morphism
    beta: Morphism
    reports: list[CheckReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def restrict_matched_pair(P: TruncatedDoubleCrossProduct) -> RestrictedPair:
    """Read the actions of generators on generators back off the extension."""
    A, H = P.A.obj, P.H.obj
    a_rows, b_rows = {}, {}
    for x in range(H.dim):
        for a in range(A.dim):
            left = P.left((x,), (a,))
            right = P.right((x,), (a,))
            for m in list(left) + list(right):
                if len(m) != 1:
                    raise EnvelopingError("action of a generator left degree one")
            a_rows[(x, a)] = {m: c for m, c in left.items()}
            b_rows[(x, a)] = {m: c for m, c in right.items()}
    alpha = Morphism((H, A), (A,), a_rows)
    beta = Morphism((H, A), (H,), b_rows)
    return RestrictedPair(alpha, beta, matched_pair_reports(P.A, P.H, alpha, beta))


# the isomorphism U(A |><| H) ~ U(A) |><| U(H)


@dataclass(eq=False)
class EnvIsoReport:
    degree: int
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"degree": self.degree, "passed": self.passed,
                "checks": dict(self.checks), "details": dict(self.details)}


def double_cross_sum(A, H, alpha: Morphism, beta: Morphism) -> BraidedLieBialgebra:
    spec = DoubleBicrosssumSpec(_as_lie(A), _as_lie(H), ActionData(alpha=alpha, beta=beta), "bicrosssum")
    return build_double_bicrosssum(spec, name="AH").D


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def verify_env_isomorphism(A, H, alpha: Morphism, beta: Morphism, D: int = DEFAULT_DEGREE) -> EnvIsoReport:
    """Compare U(A |><| H) with U(A) |><| U(H) through f(a, x) = a.1 + 1.x.

    Checks: (i) f respects brackets of generators, (ii) f(g) is primitive,
    (iii) both sides have equal dimension in degree <= D, (iv) the
    multiplicative extension of f is a bijective algebra map in degree <= D
    (for zero actions, the product is the plain tensor product one).
    """
    P = extend_matched_pair(A, H, alpha, beta, D)
    L = double_cross_sum(A, H, alpha, beta)
    UL = TruncatedEnveloping.of(L, D)
    nA = A.obj.dim
    rep = EnvIsoReport(D)

    def f_gen(k: int) -> dict:
        return P.from_A({(k,): Fraction(1)}) if k < nA else P.from_H({(k - nA,): Fraction(1)})

    gens = range(UL.n)
    ok = True
    bad = []
    if D >= 2:
        for g in gens:
            for h in gens:
                lhs: dict = {}
                for z, c in UL.bracket(g, h).items():
                    _add_into(lhs, f_gen(z), c)
                rhs = P.mul(f_gen(g), f_gen(h))
                _add_into(rhs, P.mul(f_gen(h), f_gen(g)), -1)
                if lhs != rhs:
                    ok = False
                    bad.append([g, h])
    rep.checks["i"] = ok
    if bad:
        rep.details["i"] = bad[:5]

    ok = True
    one = ((), ())
    for g in gens:
        fg = f_gen(g)
        expect: dict = {}
        for key, c in fg.items():
            _add_into(expect, {(key, one): c})
            _add_into(expect, {(one, key): c})
        if P.coproduct(fg) != expect:
            ok = False
    rep.checks["ii"] = ok

    rep.details["dim"] = [UL.dim(), P.dim()]
    rep.checks["iii"] = UL.dim() == P.dim() == pbw_dimension(UL.n, D)

    # (iv) extend f along PBW monomials and test multiplicativity and bijectivity
    image = {}
    for m in UL.basis():
        v = P.one()
        for k in m:
            v = P.mul(v, f_gen(k))
        image[m] = v
    ok = True
    for m1 in UL.basis():
        for m2 in UL.basis():
            if len(m1) + len(m2) > D:
                continue
            lhs = {}
            for m, c in UL.mul({m1: 1}, {m2: 1}).items():
                _add_into(lhs, image[m], c)
            if lhs != P.mul(image[m1], image[m2]):
                ok = False
                break
        if not ok:
            break
    pb = P.basis()
    col = {b: k for k, b in enumerate(pb)}
    rows = []
    for m in UL.basis():
        row = [Fraction(0)] * len(pb)
        for key, c in image[m].items():
            row[col[key]] = c
        rows.append(row)
    bij = _rank(rows) == len(pb) == len(rows)
    rep.details["rank"] = _rank(rows)
    trivial = alpha.is_zero() and beta.is_zero()
    tensor_ok = True
    if trivial:
        for u in pb:
            for v in pb:
                if sum(map(len, u)) + sum(map(len, v)) > D:
                    continue
                ab = P.UA.mul({u[0]: 1}, {v[0]: 1})
                xy = P.UH.mul({u[1]: 1}, {v[1]: 1})
                expect = {(m, n): c * d for m, c in ab.items() for n, d in xy.items()}
                if P.mul({u: 1}, {v: 1}) != expect:
                    tensor_ok = False
    rep.checks["iv"] = ok and bij and tensor_ok
    return rep
