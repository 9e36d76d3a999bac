"""Finite-dimensional Yetter-Drinfeld modules over a finite abelian group.

Objects carry a basis of homogeneous vectors; each basis vector has a degree
``g`` in the group and a character ``chi`` acting on it.  The braiding is
``C(u (x) v) = chi_v(g_u) v (x) u``.  Morphisms are sparse tables
``{domain multi-index: {codomain multi-index: Scalar}}`` between tensor words
of objects.  Multi-indices are tuples, so their natural order is row-major
with the leftmost factor most significant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from .cyclotomic import Scalar, lcm, root_of_unity


class HomogeneityError(ValueError):
    pass


class SignatureMismatch(TypeError):
    pass


class NotSymmetric(ValueError):
    pass


@dataclass(frozen=True)
class GroupData:
    """Gamma = Z/n_1 x ... x Z/n_k; elements and characters are residue tuples."""

    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be positive: {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders)

    def reduce(self, residues: Iterable[int]) -> tuple[int, ...]:
        residues = tuple(residues)
        if len(residues) != self.rank:
            raise ValueError(f"expected {self.rank} residues, got {residues}")
        return tuple(r % n for r, n in zip(residues, self.cyclic_orders))

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def mul(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.cyclic_orders))

    def inv(self, g) -> tuple[int, ...]:
        return tuple((-a) % n for a, n in zip(g, self.cyclic_orders))

    def pairing(self, chi, g) -> Scalar:
        """chi(g) = prod_t zeta_{n_t}^{c_t g_t}."""
        return _pairing(self.cyclic_orders, tuple(chi), tuple(g))

    def elements(self):
        return itertools.product(*(range(n) for n in self.cyclic_orders))


@lru_cache(maxsize=None)
def _pairing(orders, chi, g) -> Scalar:
    m = lcm(*orders)
    k = sum(c * x * (m // n) for c, x, n in zip(chi, g, orders))
    return root_of_unity(m, k)


@dataclass(frozen=True)
class BasisVector:
    label: str
    degree: tuple[int, ...]
    character: tuple[int, ...]


class GradedObject:
    """A finite-dimensional object with a homogeneous basis."""

    __slots__ = ("name", "basis", "group", "_key")

    def __init__(self, name: str, basis: Sequence[BasisVector], group: GroupData):
        basis = tuple(
            BasisVector(b.label, group.reduce(b.degree), group.reduce(b.character))
            for b in basis
        )
        labels = [b.label for b in basis]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate basis labels in {name}: {labels}")
        self.name = name
        self.basis = basis
        self.group = group
        self._key = (name, basis, group)

    @classmethod
    def trivial(cls, name: str, labels: Sequence[str], group: GroupData | None = None):
        group = group or GroupData()
        return cls(
            name, [BasisVector(l, group.identity, group.identity) for l in labels], group
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self.basis)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def renamed(self, name: str) -> "GradedObject":
        return GradedObject(name, self.basis, self.group)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedObject):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GradedObject({self.name!r}, dim={self.dim})"


Word = tuple  # tuple[GradedObject, ...]


def as_word(x) -> Word:
    if isinstance(x, GradedObject):
        return (x,)
    return tuple(x)


def word_name(w: Word) -> str:
    return "(x)".join(o.name for o in w) if w else "I"


def multi_indices(word: Word):
    return itertools.product(*(range(o.dim) for o in word))


def _group_of(words) -> GroupData | None:
    for w in words:
        for o in w:
            return o.group
    return None


def index_grade(word: Word, idx, group=None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Total (degree, character) of a basis tensor."""
    group = group or _group_of([word])
    if group is None:
        return (), ()
    g = group.identity
    c = group.identity
    for o, i in zip(word, idx):
        b = o.basis[i]
        g = group.mul(g, b.degree)
        c = group.mul(c, b.character)
    return g, c


def index_label(word: Word, idx) -> str:
    if not word:
        return "1"
    return "(x)".join(o.basis[i].label for o, i in zip(word, idx))


class Witness(NamedTuple):
    domain_index: tuple[int, ...]
    codomain_index: tuple[int, ...]
    value: Scalar
    domain_label: str
    codomain_label: str


class Morphism:
    """A homogeneous linear map between tensor words of graded objects."""

    __slots__ = ("domain", "codomain", "entries")

    def __init__(self, domain, codomain, entries: Mapping | None = None, check: bool = True):
        self.domain = as_word(domain)
        self.codomain = as_word(codomain)
        clean: dict = {}
        for i, row in (entries or {}).items():
            i = tuple(i)
            out = {}
            for j, s in row.items():
                if not isinstance(s, Scalar):
                    s = Scalar.rational(s)
                if s:
                    out[tuple(j)] = s
            if out:
                clean[i] = out
        self.entries = clean
        if check:
            self._validate()

    @classmethod
    def _trusted(cls, domain, codomain, entries) -> "Morphism":
        m = object.__new__(cls)
        m.domain = domain
        m.codomain = codomain
        m.entries = entries
        return m

    @classmethod
    def from_triples(cls, domain, codomain, triples) -> "Morphism":
        """Build from ``(in_index, out_index, scalar)`` triples, summing repeats."""
        entries: dict = {}
        for i, j, s in triples:
            row = entries.setdefault(tuple(i), {})
            j = tuple(j)
            row[j] = row[j] + s if j in row else s
        return cls(domain, codomain, entries)

    def _validate(self):
        group = _group_of([self.domain, self.codomain])
        for i, row in self.entries.items():
            if len(i) != len(self.domain) or any(
                not 0 <= k < o.dim for k, o in zip(i, self.domain)
            ):
                raise IndexError(f"bad domain index {i} for {word_name(self.domain)}")
            gi = index_grade(self.domain, i, group)
            for j in row:
                if len(j) != len(self.codomain) or any(
                    not 0 <= k < o.dim for k, o in zip(j, self.codomain)
                ):
                    raise IndexError(
                        f"bad codomain index {j} for {word_name(self.codomain)}"
                    )
                gj = index_grade(self.codomain, j, group)
                if gj != gi:
                    raise HomogeneityError(
                        f"entry {index_label(self.domain, i)} -> "
                        f"{index_label(self.codomain, j)} mixes degree/character "
                        f"{gi} and {gj}"
                    )

    # queries

    @property
    def signature(self) -> tuple[Word, Word]:
        return self.domain, self.codomain

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self.entries.get(tuple(i), {}).get(tuple(j), Scalar.zero())

    def image(self, i) -> dict:
        return dict(self.entries.get(tuple(i), {}))

    def triples(self):
        for i in sorted(self.entries):
            row = self.entries[i]
            for j in sorted(row):
                yield i, j, row[j]

    def first_nonzero(self) -> Witness | None:
        if not self.entries:
            return None
        i = min(self.entries)
        j = min(self.entries[i])
        return Witness(
            i, j, self.entries[i][j],
            index_label(self.domain, i), index_label(self.codomain, j),
        )

    def to_matrix(self) -> list[list[Scalar]]:
        rows = list(multi_indices(self.codomain))
        cols = list(multi_indices(self.domain))
        return [[self[c, r] for c in cols] for r in rows]

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.signature != other.signature:
            return False
        if self.entries.keys() != other.entries.keys():
            return False
        for i, row in self.entries.items():
            orow = other.entries[i]
            if row.keys() != orow.keys():
                return False
            if any(row[j] != orow[j] for j in row):
                return False
        return True

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return (
            f"Morphism({word_name(self.domain)} -> {word_name(self.codomain)}, "
            f"{sum(len(r) for r in self.entries.values())} entries)"
        )

    def pretty(self) -> str:
        lines = []
        for i, j, s in self.triples():
            lines.append(
                f"{index_label(self.domain, i)} -> ({s}) {index_label(self.codomain, j)}"
            )
        return "\n".join(lines) if lines else "0"

    # algebra

    def __add__(self, other: "Morphism") -> "Morphism":
        _same_signature(self, other)
        entries = {i: dict(r) for i, r in self.entries.items()}
        for i, row in other.entries.items():
            acc = entries.setdefault(i, {})
            for j, s in row.items():
                acc[j] = acc[j] + s if j in acc else s
        return Morphism._trusted(self.domain, self.codomain, _prune(entries))

    def __neg__(self) -> "Morphism":
        return self.scale(-1)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, s) -> "Morphism":
        if not isinstance(s, Scalar):
            s = Scalar.rational(s)
        if not s:
            return zero(self.domain, self.codomain)
        entries = {i: {j: v * s for j, v in r.items()} for i, r in self.entries.items()}
        return Morphism._trusted(self.domain, self.codomain, entries)

    def __rmul__(self, s) -> "Morphism":
        return self.scale(s)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """f @ g is f after g."""
        return compose(self, other)

    def retype(self, domain, codomain) -> "Morphism":
        """Reinterpret along row-major flattening of both sides."""
        domain, codomain = as_word(domain), as_word(codomain)
        di = _reshaper(self.domain, domain)
        ci = _reshaper(self.codomain, codomain)
        entries = {di(i): {ci(j): s for j, s in r.items()} for i, r in self.entries.items()}
        return Morphism(domain, codomain, entries)


def _prune(entries: dict) -> dict:
    out = {}
    for i, row in entries.items():
        row = {j: s for j, s in row.items() if s}
        if row:
            out[i] = row
    return out


def _same_signature(f: Morphism, g: Morphism):
    if f.signature != g.signature:
        raise SignatureMismatch(
            f"{word_name(f.domain)} -> {word_name(f.codomain)} vs "
            f"{word_name(g.domain)} -> {word_name(g.codomain)}"
        )


def _flat(word: Word, idx) -> int:
    n = 0
    for o, i in zip(word, idx):
        n = n * o.dim + i
    return n


def _unflat(word: Word, n: int) -> tuple[int, ...]:
    out = []
    for o in reversed(word):
        n, r = divmod(n, o.dim)
        out.append(r)
    return tuple(reversed(out))


def _reshaper(src: Word, dst: Word):
    a = 1
    for o in src:
        a *= o.dim
    b = 1
    for o in dst:
        b *= o.dim
    if a != b:
        raise SignatureMismatch(f"cannot retype {word_name(src)} as {word_name(dst)}")
    return lambda idx: _unflat(dst, _flat(src, idx))


# constructors


def zero(domain, codomain) -> Morphism:
    return Morphism._trusted(as_word(domain), as_word(codomain), {})


def identity(word) -> Morphism:
    word = as_word(word)
    one = Scalar.one()
    return Morphism._trusted(word, word, {i: {i: one} for i in multi_indices(word)})


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f after g."""
    if g.codomain != f.domain:
        raise SignatureMismatch(
            f"cannot compose {word_name(f.domain)} -> {word_name(f.codomain)} after "
            f"{word_name(g.domain)} -> {word_name(g.codomain)}"
        )
    fe = f.entries
    out = {}
    for i, row in g.entries.items():
        acc: dict = {}
        for m, s in row.items():
            frow = fe.get(m)
            if not frow:
                continue
            for j, t in frow.items():
                st = s * t
                acc[j] = acc[j] + st if j in acc else st
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return Morphism._trusted(g.domain, f.codomain, out)


def compose_all(*fs: Morphism) -> Morphism:
    """compose_all(f, g, h) = f after g after h."""
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = compose(f, out)
    return out


def tensor(*fs: Morphism) -> Morphism:
    if not fs:
        return identity(())
    out = fs[0]
    for f in fs[1:]:
        out = _tensor2(out, f)
    return out


def _tensor2(f: Morphism, g: Morphism) -> Morphism:
    entries = {}
    for i, frow in f.entries.items():
        for k, grow in g.entries.items():
            entries[i + k] = {j + l: s * t for j, s in frow.items() for l, t in grow.items()}
    return Morphism._trusted(f.domain + g.domain, f.codomain + g.codomain, entries)


def braiding(first, second) -> Morphism:
    """C_{X,Y}: X (x) Y -> Y (x) X for words X, Y."""
    x, y = as_word(first), as_word(second)
    out = {}
    nx = len(x)
    for idx in multi_indices(x + y):
        gx, _ = index_grade(x, idx[:nx])
        _, cy = index_grade(y, idx[nx:])
        out[idx] = {idx[nx:] + idx[:nx]: _pair_word(x + y, cy, gx)}
    return Morphism._trusted(x + y, y + x, out)


def inverse_braiding(first, second) -> Morphism:
    """C_{X,Y}^{-1}: Y (x) X -> X (x) Y."""
    x, y = as_word(first), as_word(second)
    out = {}
    ny = len(y)
    for idx in multi_indices(y + x):
        gx, _ = index_grade(x, idx[ny:])
        _, cy = index_grade(y, idx[:ny])
        out[idx] = {idx[ny:] + idx[:ny]: _pair_word(x + y, cy, gx).inverse()}
    return Morphism._trusted(y + x, x + y, out)


def _pair_word(word: Word, chi, g) -> Scalar:
    group = _group_of([word])
    if group is None:
        return Scalar.one()
    return group.pairing(chi, g)


def is_symmetric_on(objects: Iterable[GradedObject]) -> bool:
    """C_{V,U} C_{U,V} = id for every pair drawn from the given objects."""
    vecs = [b for o in objects for b in o.basis]
    if not vecs:
        return True
    group = next(iter(objects)).group
    for u in vecs:
        for v in vecs:
            if group.pairing(v.character, u.degree) * group.pairing(
                u.character, v.degree
            ) != 1:
                return False
    return True


def require_symmetric(objects: Iterable[GradedObject]):
    objects = list(objects)
    if not is_symmetric_on(objects):
        raise NotSymmetric(
            "braiding is not symmetric on " + ", ".join(o.name for o in objects)
        )


# duality


class Duality(NamedTuple):
    dual: GradedObject
    ev: Morphism
    coev: Morphism


_DUALS: dict = {}


def left_dual(u: GradedObject) -> Duality:
    """U* with inverse degrees and characters; ev(e^i (x) e_j) = delta_ij."""
    cached = _DUALS.get(u)
    if cached is not None:
        return cached
    g = u.group
    dual = GradedObject(
        u.name + "*",
        [BasisVector(b.label + "^", g.inv(b.degree), g.inv(b.character)) for b in u.basis],
        g,
    )
    one = Scalar.one()
    ev = Morphism._trusted((dual, u), (), {(i, i): {(): one} for i in range(u.dim)})
    coev = Morphism._trusted(
        (), (u, dual), {(): {(i, i): one for i in range(u.dim)}} if u.dim else {}
    )
    d = Duality(dual, ev, coev)
    _DUALS[u] = d
    return d


# direct sums


class DirectSum(NamedTuple):
    obj: GradedObject
    summands: tuple[GradedObject, ...]
    injections: tuple[Morphism, ...]
    projections: tuple[Morphism, ...]

    def inj(self, k: int) -> Morphism:
        return self.injections[k]

    def proj(self, k: int) -> Morphism:
        return self.projections[k]


def direct_sum(*objects: GradedObject, name: str | None = None) -> DirectSum:
    """Concatenate bases; summands keep their order."""
    if not objects:
        raise ValueError("direct sum needs at least one summand")
    group = objects[0].group
    if any(o.group != group for o in objects):
        raise ValueError("summands live over different groups")
    name = name or "+".join(o.name for o in objects)
    clash = len({b.label for o in objects for b in o.basis}) != sum(o.dim for o in objects)
    basis = []
    for k, o in enumerate(objects):
        prefix = o.name if len({x.name for x in objects}) == len(objects) else f"{o.name}{k}"
        for b in o.basis:
            label = f"{prefix}.{b.label}" if clash else b.label
            basis.append(BasisVector(label, b.degree, b.character))
    obj = GradedObject(name, basis, group)
    one = Scalar.one()
    injections, projections = [], []
    offset = 0
    for o in objects:
        inj = {(i,): {(offset + i,): one} for i in range(o.dim)}
        proj = {(offset + i,): {(i,): one} for i in range(o.dim)}
        injections.append(Morphism._trusted((o,), (obj,), inj))
        projections.append(Morphism._trusted((obj,), (o,), proj))
        offset += o.dim
    return DirectSum(obj, tuple(objects), tuple(injections), tuple(projections))


def direct_sum_duality(ds: DirectSum, name: str | None = None) -> tuple[DirectSum, Morphism, Morphism]:
    """The duality (U+V)* = U* + V* with ev, coev summed over components."""
    duals = [left_dual(o) for o in ds.summands]
    dsum = direct_sum(*(d.dual for d in duals), name=name or ds.obj.name + "*")
    ev = zero((dsum.obj, ds.obj), ())
    coev = zero((), (ds.obj, dsum.obj))
    for k, d in enumerate(duals):
        ev = ev + compose(d.ev, tensor(dsum.proj(k), ds.proj(k)))
        coev = coev + compose(tensor(ds.inj(k), dsum.inj(k)), d.coev)
    return dsum, ev, coev


def tensor_object(word, name: str) -> GradedObject:
    """A single object whose basis is the row-major basis of a tensor word."""
    word = as_word(word)
    group = word[0].group
    basis = []
    for idx in multi_indices(word):
        g, c = index_grade(word, idx)
        basis.append(BasisVector(index_label(word, idx), g, c))
    return GradedObject(name, basis, group)
