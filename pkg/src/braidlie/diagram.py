"""A small term language for string diagrams.

Grammar (whitespace is ignored)::

    expr   := "0"
            | "comp" "(" expr ("," expr)+ ")"      -- comp(f, g) is f after g
            | "tensor" "(" expr ("," expr)* ")"
            | "add" "(" expr ("," expr)* ")"
            | "scale" "(" scalar "," expr ")"
            | "neg" "(" expr ")"
            | ("id" | "ev" | "coev" | "braid" | "inverse_braid") "(" objs ")"
            | NAME                                   -- a generator
    objs   := [obj ("," obj)*]
    obj    := NAME "*"*
    scalar := ["-"] INT ["/" INT] | "zeta" "(" INT "," INT ")"

``braid(X, Y)`` is C_{X,Y}: X (x) Y -> Y (x) X, ``inverse_braid(X, Y)`` its
inverse, ``ev(X)``: X* (x) X -> I and ``coev(X)``: I -> X (x) X*.  The literal
``0`` is the zero map of whatever signature its context demands.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Union

from . import graded
from .cyclotomic import Scalar, root_of_unity
from .graded import GradedObject, Morphism


class DiagramSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<<>>{text[pos:]}")
        self.pos = pos


class DiagramTypeError(TypeError):
    def __init__(self, message: str, left=None, right=None):
        if left is not None:
            message = f"{message}: {_sig_str(left)} vs {_sig_str(right)}"
        super().__init__(message)
        self.left = left
        self.right = right


class UnboundGenerator(KeyError):
    pass


# AST


@dataclass(frozen=True)
class Gen:
    name: str
    objects: tuple[str, ...] | None = None  # set for builtins taking objects


@dataclass(frozen=True)
class Comp:
    parts: tuple


@dataclass(frozen=True)
class Tensor:
    parts: tuple


@dataclass(frozen=True)
class Add:
    parts: tuple


@dataclass(frozen=True)
class ScalarLit:
    rational: Fraction = Fraction(1)
    zeta: tuple[int, int] | None = None

    def value(self) -> Scalar:
        if self.zeta is not None:
            return root_of_unity(*self.zeta) * self.rational
        return Scalar.rational(self.rational)


@dataclass(frozen=True)
class Scale:
    scalar: ScalarLit
    body: object


@dataclass(frozen=True)
class Neg:
    body: object


@dataclass(frozen=True)
class Zero:
    pass


Expr = Union[Gen, Comp, Tensor, Add, Scale, Neg, Zero]

OBJECT_BUILTINS = {"id", "ev", "coev", "braid", "inverse_braid"}
_ARITY = {"ev": 1, "coev": 1, "braid": 2, "inverse_braid": 2}


# parser

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[(),*/-]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text_len = len(text)
    while pos < text_len:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise DiagramSyntaxError("unexpected character", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None, value=None):
        tok = self.toks[self.k]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value or kind
            raise DiagramSyntaxError(f"expected {want!r}, found {tok[1]!r}", self.text, tok[2])
        self.k += 1
        return tok

    def expr(self):
        kind, val, pos = self.peek()
        if kind == "int":
            if val != "0":
                raise DiagramSyntaxError("only the literal 0 may stand as a map", self.text, pos)
            self.take()
            return Zero()
        name = self.take("name")[1]
        if self.peek()[1] != "(":
            if name in OBJECT_BUILTINS or name in {"comp", "tensor", "add", "scale", "neg"}:
                raise DiagramSyntaxError(f"{name} needs arguments", self.text, pos)
            return Gen(name)
        self.take("sym", "(")
        if name in OBJECT_BUILTINS:
            objs = self.objects()
            self.take("sym", ")")
            n = _ARITY.get(name)
            if n is not None and len(objs) != n:
                raise DiagramSyntaxError(f"{name} takes {n} object(s)", self.text, pos)
            return Gen(name, tuple(objs))
        if name == "scale":
            s = self.scalar()
            self.take("sym", ",")
            body = self.expr()
            self.take("sym", ")")
            return Scale(s, body)
        if name in {"comp", "tensor", "add", "neg"}:
            parts = [self.expr()]
            while self.peek()[1] == ",":
                self.take()
                parts.append(self.expr())
            self.take("sym", ")")
            if name == "neg":
                if len(parts) != 1:
                    raise DiagramSyntaxError("neg takes one argument", self.text, pos)
                return Neg(parts[0])
            if name == "comp" and len(parts) < 2:
                raise DiagramSyntaxError("comp needs at least two arguments", self.text, pos)
            return {"comp": Comp, "tensor": Tensor, "add": Add}[name](tuple(parts))
        raise DiagramSyntaxError(f"generator {name} takes no arguments", self.text, pos)

    def objects(self):
        objs = []
        if self.peek()[1] == ")":
            return objs
        while True:
            name = self.take("name")[1]
            while self.peek()[1] == "*":
                self.take()
                name += "*"
            objs.append(name)
            if self.peek()[1] != ",":
                return objs
            self.take()

    def scalar(self) -> ScalarLit:
        kind, val, pos = self.peek()
        if kind == "name":
            if val != "zeta":
                raise DiagramSyntaxError("expected a scalar", self.text, pos)
            self.take()
            self.take("sym", "(")
            n = int(self.take("int")[1])
            self.take("sym", ",")
            neg = self.peek()[1] == "-"
            if neg:
                self.take()
            k = int(self.take("int")[1])
            self.take("sym", ")")
            if n < 1:
                raise DiagramSyntaxError("zeta order must be positive", self.text, pos)
            return ScalarLit(Fraction(1), (n, (-k if neg else k) % n))
        sign = 1
        if val == "-":
            self.take()
            sign = -1
        num = int(self.take("int")[1])
        den = 1
        if self.peek()[1] == "/":
            self.take()
            den = int(self.take("int")[1])
            if den == 0:
                raise DiagramSyntaxError("zero denominator", self.text, pos)
        return ScalarLit(Fraction(sign * num, den))


def parse(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise DiagramSyntaxError("trailing input", text, tok[2])
    return e


def to_text(e: Expr) -> str:
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, Gen):
        if e.objects is None:
            return e.name
        return f"{e.name}({', '.join(e.objects)})"
    if isinstance(e, Comp):
        return f"comp({', '.join(map(to_text, e.parts))})"
    if isinstance(e, Tensor):
        return f"tensor({', '.join(map(to_text, e.parts))})"
    if isinstance(e, Add):
        return f"add({', '.join(map(to_text, e.parts))})"
    if isinstance(e, Neg):
        return f"neg({to_text(e.body)})"
    if isinstance(e, Scale):
        s = e.scalar
        if s.zeta is not None:
            lit = f"zeta({s.zeta[0]}, {s.zeta[1]})"
            if s.rational != 1:
                raise ValueError("cannot print scaled root of unity")
        else:
            lit = str(s.rational)
        return f"scale({lit}, {to_text(e.body)})"
    raise TypeError(e)


def generators(e: Expr) -> set[str]:
    """Generator names (not builtins) mentioned by an expression."""
    if isinstance(e, Gen):
        return set() if e.objects is not None else {e.name}
    if isinstance(e, (Comp, Tensor, Add)):
        out: set = set()
        for p in e.parts:
            out |= generators(p)
        return out
    if isinstance(e, (Neg, Scale)):
        return generators(e.body)
    return set()


# signatures

Sig = tuple  # (domain roles, codomain roles)


def _sig_str(sig) -> str:
    if sig is None:
        return "?"
    d, c = sig
    return f"{'(x)'.join(d) or 'I'} -> {'(x)'.join(c) or 'I'}"


def default_signature(name: str) -> Sig | None:
    """Signatures fixed by naming convention."""
    if name.startswith("bracket_"):
        x = name[len("bracket_"):]
        return (x, x), (x,)
    if name.startswith("cobracket_"):
        x = name[len("cobracket_"):]
        return (x,), (x, x)
    table = {
        "alpha": (("H", "A"), ("A",)),
        "beta": (("H", "A"), ("H",)),
        "phi": (("A",), ("H", "A")),
        "psi": (("H",), ("H", "A")),
        "R": ((), ("H", "H")),
        "r": (("H", "H"), ()),
    }
    return table.get(name)


def infer_signature(
    e: Expr,
    signatures: Mapping[str, Sig] | Callable[[str], Sig | None] = default_signature,
    definitions: Mapping[str, Expr] | None = None,
) -> Sig | None:
    """Signature of ``e`` as role words, or None for a bare zero."""
    lookup = signatures if callable(signatures) else signatures.get
    definitions = definitions or {}

    def go(e):
        if isinstance(e, Zero):
            return None
        if isinstance(e, Gen):
            if e.objects is not None:
                o = e.objects
                if e.name == "id":
                    return tuple(o), tuple(o)
                if e.name == "ev":
                    return (o[0] + "*", o[0]), ()
                if e.name == "coev":
                    return (), (o[0], o[0] + "*")
                if e.name == "braid":
                    return (o[0], o[1]), (o[1], o[0])
                if e.name == "inverse_braid":
                    return (o[1], o[0]), (o[0], o[1])
            if e.name in definitions:
                return go(definitions[e.name])
            sig = lookup(e.name)
            if sig is None:
                raise UnboundGenerator(e.name)
            return tuple(sig[0]), tuple(sig[1])
        if isinstance(e, Comp):
            sigs = [go(p) for p in e.parts]
            if any(s is None for s in sigs):
                raise DiagramTypeError("cannot compose with an untyped 0")
            for outer, inner in zip(sigs, sigs[1:]):
                if inner[1] != outer[0]:
                    raise DiagramTypeError(
                        "composition mismatch (inner then outer)", inner, outer
                    )
            return sigs[-1][0], sigs[0][1]
        if isinstance(e, Tensor):
            sigs = [go(p) for p in e.parts]
            if any(s is None for s in sigs):
                raise DiagramTypeError("cannot tensor an untyped 0")
            return (
                tuple(x for s in sigs for x in s[0]),
                tuple(x for s in sigs for x in s[1]),
            )
        if isinstance(e, Add):
            sigs = [s for s in (go(p) for p in e.parts) if s is not None]
            for s in sigs[1:]:
                if s != sigs[0]:
                    raise DiagramTypeError("summands disagree", sigs[0], s)
            return sigs[0] if sigs else None
        if isinstance(e, (Neg, Scale)):
            return go(e.body)
        raise TypeError(e)

    return go(e)


# evaluation


class Env:
    """Role bindings: objects by role name, morphisms by generator name."""

    def __init__(
        self,
        objects: Mapping[str, GradedObject],
        morphisms: Mapping[str, Morphism] | None = None,
        definitions: Mapping[str, Expr] | None = None,
    ):
        self.objects = dict(objects)
        self.morphisms = dict(morphisms or {})
        self.definitions = dict(definitions or {})

    def obj(self, role: str) -> GradedObject:
        if role in self.objects:
            return self.objects[role]
        for o in self.objects.values():
            if o.name == role:
                return o
        if role.endswith("*"):
            return graded.left_dual(self.obj(role[:-1])).dual
        raise UnboundGenerator(f"object {role}")

    def word(self, roles) -> tuple:
        return tuple(self.obj(r) for r in roles)

    def signature(self, name: str) -> Sig | None:
        if name in self.morphisms:
            return None
        return default_signature(name)

    def with_(self, **morphisms) -> "Env":
        m = dict(self.morphisms)
        m.update(morphisms)
        return Env(self.objects, m, self.definitions)


def evaluate(e: Expr | str, env: Env, want: Sig | None = None) -> Morphism:
    """Evaluate ``e``; ``want`` types a bare ``0``."""
    if isinstance(e, str):
        e = parse(e)
    sig = _infer_in_env(e, env)
    if sig is None:
        sig = want
    memo: dict = {}

    def go(e, want):
        key = (e, want)
        if key in memo:
            return memo[key]
        out = _eval(e, want)
        memo[key] = out
        return out

    def _eval(e, want):
        if isinstance(e, Zero):
            if want is None:
                raise DiagramTypeError("untyped 0")
            return graded.zero(env.word(want[0]), env.word(want[1]))
        if isinstance(e, Gen):
            if e.objects is not None:
                return _builtin(e, env)
            if e.name in env.definitions:
                return go(env.definitions[e.name], want)
            if e.name not in env.morphisms:
                raise UnboundGenerator(e.name)
            m = env.morphisms[e.name]
            expect = default_signature(e.name)
            if expect is not None:
                d, c = env.word(expect[0]), env.word(expect[1])
                if m.domain != d or m.codomain != c:
                    raise DiagramTypeError(
                        f"generator {e.name} bound with the wrong signature",
                        (tuple(o.name for o in d), tuple(o.name for o in c)),
                        (tuple(o.name for o in m.domain), tuple(o.name for o in m.codomain)),
                    )
            return m
        if isinstance(e, Comp):
            ms = [go(p, _infer_in_env(p, env)) for p in e.parts]
            return graded.compose_all(*ms)
        if isinstance(e, Tensor):
            return graded.tensor(*(go(p, _infer_in_env(p, env)) for p in e.parts))
        if isinstance(e, Add):
            ms = [go(p, want) for p in e.parts]
            out = ms[0]
            for m in ms[1:]:
                out = out + m
            return out
        if isinstance(e, Neg):
            return -go(e.body, want)
        if isinstance(e, Scale):
            return go(e.body, want).scale(e.scalar.value())
        raise TypeError(e)

    return go(e, sig)


def signature_in_env(e: Expr, env: Env):
    """Role signature of ``e`` with generators typed by their bindings."""
    return _infer_in_env(e, env)


def _infer_in_env(e: Expr, env: Env):
    roles = {}
    for role, o in env.objects.items():
        roles.setdefault(o, role)
    for role, o in env.objects.items():
        roles.setdefault(graded.left_dual(o).dual, role + "*")

    def lookup(name):
        if name in env.morphisms:
            m = env.morphisms[name]
            sig = default_signature(name)
            if sig is not None:
                return sig
            return (
                tuple(roles.get(o, o.name) for o in m.domain),
                tuple(roles.get(o, o.name) for o in m.codomain),
            )
        return default_signature(name)

    return infer_signature(e, lookup, env.definitions)


def _builtin(e: Gen, env: Env) -> Morphism:
    o = e.objects
    if e.name == "id":
        return graded.identity(env.word(o))
    if e.name == "ev":
        return graded.left_dual(env.obj(o[0])).ev
    if e.name == "coev":
        return graded.left_dual(env.obj(o[0])).coev
    if e.name == "braid":
        return graded.braiding(env.obj(o[0]), env.obj(o[1]))
    if e.name == "inverse_braid":
        return graded.inverse_braiding(env.obj(o[0]), env.obj(o[1]))
    raise TypeError(e.name)
