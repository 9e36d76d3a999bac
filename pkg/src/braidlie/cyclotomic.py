"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Scalar` stores its conductor ``N`` and the coefficient vector of
``sum c_k zeta_N^k`` for ``0 <= k < phi(N)``, reduced modulo the N-th
cyclotomic polynomial.  Binary operations promote both operands to the lcm of
their conductors, so values built at different conductors mix freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational


class InvalidConductor(ValueError):
    pass


def lcm(*ns: int) -> int:
    out = 1
    for n in ns:
        out = out * n // gcd(out, n)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidConductor(n)
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # both low -> high, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise InvalidConductor(n)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical integer coefficient vectors of zeta_n^j for 0 <= j < n."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    vec = [1] + [0] * (phi - 1)
    rows = []
    for _ in range(n):
        rows.append(tuple(vec))
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            vec = [v - top * c for v, c in zip(vec, cyc)]
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class Scalar:
    """An element of Q(zeta_conductor) in canonical form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if not isinstance(conductor, int) or conductor < 1:
            raise InvalidConductor(conductor)
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"conductor {conductor} needs {euler_phi(conductor)} coefficients"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar._raw, (self.conductor, self.coeffs))

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "conductor", conductor)
        object.__setattr__(s, "coeffs", coeffs)
        return s

    # constructors

    @classmethod
    def rational(cls, q, conductor: int = 1) -> "Scalar":
        q = _as_fraction(q)
        return cls._raw(conductor, (q,) + (Fraction(0),) * (euler_phi(conductor) - 1))

    @classmethod
    def from_powers(cls, conductor: int, pairs) -> "Scalar":
        """Build ``sum c * zeta_conductor^k`` from ``(k, c)`` pairs; any k allowed."""
        if not isinstance(conductor, int) or conductor < 1:
            raise InvalidConductor(conductor)
        table = _power_table(conductor)
        acc = [Fraction(0)] * euler_phi(conductor)
        for k, c in pairs:
            c = _as_fraction(c)
            if not c:
                continue
            for i, v in enumerate(table[int(k) % conductor]):
                if v:
                    acc[i] += c * v
        return cls._raw(conductor, tuple(acc))

    @classmethod
    def zero(cls, conductor: int = 1) -> "Scalar":
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "Scalar":
        return cls.rational(1, conductor)

    # conversions

    def promote(self, conductor: int) -> "Scalar":
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise InvalidConductor(
                f"cannot promote conductor {self.conductor} to {conductor}"
            )
        phi = euler_phi(conductor)
        if self.is_rational():
            return Scalar._raw(conductor, (self.coeffs[0],) + (Fraction(0),) * (phi - 1))
        step = conductor // self.conductor
        table = _power_table(conductor)
        acc = [Fraction(0)] * phi
        for k, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(table[(k * step) % conductor]):
                    if v:
                        acc[i] += c * v
        return Scalar._raw(conductor, tuple(acc))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_pairs(self) -> list[tuple[int, Fraction]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # arithmetic

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar.rational(_as_fraction(x))

    @staticmethod
    def _align(a: "Scalar", b: "Scalar") -> tuple["Scalar", "Scalar"]:
        if a.conductor == b.conductor:
            return a, b
        n = lcm(a.conductor, b.conductor)
        return a.promote(n), b.promote(n)

    def __add__(self, other) -> "Scalar":
        try:
            o = Scalar._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = Scalar._align(self, o)
        return Scalar._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Scalar":
        try:
            o = Scalar._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                q = _as_fraction(other)
            except TypeError:
                return NotImplemented
            return Scalar._raw(self.conductor, tuple(c * q for c in self.coeffs))
        if other.is_rational():
            n = lcm(self.conductor, other.conductor)
            q = other.coeffs[0]
            return Scalar._raw(n, tuple(c * q for c in self.promote(n).coeffs))
        if self.is_rational():
            return other * self
        a, b = Scalar._align(self, other)
        n = a.conductor
        table = _power_table(n)
        acc = [Fraction(0)] * len(a.coeffs)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if not y:
                    continue
                xy = x * y
                for k, v in enumerate(table[(i + j) % n]):
                    if v:
                        acc[k] += xy * v
        return Scalar._raw(n, tuple(acc))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.is_rational():
            return Scalar._raw(
                self.conductor, (1 / self.coeffs[0],) + self.coeffs[1:]
            )
        n = self.conductor
        inv = _poly_inverse_mod(list(self.coeffs), [Fraction(c) for c in cyclotomic_polynomial(n)])
        inv = inv + [Fraction(0)] * (euler_phi(n) - len(inv))
        return Scalar._raw(n, tuple(inv))

    def __truediv__(self, other) -> "Scalar":
        try:
            o = Scalar._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.one(self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.rational(_as_fraction(other))
            except TypeError:
                return NotImplemented
        a, b = Scalar._align(self, other)
        return a.coeffs == b.coeffs

    # equality crosses conductors, so there is no cheap consistent hash
    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Scalar({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in self.to_pairs():
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.conductor}" + (f"^{k}" if k > 1 else "")
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def root_of_unity(conductor: int, k: int = 1) -> Scalar:
    """zeta_conductor ** k."""
    if not isinstance(conductor, int) or conductor < 1:
        raise InvalidConductor(conductor)
    return Scalar._raw(
        conductor, tuple(Fraction(v) for v in _power_table(conductor)[k % conductor])
    )


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _trim(list(a))
    b = _trim(list(b))
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, v in enumerate(b):
            a[shift + i] -= c * v
        a = _trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    # extended Euclid: find u with a*u = 1 mod m (m irreducible)
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    _, u = _poly_divmod([x / c for x in s1], m)
    return u


def encode_scalar(s: Scalar, conductor: int | None = None) -> list:
    """``[[power, "num/den"], ...]`` relative to ``conductor`` (default: own)."""
    if conductor is not None:
        s = s.promote(conductor)
    return [[k, f"{c.numerator}/{c.denominator}"] for k, c in s.to_pairs()]


def decode_scalar(pairs, conductor: int) -> Scalar:
    out = []
    for item in pairs:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"bad scalar term {item!r}")
        k, c = item
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError(f"bad power {k!r}")
        if not isinstance(c, (str, int)) or isinstance(c, bool):
            raise ValueError(f"bad coefficient {c!r}")
        out.append((k, Fraction(c)))
    return Scalar.from_powers(conductor, out)
