"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are residues modulo the n-th cyclotomic polynomial with rational
coefficients, so every nonzero element is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Iterable, Sequence, Union

from .poly import Poly

Number = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Return Phi_n as an integer polynomial (monic, degree phi(n))."""
    if n < 1:
        raise ValueError("n must be positive")
    xn_minus_1 = Poly([-1] + [0] * (n - 1) + [1])
    quot = xn_minus_1
    for d in range(1, n):
        if n % d == 0:
            quot, rem = quot.divmod_monic(cyclotomic_polynomial(d))
            assert rem.is_zero()
    return quot


def euler_phi(n: int) -> int:
    return cyclotomic_polynomial(n).degree


@dataclass(frozen=True)
class RootSpec:
    """Order bookkeeping for a root of unity zeta of order ``n``.

    ``m`` is the order of zeta^4 and ``case_div4`` records whether 4 | n.
    """

    n: int
    m: int
    case_div4: bool

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.m != self.n // gcd(4, self.n) or self.case_div4 != (self.n % 4 == 0):
            raise ValueError(f"inconsistent RootSpec {self}")

    @property
    def M(self) -> int:
        """Torus center period: m, or 2m when 4 | n."""
        return 2 * self.m if self.case_div4 else self.m


def root_spec(n: int) -> RootSpec:
    if n < 1:
        raise ValueError("n must be positive")
    return RootSpec(n=n, m=n // gcd(4, n), case_div4=(n % 4 == 0))


def _reduce(coeffs: list, n: int) -> tuple:
    phi = cyclotomic_polynomial(n).coeffs
    d = len(phi) - 1
    a = list(coeffs)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            base = i - d
            for j in range(d):
                pj = phi[j]
                if pj:
                    a[base + j] -= c * pj
    a = a[:d] + [0] * max(0, d - len(a))
    return tuple(Fraction(c) for c in a)


class CycloScalar:
    """An element of Q(zeta_n), stored as phi(n) rational coefficients."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: Iterable[Number] = (), *, reduced: bool = False):
        self.n = n
        cs = list(coeffs)
        if reduced:
            self.coeffs = tuple(cs)
        else:
            self.coeffs = _reduce(cs, n)
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, n: int) -> "CycloScalar":
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> "CycloScalar":
        return cls(n, (1,))

    @classmethod
    def rational(cls, n: int, c: Number) -> "CycloScalar":
        return cls(n, (c,))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloScalar":
        return _zeta_cached(n, k % n)

    # predicates
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # arithmetic
    def _lift(self, other: Any) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            if other.n != self.n:
                raise ValueError(f"mixing Q(zeta_{self.n}) and Q(zeta_{other.n})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.n, (other,))
        return NotImplemented

    def __add__(self, other: Any) -> "CycloScalar":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloScalar(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "CycloScalar":
        return CycloScalar(self.n, tuple(-a for a in self.coeffs), reduced=True)

    def __sub__(self, other: Any) -> "CycloScalar":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloScalar(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)), reduced=True)

    def __rsub__(self, other: Any) -> "CycloScalar":
        return (-self) + other

    def __mul__(self, other: Any) -> "CycloScalar":
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.n, tuple(a * other for a in self.coeffs), reduced=True)
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if self.is_rational():
            return CycloScalar(self.n, tuple(a[0] * c for c in b), reduced=True)
        if o.is_rational():
            return CycloScalar(self.n, tuple(b[0] * c for c in a), reduced=True)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CycloScalar(self.n, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        """Multiplicative inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(zeta_n)")
        f = Poly(Fraction(c) for c in cyclotomic_polynomial(self.n).coeffs)
        g = Poly(self.coeffs)
        # invariant: s0*g == r0, s1*g == r1 (mod f)
        r0, r1 = f, g
        s0, s1 = Poly(), Poly([Fraction(1)])
        while r1.degree > 0:
            q, r = _divmod_field(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        inv = s1 * (1 / Fraction(r1.lead()))
        return CycloScalar(self.n, inv.coeffs)

    def __truediv__(self, other: Any) -> "CycloScalar":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "CycloScalar":
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> "CycloScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloScalar.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison and hashing
    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloScalar):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.n, self.coeffs))
        return self._hash

    # serialization
    def to_json(self) -> list[str]:
        return [_frac_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, n: int, data: Sequence[Any]) -> "CycloScalar":
        # longer lists are accepted and reduced mod Phi_n
        return cls(n, [Fraction(str(c)) for c in data])

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{_frac_str(a)}*{mono}"
            else:
                body = _frac_str(a)
            terms.append(sign + body)
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s

    def __repr__(self) -> str:
        return f"CycloScalar({self.n}, {self})"


def _frac_str(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _divmod_field(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Polynomial division over a field."""
    rem = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lb = Fraction(b.lead())
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        f = c / lb
        quot[i - db] = f
        for j, bc in enumerate(b.coeffs):
            rem[i - db + j] -= f * bc
    return Poly(quot), Poly(rem[:db])


@lru_cache(maxsize=4096)
def _zeta_cached(n: int, k: int) -> CycloScalar:
    return CycloScalar(n, [0] * k + [1])


def zeta_pow(spec: RootSpec, k: int) -> CycloScalar:
    """Canonical representative of zeta^k in Q(zeta_n)."""
    return _zeta_cached(spec.n, k % spec.n)
