"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored lowest degree first.  Any type supporting ``+``,
``-``, ``*`` and comparison with ``0`` works, including ``int``,
``fractions.Fraction`` and :class:`Poly` itself (for polynomials whose
coefficients are polynomials in another variable).
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence


def _is_zero(c: Any) -> bool:
    return c == 0


class Poly:
    """Immutable dense polynomial with trailing zeros stripped."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    @classmethod
    def constant(cls, c: Any) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c: Any = 1) -> "Poly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Any:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def _coerce(self, other: Any) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other: Any) -> "Poly":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other: Any) -> "Poly":
        return Poly(other * c for c in self.coeffs)

    def __pow__(self, k: int) -> "Poly":
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Any, one: Any = 1) -> Any:
        """Evaluate by Horner's rule; ``one`` is the unit of the ring of ``x``."""
        acc = one * 0
        for c in reversed(self.coeffs):
            acc = acc * x + one * c
        return acc

    def divmod_monic(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder by a divisor whose leading coefficient is 1."""
        if divisor.lead() != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        quot: list = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if _is_zero(c):
                continue
            quot[i - d] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i - d + j] = rem[i - d + j] - c * b
        return Poly(quot), Poly(rem[:d])

    def to_string(self, var: str = "x") -> str:
        """Render highest degree first, e.g. ``x^2-x-1``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            if isinstance(c, Poly):
                body = "(" + c.to_string("u") + ")"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                a = -c if c < 0 else c
                body = "" if (a == 1 and k > 0) else str(a)
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            term = body + "*" + mono if body and mono else body + mono
            parts.append(sign + term)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


def poly_from_ints(coeffs: Sequence[int]) -> Poly:
    return Poly(int(c) for c in coeffs)
