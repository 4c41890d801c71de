"""Chebyshev polynomials of the first and second kind.

The first kind uses the skein normalization T_0 = 2, T_1 = x and
T_k = x T_{k-1} - T_{k-2}, so that T_k(a + 1/a) = a^k + a^{-k}.  The
second kind uses S_0 = 1, S_1 = x with S_{-1} = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from .poly import Poly

_X = Poly([0, 1])


@lru_cache(maxsize=None)
def cheb_T(k: int) -> Poly:
    """First-kind Chebyshev polynomial T_k with T_0 = 2."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Poly([2])
    if k == 1:
        return _X
    return _X * cheb_T(k - 1) - cheb_T(k - 2)


@lru_cache(maxsize=None)
def cheb_S(k: int) -> Poly:
    """Second-kind Chebyshev polynomial S_k, with S_{-1} = 0."""
    if k < -1:
        raise ValueError("k must be at least -1")
    if k == -1:
        return Poly()
    if k == 0:
        return Poly([1])
    return _X * cheb_S(k - 1) - cheb_S(k - 2)


def product_to_sum(k: int, l: int) -> tuple[int, int]:
    """Indices (k+l, |k-l|) with T_k T_l = T_{k+l} + T_{|k-l|}."""
    if k < 0 or l < 0:
        raise ValueError("indices must be nonnegative")
    return k + l, abs(k - l)


def cheb_eval(k: int, x: Any, one: Any) -> Any:
    """Evaluate T_k at a ring element ``x`` by the three-term recursion."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    prev, cur = one * 2, x
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, x * cur - prev
    return cur


@dataclass(frozen=True)
class ChebRemainder:
    """The expression S_q(u) T_r(x) - S_{q-1}(u) T_{l-r}(x).

    For r >= 1 this is the remainder of T_{ql+r}(x) on division by
    T_l(x) - u.  For r = 0 the second term has degree l in x; reducing it
    with T_l(x) = u gives the genuine remainder, returned by
    :meth:`reduced`.
    """

    coef_Tr: Poly
    coef_Tlr: Poly
    r: int
    l: int

    def power_form(self) -> dict[int, Poly]:
        """The expression as a polynomial in x with coefficients in Z[u]."""
        out: dict[int, Poly] = {}
        for coef, idx, sign in ((self.coef_Tr, self.r, 1), (self.coef_Tlr, self.l - self.r, -1)):
            for deg, c in enumerate(cheb_T(idx).coeffs):
                if c:
                    out[deg] = out.get(deg, Poly()) + coef * (sign * c)
        return {d: c for d, c in sorted(out.items()) if c}

    def reduced(self) -> dict[int, Poly]:
        """The remainder proper, of x-degree below l, as {degree: Z[u] coefficient}."""
        form = self.power_form()
        if self.r != 0:
            return form
        # only the T_l(x) term can reach degree l; replace T_l(x) by u
        out = dict(form)
        tl = cheb_T(self.l)
        for deg, c in enumerate(tl.coeffs):
            if c:
                out[deg] = out.get(deg, Poly()) + self.coef_Tlr * c
        out[0] = out.get(0, Poly()) - self.coef_Tlr * Poly([0, 1])
        return {d: c for d, c in sorted(out.items()) if c}

    def __str__(self) -> str:
        a, b = self.coef_Tr, self.coef_Tlr
        if self.r == self.l - self.r:
            return _term(a - b, self.r)
        parts = []
        if a:
            parts.append(_term(a, self.r))
        if b:
            parts.append("-" + _term(b, self.l - self.r))
        return "".join(parts) if parts else "0"


def _term(c: Poly, idx: int) -> str:
    return f"({c.to_string('u')})*T_{idx}"


def cheb_remainder(q: int, l: int, r: int) -> ChebRemainder:
    """Remainder data for T_{ql+r}(x) divided by T_l(x) - u."""
    if q < 0 or l < 1 or r < 0 or r >= l:
        raise ValueError("need q >= 0, l >= 1 and 0 <= r < l")
    return ChebRemainder(coef_Tr=cheb_S(q), coef_Tlr=cheb_S(q - 1), r=r, l=l)


def power_to_cheb(p: Poly | Sequence[Any]) -> list[Fraction]:
    """Coefficients c with p = sum_i c_i T_i (T_0 = 2)."""
    rem = [Fraction(c) for c in (p.coeffs if isinstance(p, Poly) else p)]
    while rem and rem[-1] == 0:
        rem.pop()
    out = [Fraction(0)] * len(rem)
    for d in range(len(rem) - 1, 0, -1):
        c = rem[d]
        if c:
            out[d] = c
            for i, t in enumerate(cheb_T(d).coeffs):
                rem[i] -= c * t
    if rem:
        out[0] = rem[0] / 2
    return out


def cheb_to_power(c: Sequence[Any]) -> Poly:
    """The polynomial sum_i c_i T_i in the power basis."""
    acc = Poly()
    for i, ci in enumerate(c):
        if ci:
            acc = acc + cheb_T(i) * ci
    return acc


def power_to_cheb_unit(p: Poly | Sequence[Any]) -> list[Fraction]:
    """Like :func:`power_to_cheb` but against the basis {1, T_1, T_2, ...}.

    This is the convention used for threaded skeins, where the empty
    diagram is the unit and T_0 never appears per component.
    """
    out = power_to_cheb(p)
    if out:
        out[0] = out[0] * 2
    return out


def unit_cheb_to_power(c: Sequence[Any]) -> Poly:
    """Inverse of :func:`power_to_cheb_unit`."""
    c = list(c)
    if c:
        c[0] = Fraction(c[0]) / 2
    return cheb_to_power(c)
