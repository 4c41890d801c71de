"""The skein algebra of the closed torus in the (a,b)_c basis.

Basis elements e(a,b) = e(-a,-b) multiply by

    e(a,b) * e(c,d) = zeta^(ad-bc) e(a+c, b+d) + zeta^-(ad-bc) e(a-c, b-d),

and e(0,0) is the scalar 2.  With M = m (or 2m when 4 | n) the center is
spanned by the e(a,b) with M | a and M | b.

Window rewriting and traces run through the embedding
e(a,b) -> E(a,b) + E(-a,-b) into the quantum torus with
E(a,b) E(c,d) = zeta^(ad-bc) E(a+c, b+d).  The quantum torus is free over
its own center on the monomials E(r,s), 0 <= r,s < M; the skein algebra is
not free over its center on the window, so window coefficients are central
fractions N/delta with one common central denominator delta.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Iterable, Mapping, Optional

from .chebyshev import cheb_eval
from .cyclotomic import CycloScalar, RootSpec, root_spec, zeta_pow

Index = tuple[int, int]


def canonical(a: int, b: int) -> Index:
    """Representative of (a,b) ~ (-a,-b) with a > 0, or a = 0 and b >= 0."""
    if a < 0 or (a == 0 and b < 0):
        return (-a, -b)
    return (a, b)


class TorusSkein:
    """A finite combination of e(a,b) with coefficients in Q(zeta_n)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Index, Any]] = None):
        self.n = n
        clean: dict[Index, CycloScalar] = {}
        for (a, b), c in (terms or {}).items():
            key = canonical(a, b)
            c = c if isinstance(c, CycloScalar) else CycloScalar.rational(n, c)
            clean[key] = clean[key] + c if key in clean else c
        self.terms = {k: v for k, v in sorted(clean.items()) if not v.is_zero()}

    @classmethod
    def zero(cls, n: int) -> "TorusSkein":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "TorusSkein":
        """The empty diagram 1 = e(0,0)/2."""
        return cls(n, {(0, 0): Fraction(1, 2)})

    @classmethod
    def e(cls, n: int, a: int, b: int, coeff: Any = 1) -> "TorusSkein":
        return cls(n, {(a, b): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TorusSkein):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms.items())))

    def __add__(self, other: "TorusSkein") -> "TorusSkein":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TorusSkein(self.n, out)

    def __neg__(self) -> "TorusSkein":
        return TorusSkein(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TorusSkein") -> "TorusSkein":
        return self + (-other)

    def scale(self, c: Any) -> "TorusSkein":
        return TorusSkein(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: Any) -> "TorusSkein":
        if isinstance(other, TorusSkein):
            return product(self, other, root_spec(self.n))
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "TorusSkein":
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self.scale(other)
        return NotImplemented

    def max_abs_index(self) -> int:
        return max((max(abs(a), abs(b)) for a, b in self.terms), default=0)

    def to_json(self) -> list[dict]:
        return [{"a": a, "b": b, "coeff": c.to_json()} for (a, b), c in self.terms.items()]

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping[str, Any]]) -> "TorusSkein":
        out: dict[Index, CycloScalar] = {}
        for item in data:
            c = item["coeff"]
            scalar = CycloScalar.from_json(n, c) if isinstance(c, list) else CycloScalar.rational(n, Fraction(str(c)))
            key = (int(item["a"]), int(item["b"]))
            out[canonical(*key)] = out.get(canonical(*key), CycloScalar.zero(n)) + scalar
        return cls(n, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*e({a},{b})" for (a, b), c in self.terms.items())

    def __repr__(self) -> str:
        return f"TorusSkein(n={self.n}, {self})"


_TERM = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*:\s*([^,\]\(]+)")
_SCALAR_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?z(?:\^\(?(-?\d+)\)?)?)?")


def parse_scalar(text: str, n: int) -> CycloScalar:
    """Parse a sum of terms like ``3``, ``-1/2``, ``z``, ``2*z^3``, ``z^-1``."""
    text = text.replace(" ", "")
    total = CycloScalar.zero(n)
    pos = 0
    while pos < len(text):
        m = _SCALAR_TERM.match(text, pos)
        sign, num, zpart, exp = m.groups()
        if (not num and not zpart) or (pos and not sign) or (zpart and zpart.startswith("*") and not num):
            raise ValueError(f"cannot parse coefficient {text!r}")
        c = Fraction(num) if num else Fraction(1)
        k = (int(exp) if exp is not None else 1) if zpart else 0
        total = total + CycloScalar.zeta(n, k) * (-c if sign == "-" else c)
        pos = m.end()
    if not text:
        raise ValueError("empty coefficient")
    return total


def parse_torus(text: str, n: int) -> TorusSkein:
    """Parse ``[(a,b):coeff, ...]`` or a JSON list of {a, b, coeff}."""
    text = text.strip()
    if text.startswith("[{") or text == "[]":
        return TorusSkein.from_json(n, json.loads(text))
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"cannot parse torus skein {text!r}")
    body = text[1:-1].strip()
    out: dict[Index, CycloScalar] = {}
    if not body:
        return TorusSkein(n)
    consumed = 0
    for m in _TERM.finditer(body):
        key = canonical(int(m.group(1)), int(m.group(2)))
        out[key] = out.get(key, CycloScalar.zero(n)) + parse_scalar(m.group(3), n)
        consumed += 1
    if consumed != body.count(":"):
        raise ValueError(f"cannot parse torus skein {text!r}")
    return TorusSkein(n, out)


def product(x: TorusSkein, y: TorusSkein, spec: RootSpec) -> TorusSkein:
    """Skein product by the zeta-determinant product-to-sum rule."""
    n = spec.n
    if x.n != n or y.n != n:
        raise ValueError("skeins live over a different root of unity")
    out: dict[Index, CycloScalar] = {}
    for (a, b), c1 in x.terms.items():
        for (c, d), c2 in y.terms.items():
            coeff = c1 * c2
            det = a * d - b * c
            for key, z in (((a + c, b + d), det), ((a - c, b - d), -det)):
                key = canonical(*key)
                term = coeff * zeta_pow(spec, z)
                out[key] = out[key] + term if key in out else term
    return TorusSkein(n, out)


def is_central_index(i: Index, spec: RootSpec) -> bool:
    a, b = i
    return a % spec.M == 0 and b % spec.M == 0


def commutes_with_generators(x: TorusSkein, spec: RootSpec) -> bool:
    """Whether x commutes with e(1,0), e(0,1) and e(1,1)."""
    for gen in ((1, 0), (0, 1), (1, 1)):
        g = TorusSkein.e(spec.n, *gen)
        if product(x, g, spec) != product(g, x, spec):
            return False
    return True


def threaded(a: int, b: int, spec: RootSpec) -> TorusSkein:
    """T_d applied to the primitive curve e(a/d, b/d), d = gcd(a,b)."""
    d = gcd(a, b)
    if d == 0:
        return TorusSkein.e(spec.n, 0, 0)
    curve = TorusSkein.e(spec.n, a // d, b // d)
    return cheb_eval(d, curve, TorusSkein.unit(spec.n))


# quantum torus embedding

QElem = dict[Index, CycloScalar]


def _q_sub(x: QElem, y: QElem) -> QElem:
    out = dict(x)
    for k, v in y.items():
        nv = out[k] - v if k in out else -v
        if nv.is_zero():
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def _q_mul(x: QElem, y: QElem, spec: RootSpec) -> QElem:
    out: QElem = {}
    for (a, b), c1 in x.items():
        for (c, d), c2 in y.items():
            key = (a + c, b + d)
            term = c1 * c2 * zeta_pow(spec, a * d - b * c)
            out[key] = out[key] + term if key in out else term
    return {k: v for k, v in out.items() if not v.is_zero()}


def _q_scale(x: QElem, c: Any) -> QElem:
    return {k: v * c for k, v in x.items() if not (v * c).is_zero()}


def to_quantum_torus(x: TorusSkein) -> QElem:
    out: QElem = {}
    for (a, b), c in x.terms.items():
        if (a, b) == (0, 0):
            out[(0, 0)] = out.get((0, 0), CycloScalar.zero(x.n)) + c * 2
        else:
            for key in ((a, b), (-a, -b)):
                out[key] = out.get(key, CycloScalar.zero(x.n)) + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def from_quantum_torus(q: QElem, n: int) -> TorusSkein:
    """Inverse of :func:`to_quantum_torus` on symmetric elements."""
    out: dict[Index, CycloScalar] = {}
    for (a, b), c in q.items():
        partner = q.get((-a, -b))
        if partner is None or partner != c:
            raise ValueError("quantum torus element is not invariant under (a,b) -> (-a,-b)")
        key = canonical(a, b)
        if key == (0, 0):
            out[key] = c / 2
        else:
            out[key] = c
    return TorusSkein(n, out)


def _sigma(x: QElem) -> QElem:
    return {(-a, -b): c for (a, b), c in x.items()}


def center_divide(num: QElem, den: QElem, spec: RootSpec) -> Optional[QElem]:
    """Exact quotient num/den of central quantum-torus elements, or None."""
    if not den:
        raise ZeroDivisionError("division by zero")
    if not num:
        return {}
    lt = max(den)
    cd = den[lt]
    lo = (min(k[0] for k in num) - min(k[0] for k in den), min(k[1] for k in num) - min(k[1] for k in den))
    hi = (max(k[0] for k in num) - max(k[0] for k in den), max(k[1] for k in num) - max(k[1] for k in den))
    rem = dict(num)
    quot: QElem = {}
    while rem:
        u = max(rem)
        t = (u[0] - lt[0], u[1] - lt[1])
        if not (lo[0] <= t[0] <= hi[0] and lo[1] <= t[1] <= hi[1]):
            return None
        c = rem[u] / (cd * zeta_pow(spec, t[0] * lt[1] - t[1] * lt[0]))
        quot[t] = quot[t] + c if t in quot else c
        step = _q_mul({t: c}, den, spec)
        for k, v in step.items():
            nv = rem[k] - v if k in rem else -v
            if nv.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = nv
    return {k: v for k, v in quot.items() if not v.is_zero()}


@dataclass(frozen=True)
class _Block:
    slots: tuple[Index, ...]
    beta: dict  # slot -> central coefficient of that basis element in the partner slot
    den: QElem
    cofactor: QElem  # delta / den


class CenterWindow:
    """Window basis {e(r,s) : 0 <= r,s < M} (the unit at (0,0)) over the center."""

    def __init__(self, spec: RootSpec):
        self.spec = spec
        self.M = spec.M
        self.window: tuple[Index, ...] = tuple((r, s) for r in range(self.M) for s in range(self.M))
        for gen in ((self.M, 0), (0, self.M)):
            if not commutes_with_generators(TorusSkein.e(spec.n, *gen), spec):
                raise AssertionError(f"e{gen} is not central at n={spec.n}")
        self._build()

    def basis_element(self, p: Index) -> TorusSkein:
        if p == (0, 0):
            return TorusSkein.unit(self.spec.n)
        return TorusSkein.e(self.spec.n, *p)

    def split(self, q: QElem) -> dict[Index, QElem]:
        """Coordinates of a quantum-torus element over its center, slot by slot."""
        M = self.M
        out: dict[Index, QElem] = {}
        for (a, b), c in q.items():
            i, r = divmod(a, M)
            j, s = divmod(b, M)
            coeff = c * zeta_pow(self.spec, -M * (i * s - j * r))
            slot = out.setdefault((r, s), {})
            key = (M * i, M * j)
            nv = slot[key] + coeff if key in slot else coeff
            if nv.is_zero():
                slot.pop(key, None)
            else:
                slot[key] = nv
        return out

    def _build(self) -> None:
        n, M = self.spec.n, self.M
        one = {(0, 0): CycloScalar.one(n)}
        blocks: dict[Index, _Block] = {}
        raw = []
        done = set()
        for p in self.window:
            if p in done:
                continue
            pbar = ((-p[0]) % M, (-p[1]) % M)
            done |= {p, pbar}
            cols = {}
            for slot in {p, pbar}:
                cols[slot] = self.split(to_quantum_torus(self.basis_element(slot)))
            if p == pbar:
                den = cols[p].get(p, {})
                beta = {p: den}
            else:
                bp = cols[p].get(pbar, {})
                bpbar = cols[pbar].get(p, {})
                den = _q_sub(one, _q_mul(bp, bpbar, self.spec))
                beta = {p: bp, pbar: bpbar}
            raw.append((tuple(sorted({p, pbar})), beta, den))
        # common central denominator
        norms = []
        for _, _, den in raw:
            nrm = _q_mul(den, _sigma(den), self.spec)
            norms.append(nrm)
        norms.sort(key=len, reverse=True)
        delta = one
        for nrm in norms:
            if center_divide(delta, nrm, self.spec) is None:
                delta = _q_mul(delta, nrm, self.spec)
        self.delta = delta
        for slots, beta, den in raw:
            cof = center_divide(delta, den, self.spec)
            assert cof is not None
            blk = _Block(slots, beta, den, cof)
            for s in slots:
                blocks[s] = blk
        self.blocks = blocks

    def numerators(self, x: TorusSkein, only: Optional[Iterable[Index]] = None) -> dict[Index, QElem]:
        """Central N_p with delta * x = sum_p N_p b_p."""
        coords = self.split(to_quantum_torus(x))
        wanted = set(self.window if only is None else only)
        out: dict[Index, QElem] = {}
        for p in wanted:
            blk = self.blocks[p]
            cp = coords.get(p, {})
            if len(blk.slots) == 1:
                num = cp
            else:
                pbar = blk.slots[0] if blk.slots[1] == p else blk.slots[1]
                num = _q_sub(cp, _q_mul(blk.beta[pbar], coords.get(pbar, {}), self.spec))
            out[p] = _q_mul(num, blk.cofactor, self.spec)
        return out


@lru_cache(maxsize=64)
def center_window(spec: RootSpec) -> CenterWindow:
    return CenterWindow(spec)


@dataclass(frozen=True)
class WindowExpansion:
    """denominator * x = sum over the window of coefficients[p] * b_p.

    All coefficients and the denominator are central.  The denominator is
    the unit whenever the coefficients divide exactly.
    """

    denominator: TorusSkein
    coefficients: dict

    def expand(self, spec: RootSpec) -> TorusSkein:
        """sum_p coefficients[p] * b_p (equal to denominator * x)."""
        w = center_window(spec)
        acc = TorusSkein.zero(spec.n)
        for p, z in self.coefficients.items():
            acc = acc + product(z, w.basis_element(p), spec)
        return acc


def rewrite_to_window(x: TorusSkein, spec: RootSpec) -> WindowExpansion:
    """Express x over the window basis with central coefficients."""
    w = center_window(spec)
    nums = w.numerators(x)
    quots = {}
    for p, num in nums.items():
        q = center_divide(num, w.delta, spec) if num else {}
        if q is None:
            quots = None
            break
        quots[p] = q
    if quots is not None:
        coeffs = {p: from_quantum_torus(q, spec.n) for p, q in sorted(quots.items()) if q}
        return WindowExpansion(TorusSkein.unit(spec.n), coeffs)
    coeffs = {p: from_quantum_torus(q, spec.n) for p, q in sorted(nums.items()) if q}
    return WindowExpansion(from_quantum_torus(w.delta, spec.n), coeffs)


def reduced_trace(x: TorusSkein, spec: RootSpec) -> TorusSkein:
    """Trace of left multiplication by x over the center, divided by M^2.

    The diagonal entry at window slot q is N_q(x * b_q) / delta; the sum of
    the numerators is divided exactly by delta * M^2.
    """
    w = center_window(spec)
    total: QElem = {}
    for q in w.window:
        col = product(x, w.basis_element(q), spec)
        total = _q_sub(total, _q_scale(w.numerators(col, only=[q])[q], -1))
    if not total:
        return TorusSkein.zero(spec.n)
    tr = center_divide(total, _q_scale(w.delta, w.M * w.M), spec)
    if tr is None:
        raise ArithmeticError("trace is not a central polynomial; window data are inconsistent")
    return from_quantum_torus(tr, spec.n)


def dim_over_center(spec: RootSpec, verify: bool = True) -> int:
    """M^2, after checking that the window spans and has distinct residues mod M."""
    w = center_window(spec)
    M = w.M
    if verify:
        residues = {(r % M, s % M) for r, s in w.window}
        if len(residues) != M * M:
            raise AssertionError("window residues collide")
        for a in range(M + 2):
            for b in range(-M - 1, M + 2):
                x = TorusSkein.e(spec.n, a, b)
                exp = rewrite_to_window(x, spec)
                if exp.expand(spec) != product(exp.denominator, x, spec):
                    raise AssertionError(f"window fails to span e({a},{b})")
    return M * M
