"""Skein elements in the diagram basis and the threaded Chebyshev basis.

A simple diagram is a disjoint union of curves C_j with multiplicities l_j,
so as a skein it is the commuting product of the powers C_j^(l_j).  The
threaded element T(alpha) replaces each power by T_(l_j)(C_j).  Both bases
are indexed by the same keys, and the change of basis runs component by
component since disjoint curves never cross.

Keys and their decomposition come from a diagram model: edge coordinates
on an ideal triangulation, or the (a,b) indices of curves on the torus.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Any, Hashable, Iterable, Mapping, Optional, Protocol

from .chebyshev import cheb_T, power_to_cheb_unit
from .cyclotomic import CycloScalar, RootSpec, root_spec
from .exceptions import InadmissibleError, UnsupportedError
from .normal_curves import decompose, merge
from .poly import Poly
from .residue_degree import is_central as _is_central_diagram
from .surface_coords import PantsDatum, Triangulation, is_admissible, load_surface, surface_from_json, surface_to_json
from .torus_algebra import TorusSkein, canonical, product

Key = Hashable
DIAGRAM = "diagram"
CHEBYSHEV = "chebyshev"


class DiagramModel(Protocol):
    empty: Key

    def check(self, key: Any) -> Key: ...

    def components(self, key: Key) -> list[tuple[Key, int]]: ...

    def assemble(self, parts: Iterable[tuple[Key, int]]) -> Key: ...

    def is_central(self, key: Key, spec: RootSpec) -> bool: ...


class TriangulationModel:
    """Simple diagrams on a punctured surface, keyed by edge coordinates."""

    def __init__(self, tri: Triangulation):
        self.tri = tri
        self.empty = (0,) * tri.r

    def check(self, key: Any) -> tuple[int, ...]:
        key = tuple(int(x) for x in key)
        if not is_admissible(key, self.tri):
            raise InadmissibleError(f"{key} is not admissible")
        return key

    def components(self, key: tuple[int, ...]) -> list[tuple[Key, int]]:
        return list(decompose(self.tri, key))

    def assemble(self, parts: Iterable[tuple[Key, int]]) -> tuple[int, ...]:
        out = list(self.empty)
        for vec, mult in parts:
            for i, x in enumerate(vec):
                out[i] += mult * x
        return tuple(out)

    def is_central(self, key: tuple[int, ...], spec: RootSpec) -> bool:
        return _is_central_diagram(self.tri, key, spec)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TriangulationModel) and other.tri == self.tri

    def __hash__(self) -> int:
        return hash(self.tri)


class TorusModel:
    """Simple diagrams on the torus: d parallel copies of a primitive (a', b')."""

    empty = (0, 0)

    def check(self, key: Any) -> tuple[int, int]:
        a, b = key
        return canonical(int(a), int(b))

    def components(self, key: tuple[int, int]) -> list[tuple[Key, int]]:
        a, b = key
        d = gcd(a, b)
        if d == 0:
            return []
        return [(canonical(a // d, b // d), d)]

    def assemble(self, parts: Iterable[tuple[Key, int]]) -> tuple[int, int]:
        parts = [(k, m) for k, m in parts if m]
        if len({k for k, _ in parts}) > 1:
            raise ValueError("torus diagrams consist of parallel copies of one curve")
        a = sum(m * k[0] for k, m in parts)
        b = sum(m * k[1] for k, m in parts)
        return canonical(a, b)

    def is_central(self, key: tuple[int, int], spec: RootSpec) -> bool:
        return key[0] % spec.M == 0 and key[1] % spec.M == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TorusModel)

    def __hash__(self) -> int:
        return hash("torus")


def model_for(datum: Any) -> DiagramModel:
    if isinstance(datum, Triangulation):
        return TriangulationModel(datum)
    if datum == "torus":
        return TorusModel()
    if isinstance(datum, PantsDatum):
        raise UnsupportedError("closed surfaces of genus >= 2 have no curve decomposition here")
    raise TypeError(f"no diagram model for {datum!r}")


class SkeinElement:
    """A finite combination of diagram keys in one of the two bases."""

    __slots__ = ("model", "n", "basis", "terms")

    def __init__(self, model: DiagramModel, n: int, terms: Optional[Mapping[Any, Any]] = None, basis: str = DIAGRAM):
        if basis not in (DIAGRAM, CHEBYSHEV):
            raise ValueError(f"unknown basis {basis!r}")
        self.model = model
        self.n = n
        self.basis = basis
        clean: dict[Key, CycloScalar] = {}
        for k, c in (terms or {}).items():
            key = model.check(k)
            c = c if isinstance(c, CycloScalar) else CycloScalar.rational(n, c)
            clean[key] = clean[key] + c if key in clean else c
        self.terms = {k: v for k, v in sorted(clean.items()) if not v.is_zero()}

    def _like(self, terms: Mapping[Key, CycloScalar], basis: Optional[str] = None) -> "SkeinElement":
        return SkeinElement(self.model, self.n, terms, basis or self.basis)

    def _check_compatible(self, other: "SkeinElement") -> None:
        if self.model != other.model or self.n != other.n or self.basis != other.basis:
            raise ValueError("skein elements live on different surfaces, roots or bases")

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        self._check_compatible(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return self._like(out)

    def __neg__(self) -> "SkeinElement":
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + (-other)

    def scale(self, c: Any) -> "SkeinElement":
        return self._like({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return (self.model, self.n, self.basis, self.terms) == (other.model, other.n, other.basis, other.terms)

    def __hash__(self) -> int:
        return hash((self.n, self.basis, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.terms.items())
        return f"SkeinElement({self.basis}, n={self.n}, {{{body}}})"


def _transform(x: SkeinElement, per_component, basis: str) -> SkeinElement:
    """Apply a one-variable basis change to every component multiplicity."""
    out: dict[Key, CycloScalar] = {}
    model = x.model
    for key, coeff in x.terms.items():
        comps = model.components(key)
        factors = [[(i, c) for i, c in enumerate(per_component(mult)) if c] for _, mult in comps]
        for choice in itertools.product(*factors):
            weight = Fraction(1)
            parts = []
            for (curve, _), (i, c) in zip(comps, choice):
                weight *= c
                parts.append((curve, i))
            new_key = model.assemble(parts)
            term = coeff * weight
            out[new_key] = out[new_key] + term if new_key in out else term
    return SkeinElement(model, x.n, out, basis)


def _power_row(l: int) -> list[Fraction]:
    return power_to_cheb_unit(Poly.monomial(l, Fraction(1)))


def _cheb_row(l: int) -> list[Fraction]:
    # T_l as a polynomial in x, where x^0 is the empty diagram
    return [Fraction(c) for c in cheb_T(l).coeffs]


def to_chebyshev(x: SkeinElement) -> SkeinElement:
    """Rewrite a diagram-basis element over the threaded basis T(alpha)."""
    if x.basis != DIAGRAM:
        raise ValueError("expected a diagram-basis element")
    return _transform(x, _power_row, CHEBYSHEV)


def from_chebyshev(x: SkeinElement) -> SkeinElement:
    if x.basis != CHEBYSHEV:
        raise ValueError("expected a Chebyshev-basis element")
    return _transform(x, _cheb_row, DIAGRAM)


def trace_project(x: SkeinElement, spec: RootSpec) -> SkeinElement:
    """Keep the central threaded terms; returned in the basis of x."""
    if spec.n != x.n:
        raise ValueError("root of unity mismatch")
    cheb = x if x.basis == CHEBYSHEV else to_chebyshev(x)
    kept = {k: v for k, v in cheb.terms.items() if x.model.is_central(k, spec)}
    out = SkeinElement(x.model, x.n, kept, CHEBYSHEV)
    return out if x.basis == CHEBYSHEV else from_chebyshev(out)


def lead_term_open(x: SkeinElement) -> tuple[tuple[int, ...], CycloScalar]:
    """Maximal key under the order v -> (sum(v), v), and its coefficient."""
    if not isinstance(x.model, TriangulationModel):
        raise UnsupportedError("lead terms are defined for punctured surfaces")
    if x.is_zero():
        raise ValueError("the zero element has no lead term")
    key = max(x.terms, key=lambda v: (sum(v), v))
    return key, x.terms[key]


def are_disjoint(model: DiagramModel, a: Key, b: Key) -> bool:
    """Whether the diagrams a and b can be realized disjointly.

    On a triangulation this holds when tracing a + b yields the union of
    the components of a and of b.
    """
    if isinstance(model, TriangulationModel):
        total = model.assemble([(a, 1), (b, 1)])
        return tuple(decompose(model.tri, total)) == tuple(merge(decompose(model.tri, a), decompose(model.tri, b)))
    ca, cb = model.components(a), model.components(b)
    return not ca or not cb or ca[0][0] == cb[0][0]


def disjoint_product(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    """Product of diagram-basis elements whose keys are pairwise disjoint."""
    x._check_compatible(y)
    if x.basis != DIAGRAM:
        raise ValueError("expected diagram-basis elements")
    out: dict[Key, CycloScalar] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            if not are_disjoint(x.model, a, b):
                raise UnsupportedError(f"diagrams {a} and {b} intersect")
            key = x.model.assemble([(a, 1), (b, 1)])
            out[key] = out[key] + ca * cb if key in out else ca * cb
    return x._like(out)


# torus dictionary

def torus_skein(x: SkeinElement, spec: RootSpec) -> TorusSkein:
    """The torus element represented by x.

    The Chebyshev key (a,b) is e(a,b), except that the empty diagram is the
    unit; the diagram key (a,b) with gcd d is e(a/d, b/d)^d.
    """
    if not isinstance(x.model, TorusModel):
        raise ValueError("not a torus element")
    n = spec.n
    unit = TorusSkein.unit(n)
    acc = TorusSkein.zero(n)
    for key, c in x.terms.items():
        if key == (0, 0):
            term = unit
        elif x.basis == CHEBYSHEV:
            term = TorusSkein.e(n, *key)
        else:
            [(prim, d)] = x.model.components(key)
            curve = TorusSkein.e(n, *prim)
            term = curve
            for _ in range(d - 1):
                term = product(term, curve, spec)
        acc = acc + term.scale(c)
    return acc


# serialization

def _surface_field(model: DiagramModel, surface_ref: Optional[str]) -> Any:
    if isinstance(model, TorusModel):
        return "torus"
    if surface_ref is not None:
        return surface_ref
    return surface_to_json(model.tri)  # type: ignore[attr-defined]


def skein_to_json(x: SkeinElement, surface_ref: Optional[str] = None) -> dict:
    return {
        "surface": _surface_field(x.model, surface_ref),
        "n": x.n,
        "basis": x.basis,
        "terms": [{"coords": list(k), "coeff": c.to_json()} for k, c in x.terms.items()],
    }


def _coeff_from_json(n: int, c: Any) -> CycloScalar:
    if isinstance(c, list):
        return CycloScalar.from_json(n, c)
    return CycloScalar.rational(n, Fraction(str(c)))


def skein_from_json(obj: Mapping[str, Any], base_dir: Optional[Path] = None, n: Optional[int] = None) -> SkeinElement:
    surf = obj["surface"]
    if surf == "torus":
        datum: Any = "torus"
    elif isinstance(surf, str):
        path = Path(surf)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        datum = load_surface(str(path))
    else:
        datum = surface_from_json(surf)
    order = int(obj.get("n", n if n is not None else 0))
    if order <= 0:
        raise ValueError("skein file needs a positive root order n")
    model = model_for(datum)
    terms: dict[Key, CycloScalar] = {}
    for item in obj["terms"]:
        key = model.check(item["coords"])
        c = _coeff_from_json(order, item["coeff"])
        terms[key] = terms[key] + c if key in terms else c
    return SkeinElement(model, order, terms, obj.get("basis", DIAGRAM))


def load_skein(path: str, n: Optional[int] = None) -> SkeinElement:
    p = Path(path)
    with p.open() as fh:
        return skein_from_json(json.load(fh), p.parent, n)


def dump_skein(x: SkeinElement, path: str, surface_ref: Optional[str] = None) -> None:
    with open(path, "w") as fh:
        json.dump(skein_to_json(x, surface_ref), fh, indent=2, sort_keys=True)
        fh.write("\n")


def element(datum: Any, n: int, terms: Mapping[Any, Any], basis: str = DIAGRAM) -> SkeinElement:
    return SkeinElement(model_for(datum), n, terms, basis)


__all__ = [
    "CHEBYSHEV",
    "DIAGRAM",
    "DiagramModel",
    "SkeinElement",
    "TorusModel",
    "TriangulationModel",
    "are_disjoint",
    "disjoint_product",
    "dump_skein",
    "element",
    "from_chebyshev",
    "lead_term_open",
    "load_skein",
    "model_for",
    "root_spec",
    "skein_from_json",
    "skein_to_json",
    "to_chebyshev",
    "torus_skein",
    "trace_project",
]
