"""Coordinate lattices, the residue group and the degree map.

For a surface datum and a root of unity this module builds

* ``A_bar``: integer vectors satisfying the triangle (or pants) parity rule,
* ``A_partial_bar``: the span of peripheral loops (zero for closed surfaces),
* ``A_ev_bar``: vectors whose F_2 class vanishes in H_1 of the closed surface,
* ``A_zeta_bar``: ``A_partial_bar + m*A_bar``, with ``A_ev_bar`` in place of
  ``A_bar`` when 4 divides the order of zeta.

The residue group is ``A_bar / A_zeta_bar``; its order is compared with the
closed-form dimension count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence, Union

from .cyclotomic import RootSpec
from .exceptions import InadmissibleError
from .lattice import (
    LatticeSubgroup,
    Quotient,
    determinant,
    f2_nullspace,
    f2_rank,
    index,
    preimage_lattice,
)
from .normal_curves import decompose, is_even_parity, peripheral_vectors
from .surface_coords import Datum, PantsDatum, SurfaceSig, Triangulation, is_admissible

Vector = tuple[int, ...]

# An even-class model maps a closed-surface datum to a spanning set of the
# F_2 subspace of parity vectors (n mod 2, t mod 2) that count as even.
EvenClassModel = Callable[[PantsDatum], list[Vector]]


class EvenModelError(RuntimeError):
    """The closed-surface even-class model failed its index check."""


def parity_rows(datum: Datum) -> list[Vector]:
    """One F_2 row per triangle (or pair of pants) encoding the parity rule."""
    r = datum.r
    rows = []
    if isinstance(datum, Triangulation):
        for t in range(len(datum.triangles)):
            row = [0] * r
            for e in datum.triangle_edges(t):
                row[e] = 1
            rows.append(tuple(row))
    else:
        for tri in datum.pants:
            row = [0] * r
            for c in tri:
                row[c] = 1
            rows.append(tuple(row))
    return rows


def default_even_model(datum: PantsDatum) -> list[Vector]:
    """Even parity classes for closed surfaces.

    The class of (n, t) is the class of n in the dual-graph cycle space
    together with sum t_i [P_i] in the span of the pants curves, where the
    curves bounding a common pair of pants sum to zero.  The even classes
    are therefore n = 0 mod 2 and t mod 2 in the span of the pants triples.
    """
    nc = datum.n_curves
    out = []
    for tri in datum.pants:
        v = [0] * (2 * nc)
        for c in tri:
            v[nc + c] = 1
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class CoordinateLattices:
    datum: Datum
    spec: RootSpec
    A_bar: LatticeSubgroup
    A_partial_bar: LatticeSubgroup
    A_ev_bar: LatticeSubgroup
    A_zeta_bar: LatticeSubgroup

    @property
    def is_closed(self) -> bool:
        return isinstance(self.datum, PantsDatum)

    @cached_property
    def residue_quotient(self) -> Quotient:
        return Quotient(self.A_zeta_bar, self.A_bar)


def build_lattices(
    datum: Datum,
    spec: RootSpec,
    even_model: Optional[EvenClassModel] = None,
) -> CoordinateLattices:
    r = datum.r
    A_bar = preimage_lattice(f2_nullspace(parity_rows(datum), r), r)
    g = datum.sig.g
    if isinstance(datum, Triangulation):
        periph = peripheral_vectors(datum)
        A_partial = LatticeSubgroup.of(r, periph)
        A_ev = preimage_lattice(periph, r)
    else:
        model = even_model or default_even_model
        A_partial = LatticeSubgroup.zero(r)
        A_ev = preimage_lattice(model(datum), r)
        if not A_bar.contains_lattice(A_ev):
            raise EvenModelError("even-class model produced vectors outside A_bar")
    ev_index = index(A_ev, A_bar)
    if ev_index != 2 ** (2 * g):
        raise EvenModelError(f"[A_bar : A_ev_bar] = {ev_index}, expected 2^{2 * g}")
    base = A_ev if spec.case_div4 else A_bar
    A_zeta = A_partial + base.scaled(spec.m)
    return CoordinateLattices(datum, spec, A_bar, A_partial, A_ev, A_zeta)


def D_formula(sig: SurfaceSig, spec: RootSpec) -> int:
    """Dimension of the skein algebra over its center."""
    if sig.g == 1 and sig.p == 0:
        return spec.M ** 2
    if not sig.is_hyperbolic:
        raise ValueError(f"no dimension formula for F_{{{sig.g},{sig.p}}}")
    d = spec.m ** (6 * sig.g - 6 + 2 * sig.p)
    return d * 2 ** (2 * sig.g) if spec.case_div4 else d


def residue_order(lat: CoordinateLattices) -> int:
    return lat.residue_quotient.descriptor.order  # type: ignore[return-value]


def open_index_exponent(sig: SurfaceSig) -> int:
    """log_2 [Z^r : A_bar]: 4g-5+2p for punctured surfaces, 2g-3 for closed ones."""
    return 2 * sig.g - 3 if sig.p == 0 else 4 * sig.g - 5 + 2 * sig.p


# centrality

def is_central(datum: Datum, v: Sequence[int], spec: RootSpec) -> bool:
    """Whether the simple diagram with coordinates v is central at zeta.

    For punctured surfaces this reads the decomposition: every
    non-peripheral multiplicity must be divisible by m, and when 4 | n the
    m-th root of the non-peripheral part must be even.  For closed surfaces
    no decomposition is available; the test is v in m*A (or m*A_ev), which
    depends on the even-class model in the 4 | n case.
    """
    if not is_admissible(v, datum):
        raise InadmissibleError(f"{tuple(v)} is not admissible")
    if isinstance(datum, Triangulation):
        periph = set(peripheral_vectors(datum))
        root = [0] * datum.r
        for vec, mult in decompose(datum, v):
            if vec in periph:
                continue
            if mult % spec.m:
                return False
            for i, x in enumerate(vec):
                root[i] += (mult // spec.m) * x
        return not spec.case_div4 or is_even_parity(datum, root)
    if any(x % spec.m for x in v):
        return False
    lat = build_lattices(datum, spec)
    w = tuple(x // spec.m for x in v)
    return lat.A_ev_bar.contains(w) if spec.case_div4 else lat.A_bar.contains(w)


# stable Dehn-Thurston data for closed surfaces

@dataclass(frozen=True)
class StableDT:
    """Stable coordinates: nu(h_Omega^k(alpha)) = k*mu + eta for large k."""

    mu: Vector
    eta: Vector
    omega_intersections: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.mu) != len(self.eta) or len(self.mu) % 2:
            raise ValueError("mu and eta must have the same even length")
        half = len(self.mu) // 2
        if any(self.mu[half:]):
            raise ValueError("the twist part of mu must vanish")
        if any(x < 0 for x in self.omega_intersections):
            raise ValueError("intersection numbers are nonnegative")


OmegaData = Sequence[tuple[int, Sequence[int]]]


def _mu_from(omega_data: OmegaData, r: int) -> Vector:
    mu = [0] * r
    for inter, nu_o in omega_data:
        if len(nu_o) != r:
            raise ValueError("coordinate length mismatch in omega data")
        if any(nu_o[r // 2:]):
            raise ValueError("components of Omega have zero twist coordinates")
        for i, x in enumerate(nu_o):
            mu[i] += inter * x
    return tuple(mu)


def stable_dt(eta: Sequence[int], omega_data: OmegaData = ()) -> StableDT:
    """Assemble stable coordinates from eta and the pairs (I(alpha, o_j), nu(o_j))."""
    r = len(eta)
    return StableDT(_mu_from(omega_data, r), tuple(eta), tuple(i for i, _ in omega_data))


def pants_curve_stable_dt(datum: PantsDatum, j: int, omega_data: OmegaData = ()) -> StableDT:
    """Stable coordinates of the pants curve P_j: eta = (0, -delta_j)."""
    nc = datum.n_curves
    if not 0 <= j < nc:
        raise ValueError("pants curve index out of range")
    eta = [0] * (2 * nc)
    eta[nc + j] = -1
    return stable_dt(eta, omega_data)


def twist_update(s: StableDT, k: int, omega_data: OmegaData) -> StableDT:
    """eta after k more twists along Omega: eta + k * sum I(alpha, o_j) nu(o_j)."""
    shift = _mu_from(omega_data, len(s.eta))
    if shift != s.mu and s.omega_intersections:
        raise ValueError("omega data disagree with the stored mu")
    return StableDT(s.mu, tuple(e + k * d for e, d in zip(s.eta, shift)), s.omega_intersections)


# degree map

def deg_zeta(lat: CoordinateLattices, v: Union[Sequence[int], StableDT]) -> tuple[int, ...]:
    """Residue class in A_bar / A_zeta_bar of nu (punctured) or eta (closed).

    A plain vector on a closed surface is read as eta, which coincides with
    nu for diagrams disjoint from Omega.
    """
    if isinstance(v, StableDT):
        if not lat.is_closed:
            raise ValueError("stable coordinates only apply to closed surfaces")
        x = v.eta
    else:
        x = tuple(v)
        if not lat.is_closed and not is_admissible(x, lat.datum):
            raise InadmissibleError(f"{x} is not admissible")
    return lat.residue_quotient.reduce(x)


@dataclass(frozen=True)
class Certificate:
    independent: bool
    witness: Optional[tuple[int, int]] = None
    residues: tuple[tuple[int, ...], ...] = field(default=(), repr=False)


def independence_certificate(lat: CoordinateLattices, vs: Iterable[Sequence[int]]) -> Certificate:
    """Pairwise distinct degrees certify independence over the center."""
    seen: dict[tuple[int, ...], int] = {}
    residues = []
    for i, v in enumerate(vs):
        res = deg_zeta(lat, v)
        residues.append(res)
        if res in seen:
            return Certificate(False, (seen[res], i), tuple(residues))
        seen[res] = i
    return Certificate(True, None, tuple(residues))


def commutative_window(lat: CoordinateLattices, curves: Sequence[Sequence[int]]) -> list[Vector]:
    """Monomials C^n spanning the subalgebra generated by disjoint non-peripheral curves.

    Exponents run over [0, m); when 4 | n the first curves whose classes
    are F_2-independent in H_1 of the closed surface get the range [0, 2m).
    """
    tri = lat.datum
    if not isinstance(tri, Triangulation):
        raise ValueError("commutative windows need a triangulated surface")
    m = lat.spec.m
    k = len(curves)
    ranges = [m] * k
    if lat.spec.case_div4:
        periph = [tuple(x % 2 for x in p) for p in peripheral_vectors(tri)]
        chosen: list[Vector] = []
        base = f2_rank(periph) if periph else 0
        for i, c in enumerate(curves):
            trial = periph + chosen + [tuple(x % 2 for x in c)]
            if f2_rank(trial) > base + len(chosen):
                chosen.append(tuple(x % 2 for x in c))
                ranges[i] = 2 * m
    out = []
    for exps in itertools.product(*(range(R) for R in ranges)):
        vec = [0] * tri.r
        for e, c in zip(exps, curves):
            for j, x in enumerate(c):
                vec[j] += e * x
        out.append(tuple(vec))
    return out


# spanning determinant check

def spanning_check(sig: SurfaceSig, M: Sequence[Sequence[int]]) -> bool:
    """|det M| equals 2^(4g-5+2p) (punctured) or 2^(2g-3) on 3g-3 curves (closed)."""
    size = 3 * sig.g - 3 if sig.p == 0 else sig.n_edges
    if len(M) != size or any(len(row) != size for row in M):
        raise ValueError(f"expected a {size}x{size} matrix")
    return abs(determinant(M)) == 2 ** open_index_exponent(sig)
