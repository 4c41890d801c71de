"""Normal curves on ideal triangulations.

An admissible edge vector determines a normal multicurve: in each triangle,
the arcs cutting off a corner number (n_j + n_k - n_i)/2, where i is the
side opposite that corner.  Following arcs through the side pairings traces
the components.  Parities of edge vectors live in the cycle space of the
dual spine graph, which models H_1 of the punctured surface over F_2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import max_points
from .exceptions import InadmissibleError, ResourceLimitError
from .surface_coords import Triangulation, is_admissible, peripheral_vector

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """Components of a multicurve with multiplicities, sorted by vector."""

    components: tuple[tuple[Vector, int], ...]

    def recompose(self) -> Vector | None:
        if not self.components:
            return None
        r = len(self.components[0][0])
        out = [0] * r
        for vec, mult in self.components:
            for i, x in enumerate(vec):
                out[i] += mult * x
        return tuple(out)

    def as_dict(self) -> dict[Vector, int]:
        return dict(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


def _require_admissible(tri: Triangulation, v: Sequence[int]) -> None:
    if not is_admissible(v, tri):
        raise InadmissibleError(f"{tuple(v)} is not admissible")


def corner_counts(tri: Triangulation, v: Sequence[int], triangle: int) -> tuple[int, int, int]:
    """Arc counts at corners 0, 1, 2 of a triangle.

    Corner k sits between side k-1 and side k, opposite side k+1.
    """
    _require_admissible(tri, v)
    return _corners(tri, v, triangle)


def _corners(tri: Triangulation, v: Sequence[int], t: int) -> tuple[int, int, int]:
    n = [v[e] for e, _ in tri.triangles[t]]
    return (
        (n[2] + n[0] - n[1]) // 2,
        (n[0] + n[1] - n[2]) // 2,
        (n[1] + n[2] - n[0]) // 2,
    )


def decompose(tri: Triangulation, v: Sequence[int]) -> Decomposition:
    """Trace the normal multicurve of ``v`` and group parallel components."""
    _require_admissible(tri, v)
    v = tuple(v)
    total = sum(v)
    if total > max_points():
        raise ResourceLimitError(f"sum of coordinates {total} exceeds the tracing cap {max_points()}")
    offset = [0] * (tri.r + 1)
    for e in range(tri.r):
        offset[e + 1] = offset[e] + v[e]
    # each point on an edge gets exactly two neighbours, one per adjacent triangle
    nb = [-1] * (2 * total)

    def point(side: tuple[int, int], pos: int) -> int:
        e, d = side
        along = pos if d == 1 else v[e] + 1 - pos
        return offset[e] + along - 1

    def link(a: int, b: int) -> None:
        slot_a = 2 * a if nb[2 * a] < 0 else 2 * a + 1
        slot_b = 2 * b if nb[2 * b] < 0 else 2 * b + 1
        nb[slot_a] = b
        nb[slot_b] = a

    for t, sides in enumerate(tri.triangles):
        counts = _corners(tri, v, t)
        for k in range(3):
            c = counts[k]
            if not c:
                continue
            s_out, s_in = sides[k], sides[k - 1]
            n_in = v[s_in[0]]
            for j in range(1, c + 1):
                link(point(s_out, j), point(s_in, n_in - j + 1))

    seen = bytearray(total)
    tally: dict[Vector, int] = {}
    edge_of = [0] * total
    for e in range(tri.r):
        for i in range(offset[e], offset[e + 1]):
            edge_of[i] = e
    for start in range(total):
        if seen[start]:
            continue
        counts_e = [0] * tri.r
        prev, cur = -1, start
        while True:
            seen[cur] = 1
            counts_e[edge_of[cur]] += 1
            a, b = nb[2 * cur], nb[2 * cur + 1]
            nxt = a if a != prev else b
            if a == b:
                nxt = a
            prev, cur = cur, nxt
            if cur == start:
                break
        key = tuple(counts_e)
        tally[key] = tally.get(key, 0) + 1
    return Decomposition(tuple(sorted(tally.items())))


def peripheral_vectors(tri: Triangulation) -> list[Vector]:
    return [peripheral_vector(tri, q) for q in range(tri.sig.p)]


def is_peripheral_component(tri: Triangulation, c: Sequence[int]) -> bool:
    return tuple(c) in set(peripheral_vectors(tri))


def is_peripheral(tri: Triangulation, v: Sequence[int]) -> bool:
    """True iff every component is a loop around a single puncture."""
    periph = set(peripheral_vectors(tri))
    return all(vec in periph for vec, _ in decompose(tri, v))


def _mask(bits: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b % 2:
            out |= 1 << i
    return out


def _reduce_against(basis: dict[int, int], x: int) -> int:
    while x:
        top = x.bit_length() - 1
        if top not in basis:
            return x
        x ^= basis[top]
    return 0


def _echelon(vectors: Sequence[int]) -> dict[int, int]:
    basis: dict[int, int] = {}
    for vec in vectors:
        x = _reduce_against(basis, vec)
        if x:
            basis[x.bit_length() - 1] = x
    return basis


@dataclass(frozen=True)
class SpineClass:
    """Edge parities of a coordinate vector, an element of the spine cycle space."""

    bits: tuple[int, ...]

    @classmethod
    def of(cls, v: Sequence[int]) -> "SpineClass":
        return cls(tuple(x % 2 for x in v))

    def in_cycle_space(self, tri: Triangulation) -> bool:
        return all(sum(self.bits[e] for e in tri.triangle_edges(t)) % 2 == 0 for t in range(len(tri.triangles)))


def peripheral_parity_basis(tri: Triangulation) -> dict[int, int]:
    """Echelon basis (as bitmasks) of the span of peripheral parities."""
    return _echelon([_mask(p) for p in peripheral_vectors(tri)])


def is_even_parity(tri: Triangulation, v: Sequence[int]) -> bool:
    """The F_2 test behind :func:`is_even`, without admissibility checks."""
    return _reduce_against(peripheral_parity_basis(tri), _mask(v)) == 0


def is_even(tri: Triangulation, v: Sequence[int]) -> bool:
    """True iff the multicurve is zero in H_1 of the filled-in surface over F_2."""
    _require_admissible(tri, v)
    return is_even_parity(tri, v)


def merge(*decs: Decomposition) -> Decomposition:
    """Combine decompositions by adding multiplicities of equal components."""
    tally: dict[Vector, int] = {}
    for d in decs:
        for vec, mult in d:
            tally[vec] = tally.get(vec, 0) + mult
    return Decomposition(tuple(sorted(tally.items())))
