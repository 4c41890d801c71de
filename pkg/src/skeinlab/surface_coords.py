"""Combinatorial surface data and admissibility of coordinate vectors.

Punctured surfaces carry an ideal triangulation.  Each triangle lists its
three sides counterclockwise; a side is a pair ``(edge, direction)`` where
direction +1 means the side runs along the edge's own orientation (from
``edge_punctures[e][0]`` to ``edge_punctures[e][1]``) and -1 means against
it.  The two sides of an edge always carry opposite directions, so a point
at position p on one side (counted from the side's start) is glued to
position n_e + 1 - p on the partner side.

Closed surfaces carry a pants decomposition: 3g-3 curves and 2g-2 triples
of curve indices, one per pair of pants.  Coordinate vectors for closed
surfaces are (n, t) with the intersection part n first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence, Union

Side = tuple[int, int]


@dataclass(frozen=True)
class SurfaceSig:
    g: int
    p: int

    def __post_init__(self) -> None:
        if self.g < 0 or self.p < 0:
            raise ValueError("genus and puncture count must be nonnegative")

    @property
    def euler(self) -> int:
        return 2 - 2 * self.g - self.p

    @property
    def is_hyperbolic(self) -> bool:
        return self.euler < 0

    @property
    def n_edges(self) -> int:
        """Edge count of an ideal triangulation, 6g - 6 + 3p."""
        return 6 * self.g - 6 + 3 * self.p

    @property
    def n_triangles(self) -> int:
        return 4 * self.g - 4 + 2 * self.p


class _DSU:
    def __init__(self) -> None:
        self.parent: dict[Any, Any] = {}

    def find(self, a: Any) -> Any:
        self.parent.setdefault(a, a)
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: Any, b: Any) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class Triangulation:
    """An ideal triangulation of F_{g,p} with p >= 1."""

    sig: SurfaceSig
    triangles: tuple[tuple[Side, Side, Side], ...]
    edge_punctures: tuple[tuple[int, int], ...]
    _edge_sides: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        sig = self.sig
        if sig.p < 1:
            raise ValueError("a triangulation needs at least one puncture")
        if not sig.is_hyperbolic:
            raise ValueError(f"F_{{{sig.g},{sig.p}}} has nonnegative Euler characteristic")
        r = len(self.edge_punctures)
        if r != sig.n_edges:
            raise ValueError(f"expected {sig.n_edges} edges, got {r}")
        if len(self.triangles) != sig.n_triangles:
            raise ValueError(f"expected {sig.n_triangles} triangles, got {len(self.triangles)}")
        uses: list[list[tuple[int, int, int]]] = [[] for _ in range(r)]
        for t, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise ValueError("triangles must have three sides")
            edges = [s[0] for s in tri]
            if len(set(edges)) != 3:
                raise ValueError(f"triangle {t} is self-folded or degenerate")
            for k, (e, d) in enumerate(tri):
                if not 0 <= e < r or d not in (1, -1):
                    raise ValueError(f"bad side {(e, d)} in triangle {t}")
                uses[e].append((t, k, d))
        for e, u in enumerate(uses):
            if len(u) != 2:
                raise ValueError(f"edge {e} is used by {len(u)} sides, expected 2")
            if u[0][2] == u[1][2]:
                raise ValueError(f"edge {e} is glued with matching directions (non-orientable)")
        for t, tri in enumerate(self.triangles):
            for k in range(3):
                if self.side_end(tri[k]) != self.side_start(tri[(k + 1) % 3]):
                    raise ValueError(f"triangle {t}: corner {(k + 1) % 3} has inconsistent puncture labels")
        labels = {q for pair in self.edge_punctures for q in pair}
        if labels != set(range(sig.p)):
            raise ValueError(f"puncture labels {sorted(labels)} do not match p={sig.p}")
        object.__setattr__(self, "_edge_sides", tuple(tuple(u) for u in uses))

    @property
    def r(self) -> int:
        return len(self.edge_punctures)

    def side_start(self, side: Side) -> int:
        e, d = side
        return self.edge_punctures[e][0 if d == 1 else 1]

    def side_end(self, side: Side) -> int:
        e, d = side
        return self.edge_punctures[e][1 if d == 1 else 0]

    def corner_puncture(self, t: int, k: int) -> int:
        """Puncture at corner k of triangle t (the start of side k)."""
        return self.side_start(self.triangles[t][k])

    def edge_sides(self, e: int) -> tuple[tuple[int, int, int], ...]:
        """The two (triangle, side index, direction) uses of edge e."""
        return self._edge_sides[e]

    def triangle_edges(self, t: int) -> tuple[int, int, int]:
        a, b, c = self.triangles[t]
        return a[0], b[0], c[0]


@dataclass(frozen=True)
class PantsDatum:
    """A pants decomposition of a closed genus-g surface, g >= 2."""

    sig: SurfaceSig
    pants: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        g = self.sig.g
        if self.sig.p != 0 or g < 2:
            raise ValueError("pants data describe closed surfaces of genus at least 2")
        if len(self.pants) != 2 * g - 2:
            raise ValueError(f"expected {2 * g - 2} pants, got {len(self.pants)}")
        ncurves = 3 * g - 3
        count = [0] * ncurves
        for j, tri in enumerate(self.pants):
            if len(tri) != 3 or len(set(tri)) != 3:
                raise ValueError(f"pants {j} must have three distinct boundary curves")
            for c in tri:
                if not 0 <= c < ncurves:
                    raise ValueError(f"curve index {c} out of range")
                count[c] += 1
        if any(c != 2 for c in count):
            raise ValueError("every pants curve must bound exactly two pants")
        dsu = _DSU()
        for j in range(len(self.pants)):
            dsu.find(j)
        for a, b in self.dual_graph:
            dsu.union(a, b)
        if len({dsu.find(j) for j in range(len(self.pants))}) != 1:
            raise ValueError("dual graph is disconnected")

    @property
    def n_curves(self) -> int:
        return 3 * self.sig.g - 3

    @property
    def r(self) -> int:
        """Length of a Dehn-Thurston coordinate vector, 6g - 6."""
        return 2 * self.n_curves

    @property
    def dual_graph(self) -> tuple[tuple[int, int], ...]:
        """For each curve, the two pants it bounds (vertex pair of the dual graph)."""
        ends: list[list[int]] = [[] for _ in range(self.n_curves)]
        for j, tri in enumerate(self.pants):
            for c in tri:
                ends[c].append(j)
        return tuple((a[0], a[1]) for a in ends)


Datum = Union[Triangulation, PantsDatum]


# builders

def _assemble(sig: SurfaceSig, tris: list[list[Side]], n_edges: int) -> Triangulation:
    """Label punctures by identifying corners, then freeze the triangulation."""
    dsu = _DSU()
    for e in range(n_edges):
        dsu.find((e, 0))
        dsu.find((e, 1))

    def start(s: Side) -> tuple[int, int]:
        return (s[0], 0 if s[1] == 1 else 1)

    def end(s: Side) -> tuple[int, int]:
        return (s[0], 1 if s[1] == 1 else 0)

    for tri in tris:
        for k in range(3):
            dsu.union(end(tri[k]), start(tri[(k + 1) % 3]))
    roots: dict[Any, int] = {}
    for e in range(n_edges):
        for i in (0, 1):
            roots.setdefault(dsu.find((e, i)), len(roots))
    if len(roots) != sig.p:
        raise AssertionError(f"builder produced {len(roots)} punctures, expected {sig.p}")
    ep = tuple((roots[dsu.find((e, 0))], roots[dsu.find((e, 1))]) for e in range(n_edges))
    return Triangulation(sig, tuple(tuple(t) for t in tris), ep)  # type: ignore[arg-type]


def _polygon_fan(g: int, apex: int) -> tuple[list[list[Side]], int]:
    """Fan triangulation of the 4g-gon with word a1 b1 a1^-1 b1^-1 ... (one vertex)."""
    word: list[Side] = []
    for i in range(g):
        a, b = 2 * i, 2 * i + 1
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    N = 4 * g
    word = word[apex:] + word[:apex]
    next_edge = 2 * g
    diag: dict[int, int] = {}
    for j in range(2, N - 1):
        diag[j] = next_edge
        next_edge += 1
    tris: list[list[Side]] = []
    for j in range(1, N - 1):
        first = word[0] if j == 1 else (diag[j], 1)
        last = word[N - 1] if j + 1 == N - 1 else (diag[j + 1], -1)
        tris.append([first, word[j], last])
    return tris, next_edge


def _three_punctured_sphere() -> tuple[list[list[Side]], int]:
    return [[(0, 1), (1, 1), (2, 1)], [(2, -1), (1, -1), (0, -1)]], 3


def _stellar(tris: list[list[Side]], n_edges: int, t: int) -> int:
    """Insert a new puncture inside triangle t (one triangle becomes three)."""
    s0, s1, s2 = tris[t]
    f0, f1, f2 = n_edges, n_edges + 1, n_edges + 2
    tris[t] = [s0, (f1, 1), (f0, -1)]
    tris.append([s1, (f2, 1), (f1, -1)])
    tris.append([s2, (f0, 1), (f2, -1)])
    return n_edges + 3


def _edge_split(tris: list[list[Side]], n_edges: int, e: int) -> int:
    """Insert a new puncture in the middle of edge e (two triangles become four)."""
    loc = {}
    for t, tri in enumerate(tris):
        for k, (ed, d) in enumerate(tri):
            if ed == e:
                loc[d] = (t, k)
    (t1, k1), (t2, k2) = loc[1], loc[-1]
    if t1 == t2:
        raise AssertionError("edge split needs two distinct triangles")
    A = tris[t1][k1:] + tris[t1][:k1]  # (e,+1), x, y
    B = tris[t2][k2:] + tris[t2][:k2]  # (e,-1), u, w
    e2, g1, g2 = n_edges, n_edges + 1, n_edges + 2
    _, x, y = A
    _, u, w = B
    tris[t1] = [(e, 1), (g1, 1), y]
    tris[t2] = [(e2, -1), (g2, 1), w]
    tris.append([(e2, 1), x, (g1, -1)])
    tris.append([(e, -1), u, (g2, -1)])
    return n_edges + 3


def build_triangulation(sig: SurfaceSig, variant: int = 0) -> Triangulation:
    """Deterministic ideal triangulation of F_{g,p}.

    Variant 0 fans a one-vertex polygon from its first vertex (or doubles a
    triangle when g = 0) and adds punctures by subdividing triangles.
    Variant 1 fans from the second vertex and adds punctures by splitting
    edges, which gives a combinatorially different triangulation whenever
    extra punctures are added.
    """
    if sig.p < 1:
        raise ValueError("closed surfaces have no ideal triangulation; use a pants decomposition")
    if not sig.is_hyperbolic:
        raise ValueError(f"F_{{{sig.g},{sig.p}}} is not hyperbolic")
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    if sig.g == 0:
        tris, ne = _three_punctured_sphere()
        extra = sig.p - 3
    else:
        tris, ne = _polygon_fan(sig.g, apex=variant)
        extra = sig.p - 1
    for i in range(extra):
        if variant == 0:
            ne = _stellar(tris, ne, i % len(tris))
        else:
            ne = _edge_split(tris, ne, ne - 1)
    return _assemble(sig, tris, ne)


def build_standard_triangulation(sig: SurfaceSig) -> Triangulation:
    return build_triangulation(sig, 0)


def build_standard_pants(g: int, variant: int = 0) -> PantsDatum:
    """Pants decomposition of the closed genus-g surface.

    Variant 0: the dual graph is a cycle on 2g-2 vertices with chords
    joining vertices 2i and 2i+1 (the theta graph for g = 2).  Variant 1
    joins opposite vertices of the cycle instead (K_4 for g = 3).
    """
    if g < 2:
        raise ValueError("closed pants decompositions need g >= 2")
    V = 2 * g - 2
    edges: list[tuple[int, int]] = [(i, (i + 1) % V) for i in range(V)]
    if variant == 0:
        edges += [(2 * i, 2 * i + 1) for i in range(g - 1)]
    elif variant == 1:
        if V == 2:
            edges += [(0, 1)]
        else:
            edges += [(i, i + V // 2) for i in range(V // 2)]
    else:
        raise ValueError("variant must be 0 or 1")
    incident: list[list[int]] = [[] for _ in range(V)]
    for c, (a, b) in enumerate(edges):
        incident[a].append(c)
        incident[b].append(c)
    return PantsDatum(SurfaceSig(g, 0), tuple(tuple(x) for x in incident))  # type: ignore[arg-type]


def build_datum(sig: SurfaceSig, variant: int = 0) -> Datum:
    """Triangulation for punctured surfaces, pants decomposition for closed ones."""
    if sig.p == 0:
        return build_standard_pants(sig.g, variant)
    return build_triangulation(sig, variant)


# predicates

def _check_len(v: Sequence[int], datum: Datum) -> None:
    if len(v) != datum.r:
        raise ValueError(f"vector has length {len(v)}, expected {datum.r}")


def is_admissible(v: Sequence[int], datum: Datum) -> bool:
    """Membership in the monoid of admissible coordinate vectors."""
    _check_len(v, datum)
    if isinstance(datum, Triangulation):
        if any(x < 0 for x in v):
            return False
        for t in range(len(datum.triangles)):
            i, j, k = datum.triangle_edges(t)
            a, b, c = v[i], v[j], v[k]
            if (a + b + c) % 2 or a > b + c or b > a + c or c > a + b:
                return False
        return True
    nc = datum.n_curves
    n, t = v[:nc], v[nc:]
    if any(x < 0 for x in n):
        return False
    for tri in datum.pants:
        if sum(n[c] for c in tri) % 2:
            return False
    return all(t[i] >= 0 for i in range(nc) if n[i] == 0)


def is_triangular(v: Sequence[int], datum: PantsDatum) -> bool:
    """Admissible closed vectors obeying the pants triangle inequalities, with zero twist at zero n."""
    if not isinstance(datum, PantsDatum):
        raise TypeError("is_triangular applies to closed-surface (pants) coordinates")
    if not is_admissible(v, datum):
        return False
    nc = datum.n_curves
    n, t = v[:nc], v[nc:]
    for a, b, c in datum.pants:
        if n[a] > n[b] + n[c] or n[b] > n[a] + n[c] or n[c] > n[a] + n[b]:
            return False
    return all(t[i] == 0 for i in range(nc) if n[i] == 0)


def peripheral_vector(tri: Triangulation, puncture: int) -> tuple[int, ...]:
    """Coordinates of the loop around a puncture: edge-end counts at that puncture."""
    if not 0 <= puncture < tri.sig.p:
        raise ValueError(f"puncture {puncture} out of range")
    return tuple((a == puncture) + (b == puncture) for a, b in tri.edge_punctures)


# JSON surface files

def surface_to_json(datum: Datum) -> dict:
    if isinstance(datum, Triangulation):
        return {
            "kind": "triangulation",
            "g": datum.sig.g,
            "p": datum.sig.p,
            "triangles": [[list(s) for s in tri] for tri in datum.triangles],
            "edge_punctures": [list(ep) for ep in datum.edge_punctures],
        }
    return {"kind": "pants", "g": datum.sig.g, "p": 0, "pants": [list(t) for t in datum.pants]}


def surface_from_json(obj: dict) -> Datum:
    """Parse a surface description; raises ValueError on malformed data."""
    try:
        kind = obj.get("kind", "pants" if "pants" in obj else "triangulation")
        g, p = int(obj["g"]), int(obj.get("p", 0))
        sig = SurfaceSig(g, p)
        if kind == "triangulation":
            tris = tuple(tuple((int(s[0]), int(s[1])) for s in tri) for tri in obj["triangles"])
            ep = tuple((int(a), int(b)) for a, b in obj["edge_punctures"])
            return Triangulation(sig, tris, ep)  # type: ignore[arg-type]
        if kind == "pants":
            pants = tuple(tuple(int(c) for c in tri) for tri in obj["pants"])
            return PantsDatum(sig, pants)  # type: ignore[arg-type]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed surface description: {exc}") from exc
    raise ValueError(f"unknown surface kind {kind!r}")


def load_surface(path: str) -> Datum:
    with open(path) as fh:
        return surface_from_json(json.load(fh))
