"""Sampling helpers shared by the test modules."""

import itertools
import random
from functools import lru_cache

from skeinlab.normal_curves import decompose, peripheral_vectors
from skeinlab.skein_symbolic import TriangulationModel, are_disjoint
from skeinlab.surface_coords import SurfaceSig, build_standard_triangulation, is_admissible

OPEN_SIGS = [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]
CLOSED_SIGS = [(2, 0), (3, 0)]
ALL_SIGS = OPEN_SIGS[:4] + [(2, 0), (2, 1), (3, 0)]


@lru_cache(maxsize=None)
def triangulation(g, p):
    return build_standard_triangulation(SurfaceSig(g, p))


@lru_cache(maxsize=None)
def small_admissible(g, p, bound=2):
    """Nonzero admissible vectors with entries at most ``bound``."""
    tri = triangulation(g, p)
    out = []
    for v in itertools.product(range(bound + 1), repeat=tri.r):
        if any(v) and is_admissible(v, tri):
            out.append(v)
    return tuple(out)


def random_admissible(rng, g, p, max_sum=2000, terms=6, max_coeff=40):
    """A random admissible vector: a nonnegative combination of small ones."""
    gens = small_admissible(g, p)
    while True:
        v = [0] * len(gens[0])
        for _ in range(rng.randint(1, terms)):
            c = rng.randint(1, max_coeff)
            for i, x in enumerate(rng.choice(gens)):
                v[i] += c * x
        if sum(v) <= max_sum:
            return tuple(v)


@lru_cache(maxsize=None)
def primitive_curves(g, p):
    """Non-peripheral connected curves among the small admissible vectors."""
    tri = triangulation(g, p)
    periph = set(peripheral_vectors(tri))
    out = []
    for v in small_admissible(g, p):
        comps = list(decompose(tri, v))
        if len(comps) == 1 and comps[0][1] == 1 and v not in periph:
            out.append(v)
    return tuple(out)


def disjoint_family(g, p, k, seed=0):
    """k pairwise disjoint, pairwise distinct non-peripheral curves."""
    tri = triangulation(g, p)
    model = TriangulationModel(tri)
    curves = list(primitive_curves(g, p))
    random.Random(seed).shuffle(curves)

    def extend(chosen):
        if len(chosen) == k:
            return chosen
        for c in curves:
            if c in chosen:
                continue
            if all(are_disjoint(model, c, d) for d in chosen):
                total = model.assemble([(x, 1) for x in chosen + [c]])
                if len(list(decompose(tri, total))) == len(chosen) + 1:
                    found = extend(chosen + [c])
                    if found:
                        return found
        return None

    return extend([])
